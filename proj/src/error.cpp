#include "fanomut/error.hpp"

namespace fanomut {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::OriginNotInterior: return "OriginNotInterior";
    case ErrorKind::NonPrimitiveVertex: return "NonPrimitiveVertex";
    case ErrorKind::NotFano: return "NotFano";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotLaurent: return "NotLaurent";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::NotLattice: return "NotLattice";
    case ErrorKind::FrozenVertex: return "FrozenVertex";
    case ErrorKind::InternalNonLaurent: return "InternalNonLaurent";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotKronecker: return "NotKronecker";
    case ErrorKind::NotFanoSupport: return "NotFanoSupport";
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::NonPrimitive: return "NonPrimitive";
    case ErrorKind::NotAnnihilating: return "NotAnnihilating";
    case ErrorKind::CompatibilityBroken: return "CompatibilityBroken";
    case ErrorKind::NotInKernel: return "NotInKernel";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace fanomut
