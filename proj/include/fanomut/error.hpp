#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fanomut {

enum class ErrorKind {
  ZeroVector,
  RankDeficient,
  Degenerate,
  OriginNotInterior,
  NonPrimitiveVertex,
  NotFano,
  NotDivisible,
  NotLaurent,
  NotConvex,
  NotLattice,
  FrozenVertex,
  InternalNonLaurent,
  SizeLimit,
  NotKronecker,
  NotFanoSupport,
  Incompatible,
  NonPrimitive,
  NotAnnihilating,
  CompatibilityBroken,
  NotInKernel,
  InvariantViolation,
  Parse,
};

std::string_view error_kind_name(ErrorKind kind);

// Single exception type; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Findings are mathematically valid negative results; the rest are
// malformed input or broken internal invariants.
inline bool is_finding(ErrorKind kind) {
  return kind == ErrorKind::NotConvex || kind == ErrorKind::NotLaurent ||
         kind == ErrorKind::NotDivisible || kind == ErrorKind::NotLattice;
}

inline bool is_internal(ErrorKind kind) {
  return kind == ErrorKind::InternalNonLaurent || kind == ErrorKind::CompatibilityBroken ||
         kind == ErrorKind::InvariantViolation;
}

}  // namespace fanomut
