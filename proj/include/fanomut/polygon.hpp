#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fanomut/lattice.hpp"

namespace fanomut {

/// Lattice polytope with the origin strictly inside and primitive vertices.
/// Dimension 2: counter-clockwise, starting at the lexicographically least
/// vertex. Dimension 3: vertices sorted lexicographically.
class FanoPolytope {
 public:
  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const RationalPolytope& hull() const { return hull_; }

  friend bool operator==(const FanoPolytope& a, const FanoPolytope& b) {
    return a.vertices_ == b.vertices_;
  }
  friend bool operator<(const FanoPolytope& a, const FanoPolytope& b) {
    return a.vertices_ < b.vertices_;
  }

 private:
  friend FanoPolytope make_fano(const std::vector<IntVector>&);
  std::size_t dim_ = 0;
  std::vector<IntVector> vertices_;
  RationalPolytope hull_;
};

/// Validates and normalizes. Points that are not hull vertices are dropped.
/// Throws Degenerate, NonPrimitiveVertex or OriginNotInterior.
FanoPolytope make_fano(const std::vector<IntVector>& points);

FanoPolytope apply(const UnimodularMap& u, const FanoPolytope& p);

struct EdgeData {
  IntVector start;
  IntVector end;
  IntVector normal;     // primitive inward normal, in M
  IntVector direction;  // primitive, counter-clockwise along the boundary, in N
  Integer height;       // edge lies on <normal, x> = -height
  Integer length;       // lattice length
  Integer tcone_count;  // length / height
  Integer residue;      // length mod height
};

std::vector<EdgeData> edges(const FanoPolytope& p);

/// Cyclic quotient singularity 1/R(1,a), normalized so that a is the smaller
/// of a and its inverse modulo R.
struct CyclicType {
  Integer order;
  Integer weight;
  friend bool operator==(const CyclicType& a, const CyclicType& b) {
    return a.order == b.order && a.weight == b.weight;
  }
  friend bool operator<(const CyclicType& a, const CyclicType& b) {
    return a.order != b.order ? a.order < b.order : a.weight < b.weight;
  }
};

struct ResidueCone {
  Integer height;
  Integer width;
  IntVector normal;
  CyclicType cyclic_type;
};

CyclicType cyclic_type_of_cone(const IntVector& ray_a, const IntVector& ray_b);

struct SingularityContent {
  Integer tcone_total;
  std::vector<ResidueCone> basket;

  // Multiset of cyclic types, sorted; baskets compare through this.
  std::vector<CyclicType> basket_types() const;
};

SingularityContent singularity_content(const FanoPolytope& p);
bool same_singularity_content(const SingularityContent& a, const SingularityContent& b);

/// GL(2,Z) normal form: over every oriented pair of cyclically adjacent
/// vertices, the Hermite transform of [v_i v_next] is applied and the cycle
/// read from v_i; the lexicographically least list wins.
struct CanonicalForm {
  std::vector<IntVector> key;  // the least list, in traversal order
  FanoPolytope polygon;        // make_fano(key)
  UnimodularMap transform;     // polygon == transform(input)
};

CanonicalForm canonical_form(const FanoPolytope& p);

/// GL(3,Z) normal form: over every ordered vertex triple spanning Q^3, the
/// Hermite transform of the triple is applied to all vertices; the least
/// sorted list wins. Equal keys imply equivalence.
std::vector<IntVector> equivalence_key_3d(const FanoPolytope& p);

/// Stable 64-bit FNV-1a hash of the canonical vertex list, as 16 hex digits.
std::string polygon_hash(const FanoPolytope& canonical);

}  // namespace fanomut
