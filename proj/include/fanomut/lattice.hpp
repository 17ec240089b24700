#pragma once

// Exact integer/rational linear algebra and convex geometry in dimension 2
// and 3. Everything here is value-typed and free of shared state.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fanomut/error.hpp"

namespace fanomut {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;  // row-major

IntVector make_vector(std::initializer_list<long> coords);
RatVector to_rational(const IntVector& v);
// Throws NotLattice if some coordinate has a denominator.
IntVector to_integer(const RatVector& v);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const RatVector& a, const IntVector& b);
Integer det2(const IntVector& a, const IntVector& b);
Rational det2(const RatVector& a, const RatVector& b);
Rational det3(const RatVector& a, const RatVector& b, const RatVector& c);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(const Integer& s, const IntVector& a);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& a);

bool is_zero(const IntVector& v);
Integer content(const IntVector& v);  // gcd of coordinates, 0 for the zero vector
bool is_primitive(const IntVector& v);

struct PrimitivePart {
  IntVector direction;
  Integer multiplicity;
};

// v = multiplicity * direction with direction primitive. Throws ZeroVector.
PrimitivePart primitive_part(const IntVector& v);

// Smallest positive integer multiple of v that is integral, then made primitive.
IntVector primitive_direction(const RatVector& v);

std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

// ---------------------------------------------------------------------------
// Matrices

IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(const IntMatrix& a);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
RatVector operator*(const IntMatrix& a, const RatVector& v);
Integer determinant(const IntMatrix& a);
// Matrix whose columns are the given vectors.
IntMatrix from_columns(const std::vector<IntVector>& columns);

/// An integer matrix with determinant +-1, acting on column vectors.
class UnimodularMap {
 public:
  static UnimodularMap identity(std::size_t dim);
  // Throws InvariantViolation unless |det| = 1.
  explicit UnimodularMap(IntMatrix matrix);

  const IntMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.size(); }
  IntVector apply(const IntVector& v) const { return matrix_ * v; }
  RatVector apply(const RatVector& v) const { return matrix_ * v; }
  UnimodularMap inverse() const;
  UnimodularMap then(const UnimodularMap& next) const;  // next * this
  Integer det() const { return determinant(matrix_); }

  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

 private:
  IntMatrix matrix_;
};

/// Row echelon form over Z: transform * input = echelon, echelon upper
/// staircase with positive pivots and entries above each pivot reduced into
/// [0, pivot).
struct RowEchelon {
  IntMatrix echelon;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon row_echelon(const IntMatrix& a);

struct HermiteForm {
  IntMatrix h;
  UnimodularMap u;
};

/// Square nonsingular A. Returns H = U*A lower triangular with positive
/// diagonal and every entry below the diagonal reduced into [0, H_jj) of its
/// column. H is unique for A. Throws RankDeficient.
HermiteForm hermite_normal_form(const IntMatrix& a);

/// Saturated basis (as rows) of {x in Z^n : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t columns);

/// Basis (as rows) of (Q-span of rows) intersected with Z^n.
IntMatrix saturate(const IntMatrix& rows, std::size_t columns);

/// Unimodular n x n matrix whose first rows are `rows`. Throws RankDeficient
/// when the rows do not span a saturated sublattice of the dual.
IntMatrix unimodular_completion(const IntMatrix& rows, std::size_t columns);

IntMatrix inverse_unimodular(const IntMatrix& a);

// ---------------------------------------------------------------------------
// Polytopes

/// Supporting half-space normal . x <= offset; normal is a primitive integer
/// vector pointing outward.
struct Facet {
  IntVector normal;
  Rational offset;
  std::vector<std::size_t> vertices;  // cyclic order around the facet
};

/// Full-dimensional rational polytope in dimension 2 or 3. In dimension 2 the
/// vertices are counter-clockwise starting at the lexicographically least
/// vertex and facet i joins vertex i to vertex i+1. In dimension 3 vertices
/// are sorted lexicographically.
class RationalPolytope {
 public:
  std::size_t dim() const { return dim_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const RatVector& p) const;
  bool contains_origin_strictly() const;
  bool is_lattice() const;
  std::vector<IntVector> integer_vertices() const;  // throws NotLattice

  friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  friend RationalPolytope convex_hull(const std::vector<RatVector>&, std::size_t);
  friend RationalPolytope convex_hull(const std::vector<IntVector>&, std::size_t);
  std::size_t dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<Facet> facets_;
};

/// Irredundant hull of a point set affinely spanning R^dim, dim in {2,3}.
/// Output depends only on the set of points. Throws Degenerate.
RationalPolytope convex_hull(const std::vector<RatVector>& points, std::size_t dim);
RationalPolytope convex_hull(const std::vector<IntVector>& points, std::size_t dim);

/// {u : <u,v> >= -1 for every vertex v}. Throws OriginNotInterior.
RationalPolytope polytope_dual(const RationalPolytope& p);

Rational volume(const RationalPolytope& p);

}  // namespace fanomut
