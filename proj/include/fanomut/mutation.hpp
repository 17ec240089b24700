#pragma once

#include "fanomut/laurent.hpp"
#include "fanomut/lattice.hpp"
#include "fanomut/polygon.hpp"

namespace fanomut {

/// Weight w in M and factor f in N with <w,f> = 0, both primitive.
struct MutationData {
  IntVector weight;
  IntVector factor;

  friend bool operator==(const MutationData&, const MutationData&) = default;
};

/// Throws NonPrimitive or NotAnnihilating.
MutationData make_mutation_data(IntVector weight, IntVector factor);

MutationData inverse(const MutationData& d);  // (-w, f)

/// m + max(0, -<m,f>) w. With duals taken as {u : <u,v> >= -1} this is the
/// sign for which Newt(mutated W) dual = T(Newt(W) dual).
RatVector tropical_map(const RatVector& m, const MutationData& d);

/// z^n -> z^n (1 + z^f)^<w,n>. Throws NotLaurent when the image has a pole.
LaurentPolynomial algebraic_mutate(const LaurentPolynomial& w, const MutationData& d);

/// Image of q under tropical_map. Throws NotConvex when the image is not a
/// convex polytope.
RationalPolytope pl_transform(const RationalPolytope& q, const MutationData& d);

/// (T(P dual)) dual. Works in dimension 2 and 3. Throws NotConvex, or
/// NotLattice if the result has non-integral vertices.
FanoPolytope combinatorial_mutate(const FanoPolytope& p, const MutationData& d);

/// Hull of the support. Throws Degenerate.
RationalPolytope newton_polytope(const LaurentPolynomial& w);

}  // namespace fanomut
