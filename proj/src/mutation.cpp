#include "fanomut/mutation.hpp"

#include <algorithm>

namespace fanomut {

MutationData make_mutation_data(IntVector weight, IntVector factor) {
  if (weight.size() != factor.size()) throw Error(ErrorKind::InvariantViolation, "weight and factor dimensions differ");
  if (!is_primitive(weight)) throw Error(ErrorKind::NonPrimitive, "weight " + to_string(weight));
  if (!is_primitive(factor)) throw Error(ErrorKind::NonPrimitive, "factor " + to_string(factor));
  if (dot(weight, factor) != 0)
    throw Error(ErrorKind::NotAnnihilating, "<" + to_string(weight) + "," + to_string(factor) + "> != 0");
  return {std::move(weight), std::move(factor)};
}

MutationData inverse(const MutationData& d) { return {-d.weight, d.factor}; }

RatVector tropical_map(const RatVector& m, const MutationData& d) {
  Rational s = dot(m, d.factor);
  if (s >= 0) return m;
  return m - s * to_rational(d.weight);
}

LaurentPolynomial algebraic_mutate(const LaurentPolynomial& w, const MutationData& d) {
  if (w.dim() != d.factor.size()) throw Error(ErrorKind::InvariantViolation, "dimension mismatch");
  if (w.is_zero()) return w;
  Integer lowest = 0;
  for (const auto& [n, c] : w.terms()) lowest = std::min(lowest, dot(d.weight, n));
  Integer clear = -lowest;

  const LaurentPolynomial binomial = LaurentPolynomial::binomial(d.factor);
  LaurentPolynomial numerator(w.dim());
  for (const auto& [n, c] : w.terms()) {
    Integer power = dot(d.weight, n) + clear;
    numerator += LaurentPolynomial::monomial(n, c) * binomial.pow(power.get_ui());
  }
  try {
    for (Integer i = 0; i < clear; ++i) numerator = laurent_divide_exact(numerator, binomial);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotDivisible) throw;
    throw Error(ErrorKind::NotLaurent, w.to_string() + " under weight " + to_string(d.weight) + ", factor " +
                                           to_string(d.factor));
  }
  return numerator;
}

RationalPolytope pl_transform(const RationalPolytope& q, const MutationData& d) {
  if (q.dim() != d.factor.size()) throw Error(ErrorKind::InvariantViolation, "dimension mismatch");
  const auto& verts = q.vertices();
  std::vector<Rational> side;
  side.reserve(verts.size());
  for (const auto& v : verts) side.push_back(dot(v, d.factor));

  std::vector<RatVector> image;
  for (const auto& v : verts) image.push_back(tropical_map(v, d));
  // Crossings with the hyperplane <.,f> = 0 are fixed and bound both pieces.
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      if (!((side[a] < 0 && side[b] > 0) || (side[a] > 0 && side[b] < 0))) continue;
      Rational t = side[a] / (side[a] - side[b]);
      image.push_back(verts[a] + t * (verts[b] - verts[a]));
    }
  RationalPolytope result = convex_hull(image, q.dim());
  // T preserves volume, so the hull is larger exactly when T(q) is not convex.
  if (volume(result) != volume(q))
    throw Error(ErrorKind::NotConvex, "weight " + to_string(d.weight) + ", factor " + to_string(d.factor));
  return result;
}

FanoPolytope combinatorial_mutate(const FanoPolytope& p, const MutationData& d) {
  RationalPolytope mutated = polytope_dual(pl_transform(polytope_dual(p.hull()), d));
  return make_fano(mutated.integer_vertices());
}

RationalPolytope newton_polytope(const LaurentPolynomial& w) {
  std::vector<IntVector> support = w.support();
  return convex_hull(support, w.dim());
}

}  // namespace fanomut
