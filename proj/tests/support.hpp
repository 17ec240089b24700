#pragma once

// Shared generators for the test suites. All randomness is seeded.

#include <random>
#include <vector>

#include "fanomut/cluster.hpp"
#include "fanomut/lattice.hpp"
#include "fanomut/mutation.hpp"
#include "fanomut/polygon.hpp"

namespace fanomut::testing {

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline UnimodularMap random_unimodular(std::mt19937_64& rng, std::size_t dim, int steps = 6) {
  IntMatrix m = identity_matrix(dim);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(dim) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(dim) - 2));
    if (j >= i) ++j;
    long c = uniform(rng, -2, 2);
    for (std::size_t k = 0; k < dim; ++k) m[i][k] += c * m[j][k];
    if (uniform(rng, 0, 3) == 0) m[i] = -m[i];
  }
  return UnimodularMap(m);
}

// Hull of random primitive points in [-r, r]^dim containing the origin.
inline FanoPolytope random_fano(std::mt19937_64& rng, std::size_t dim, long r = 3, int points = 6) {
  while (true) {
    std::vector<IntVector> pts;
    while (static_cast<int>(pts.size()) < points) {
      IntVector v(dim);
      for (auto& c : v) c = uniform(rng, -r, r);
      if (!is_zero(v) && is_primitive(v)) pts.push_back(v);
    }
    try {
      return make_fano(pts);
    } catch (const Error&) {
    }
  }
}

inline MutationData random_mutation(std::mt19937_64& rng, std::size_t dim) {
  while (true) {
    IntVector w(dim);
    for (auto& c : w) c = uniform(rng, -2, 2);
    if (!is_primitive(w)) continue;
    IntMatrix k = integer_kernel({w}, dim);
    IntVector f(dim, 0);
    for (const auto& row : k) f = f + Integer(uniform(rng, -2, 2)) * row;
    if (is_zero(f)) continue;
    return make_mutation_data(w, primitive_part(f).direction);
  }
}

// Positive combination of slices z^n (1 + z^f)^k with k >= max(0, -<w,n>),
// hence mutable with respect to d.
inline LaurentPolynomial random_mutable(std::mt19937_64& rng, const MutationData& d, int slices) {
  std::size_t dim = d.factor.size();
  LaurentPolynomial p(dim);
  LaurentPolynomial binomial = LaurentPolynomial::binomial(d.factor);
  for (int s = 0; s < slices; ++s) {
    IntVector n(dim);
    for (auto& c : n) c = uniform(rng, -2, 2);
    long h = dot(d.weight, n).get_si();
    unsigned long k = static_cast<unsigned long>(std::max(0L, -h) + uniform(rng, 0, 1));
    p += LaurentPolynomial::monomial(n, uniform(rng, 1, 3)) * binomial.pow(k);
  }
  return p;
}

inline IntVector random_vector(std::mt19937_64& rng, std::size_t m, long r) {
  IntVector v(m);
  for (auto& x : v) x = uniform(rng, -r, r);
  return v;
}

// a b^T - b a^T, plus a second such term when rank allows
inline IntMatrix random_form(std::mt19937_64& rng, std::size_t m, long r) {
  IntMatrix b(m, IntVector(m, 0));
  int terms = m >= 4 && uniform(rng, 0, 1) ? 2 : 1;
  for (int t = 0; t < terms; ++t) {
    IntVector a = random_vector(rng, m, r), c = random_vector(rng, m, r);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) b[i][j] += a[i] * c[j] - c[i] * a[j];
  }
  return b;
}

inline IntMatrix random_kernel_part(std::mt19937_64& rng, const IntMatrix& b) {
  IntMatrix k = integer_kernel(b, b.size());
  IntMatrix v;
  std::size_t r = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(k.size())));
  for (std::size_t t = 0; t < r; ++t) {
    IntVector row(b.size(), 0);
    for (const auto& kr : k) row = row + Integer(uniform(rng, -2, 2)) * kr;
    IntMatrix trial = v;
    trial.push_back(row);
    if (row_echelon(trial).rank == trial.size()) v = trial;
  }
  return v;
}

inline std::vector<IntVector> mutate_basis(const IntMatrix& form, std::vector<IntVector> basis, std::size_t k) {
  std::vector<IntVector> out = basis;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i == k) continue;
    Integer c = skew_form(form, basis[i], basis[k]);
    if (c > 0) out[i] = basis[i] + c * basis[k];
  }
  out[k] = -basis[k];
  return out;
}

}  // namespace fanomut::testing
