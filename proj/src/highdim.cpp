#include "fanomut/highdim.hpp"

#include <algorithm>
#include <random>
#include <tuple>

namespace fanomut {

namespace {

IntMatrix form_of(const std::vector<MutationData>& items) {
  IntMatrix b(items.size(), IntVector(items.size()));
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < items.size(); ++j) b[i][j] = dot(items[i].weight, items[j].factor);
  return b;
}

MutationData scaled_sum(const MutationData& a, const Integer& c, const MutationData& b) {
  return {a.weight + c * b.weight, a.factor + c * b.factor};
}

MutationData negated(const MutationData& d) { return {-d.weight, -d.factor}; }

std::vector<RatVector> sample_points(std::size_t dim) {
  std::vector<RatVector> pts;
  std::vector<long> c(dim, -3);
  while (true) {
    RatVector p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = c[i];
    pts.push_back(p);
    std::size_t i = 0;
    while (i < dim && c[i] == 3) c[i++] = -3;
    if (i == dim) break;
    ++c[i];
  }
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
  for (int t = 0; t < 200; ++t) {
    RatVector p(dim);
    for (auto& x : p) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
    pts.push_back(p);
  }
  return pts;
}

RatVector apply_all(const std::vector<MutationData>& maps, RatVector m) {
  for (const auto& d : maps) m = tropical_map(m, d);
  return m;
}

// Matrix of the composite on the standard basis, if the composite is linear
// on every sample point.
std::optional<IntMatrix> linear_part(const std::vector<MutationData>& maps, std::size_t dim,
                                     const std::vector<RatVector>& samples) {
  IntMatrix cols;
  for (std::size_t i = 0; i < dim; ++i) {
    RatVector e(dim, 0);
    e[i] = 1;
    RatVector img = apply_all(maps, e);
    IntVector col(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      if (img[j].get_den() != 1) return std::nullopt;
      col[j] = img[j].get_num();
    }
    cols.push_back(col);
  }
  IntMatrix l = from_columns(cols);
  for (const auto& p : samples)
    if (apply_all(maps, p) != l * p) return std::nullopt;
  return l;
}

std::tuple<std::size_t, std::size_t, Rational, std::vector<std::size_t>> fingerprint(const RationalPolytope& q) {
  std::vector<std::size_t> sizes;
  for (const auto& f : q.facets()) sizes.push_back(f.vertices.size());
  std::sort(sizes.begin(), sizes.end());
  return {q.vertices().size(), q.facets().size(), volume(q), sizes};
}

RationalFunction monomial_pullback(const Seed& s, const SeedProjection& proj, const IntVector& u) {
  std::size_t m = s.basis.size();
  LaurentPolynomial num = LaurentPolynomial::constant(s.cluster.front().dim(), 1);
  LaurentPolynomial den = num;
  for (std::size_t i = 0; i < m; ++i) {
    Integer e = dot(u, proj.theta(s.basis[i]).weight);
    if (e > 0) num = num * s.cluster[i].pow(e.get_ui());
    if (e < 0) den = den * s.cluster[i].pow(Integer(-e).get_ui());
  }
  return {num, den};
}

}  // namespace

CompatibleCollection check_compatible(const std::vector<MutationData>& items, bool require_primitive) {
  for (const auto& d : items) {
    if (d.weight.size() != items.front().weight.size() || d.factor.size() != d.weight.size())
      throw Error(ErrorKind::InvariantViolation, "items of different dimensions");
    if (require_primitive && (!is_primitive(d.weight) || !is_primitive(d.factor)))
      throw Error(ErrorKind::NonPrimitive, "item " + to_string(d.weight) + " " + to_string(d.factor));
    if (dot(d.weight, d.factor) != 0)
      throw Error(ErrorKind::NotAnnihilating, "item " + to_string(d.weight) + " " + to_string(d.factor));
  }
  IntMatrix b = form_of(items);
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j)
      if (b[i][j] != -b[j][i])
        throw Error(ErrorKind::Incompatible, "items " + std::to_string(i) + " and " + std::to_string(j) + ": " +
                                                 b[i][j].get_str() + " and " + b[j][i].get_str());
  return {items, b};
}

Quiver collection_quiver(const CompatibleCollection& e) { return make_quiver(e.form); }

CompatibleCollection collection_mutate(const CompatibleCollection& e, std::size_t k) {
  if (k >= e.size()) throw Error(ErrorKind::InvariantViolation, "index out of range");
  std::vector<MutationData> items = e.items;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i == k) continue;
    Integer c = std::max(e.form[i][k], Integer(0));
    if (c != 0) items[i] = scaled_sum(items[i], c, e.items[k]);
  }
  items[k] = negated(e.items[k]);
  CompatibleCollection out;
  try {
    out = check_compatible(items, false);
  } catch (const Error& err) {
    throw Error(ErrorKind::CompatibilityBroken, err.what());
  }
  if (out.form != quiver_mutate(collection_quiver(e), k).b)
    throw Error(ErrorKind::CompatibilityBroken, "quiver of the mutated collection");
  return out;
}

MutationData SeedProjection::theta(const IntVector& n) const {
  IntVector bn = form * n;
  IntVector f(section.empty() ? 0 : section.front().size());
  for (std::size_t a = 0; a < f.size(); ++a) {
    Integer s = 0;
    for (std::size_t i = 0; i < section.size(); ++i) s += section[i][a] * bn[i];
    f[a] = s;
  }
  return {projection * n, f};
}

SeedProjection seed_projection(const IntMatrix& b, const IntMatrix& v) {
  std::size_t m = b.size();
  for (const auto& row : b)
    if (row.size() != m) throw Error(ErrorKind::InvariantViolation, "form is not square");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (b[i][j] != -b[j][i]) throw Error(ErrorKind::InvariantViolation, "form is not skew-symmetric");
  for (const auto& row : v) {
    if (row.size() != m) throw Error(ErrorKind::InvariantViolation, "subspace vector of wrong length");
    if (!is_zero(b * row)) throw Error(ErrorKind::NotInKernel, to_string(row));
  }
  SeedProjection p;
  p.form = b;
  p.projection = v.empty() ? identity_matrix(m) : integer_kernel(v, m);
  IntMatrix inv = inverse_unimodular(unimodular_completion(p.projection, m));
  std::size_t q = p.projection.size();
  p.section.assign(m, IntVector(q));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < q; ++a) p.section[i][a] = inv[i][a];
  return p;
}

CompatibleCollection from_cluster_seed(const IntMatrix& b, const IntMatrix& v) {
  SeedProjection p = seed_projection(b, v);
  std::vector<MutationData> items;
  for (std::size_t i = 0; i < b.size(); ++i) {
    IntVector e(b.size(), 0);
    e[i] = 1;
    items.push_back(p.theta(e));
  }
  return check_compatible(items, false);
}

CompatibleCollection collection_of_seed(const Seed& s, const SeedProjection& proj) {
  std::vector<MutationData> items;
  for (const auto& n : s.basis) items.push_back(proj.theta(n));
  return check_compatible(items, false);
}

FanoPolytope mutate_polytope_3d(const FanoPolytope& p, const MutationData& d) {
  if (p.dim() != 3 || d.weight.size() != 3) throw Error(ErrorKind::InvariantViolation, "expected dimension 3");
  return combinatorial_mutate(p, d);
}

MutationData walk_map(const MutationData& item, PlConvention c) {
  if (c == PlConvention::NewtonDual) return item;
  return {item.weight, -item.factor};
}

std::optional<std::size_t> tropical_period(const CompatibleCollection& e, std::size_t max_steps, PlConvention c) {
  if (e.size() != 2) throw Error(ErrorKind::InvariantViolation, "expected two items");
  auto samples = sample_points(e.dim());
  std::vector<MutationData> maps;
  CompatibleCollection cur = e;
  for (std::size_t s = 1; s <= max_steps; ++s) {
    std::size_t k = (s - 1) % 2;
    maps.push_back(walk_map(cur.items[k], c));
    cur = collection_mutate(cur, k);
    if (linear_part(maps, e.dim(), samples)) return s;
  }
  return std::nullopt;
}

std::optional<std::size_t> labelled_period(const CompatibleCollection& e, std::size_t max_steps) {
  CompatibleCollection cur = e;
  for (std::size_t s = 1; s <= max_steps; ++s) {
    cur = collection_mutate(cur, (s - 1) % 2);
    if (cur.items == e.items) return s;
  }
  return std::nullopt;
}

PentagonWalk pentagon_walk(const RationalPolytope& q, const CompatibleCollection& e, std::size_t max_steps,
                           PlConvention c) {
  if (e.size() != 2) throw Error(ErrorKind::InvariantViolation, "expected two items");
  auto samples = sample_points(e.dim());
  PentagonWalk walk;
  walk.polytopes.push_back(q);
  std::vector<MutationData> maps;
  CompatibleCollection cur = e;
  for (std::size_t s = 1; s <= max_steps; ++s) {
    std::size_t k = (s - 1) % 2;
    try {
      walk.polytopes.push_back(pl_transform(walk.polytopes.back(), walk_map(cur.items[k], c)));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotConvex) throw;
      walk.failed_step = s;
      break;
    }
    walk.indices.push_back(k);
    maps.push_back(walk_map(cur.items[k], c));
    cur = collection_mutate(cur, k);
    if (auto l = linear_part(maps, e.dim(), samples)) {
      std::vector<RatVector> img;
      for (const auto& v : q.vertices()) img.push_back(*l * v);
      if (convex_hull(img, q.dim()) == walk.polytopes.back()) {
        walk.closes_at = s;
        break;
      }
    }
  }
  std::size_t upto = walk.closes_at ? *walk.closes_at : walk.polytopes.size();
  std::vector<decltype(fingerprint(q))> seen;
  for (std::size_t i = 0; i < upto; ++i) {
    auto fp = fingerprint(walk.polytopes[i]);
    if (std::find(seen.begin(), seen.end(), fp) == seen.end()) seen.push_back(fp);
  }
  walk.distinct = seen.size();
  return walk;
}

RationalFunction pullback_monomial(const Seed& s, const SeedProjection& proj, const IntVector& u) {
  if (s.basis.empty()) throw Error(ErrorKind::InvariantViolation, "empty seed");
  return monomial_pullback(s, proj, u);
}

CommutationCheck check_commutation(const Seed& s, const SeedProjection& proj, std::size_t k, const IntVector& u) {
  CommutationCheck out;
  Seed next = seed_mutate(s, k);
  out.mutate_then_pull = pullback_monomial(next, proj, u);

  MutationData d = proj.theta(next.basis[k]);
  RationalFunction base = pullback_monomial(s, proj, u);
  RationalFunction zf = pullback_monomial(s, proj, d.factor);
  // 1 + z^f = (den + num) / den
  LaurentPolynomial top = zf.denominator + zf.numerator;
  Integer c = dot(d.weight, u);
  unsigned long e = Integer(abs(c)).get_ui();
  LaurentPolynomial a = top.pow(e), b = zf.denominator.pow(e);
  if (c < 0) std::swap(a, b);
  out.pull_of_mutation = {base.numerator * a, base.denominator * b};
  out.equal = out.mutate_then_pull == out.pull_of_mutation;
  return out;
}

}  // namespace fanomut
