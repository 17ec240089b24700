#include "fanomut/cluster.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "fanomut/parallel.hpp"

namespace fanomut {

bool Quiver::is_frozen(std::size_t k) const { return std::binary_search(frozen.begin(), frozen.end(), k); }

std::vector<std::size_t> Quiver::unfrozen() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (!is_frozen(i)) out.push_back(i);
  return out;
}

Quiver make_quiver(IntMatrix b, std::vector<std::size_t> frozen) {
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i].size() != n) throw Error(ErrorKind::InvariantViolation, "exchange matrix is not square");
    for (std::size_t j = 0; j < n; ++j)
      if (b[i][j] != -b[j][i]) throw Error(ErrorKind::InvariantViolation, "exchange matrix is not skew-symmetric");
  }
  std::sort(frozen.begin(), frozen.end());
  frozen.erase(std::unique(frozen.begin(), frozen.end()), frozen.end());
  if (!frozen.empty() && frozen.back() >= n) throw Error(ErrorKind::InvariantViolation, "frozen index out of range");
  return {std::move(b), std::move(frozen)};
}

Quiver unfrozen_part(const Quiver& q) {
  auto idx = q.unfrozen();
  IntMatrix b(idx.size(), IntVector(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) b[i][j] = q.b[idx[i]][idx[j]];
  return {std::move(b), {}};
}

Quiver quiver_mutate(const Quiver& q, std::size_t k) {
  if (k >= q.size()) throw Error(ErrorKind::InvariantViolation, "vertex out of range");
  if (q.is_frozen(k)) throw Error(ErrorKind::FrozenVertex, "vertex " + std::to_string(k));
  Quiver r = q;
  const std::size_t n = q.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r.b[i][j] = -q.b[i][j];
        continue;
      }
      const Integer& bik = q.b[i][k];
      Integer prod = bik * q.b[k][j];
      if (prod > 0) r.b[i][j] = q.b[i][j] + sgn(bik) * prod;
    }
  return r;
}

namespace {

using Invariant = std::pair<bool, IntVector>;

Invariant vertex_invariant(const Quiver& q, std::size_t v) {
  IntVector row = q.b[v];
  std::sort(row.begin(), row.end());
  return {q.is_frozen(v), std::move(row)};
}

struct CanonicalSearch {
  const Quiver& q;
  std::size_t n;
  std::vector<Invariant> inv;
  std::vector<Invariant> target;  // invariant required at each position
  std::vector<std::vector<bool>> twin;

  std::vector<std::size_t> order;
  std::vector<bool> used;
  std::vector<IntVector> columns;
  std::vector<std::size_t> best_order;
  std::vector<IntVector> best_columns;

  explicit CanonicalSearch(const Quiver& quiver) : q(quiver), n(quiver.size()) {
    for (std::size_t v = 0; v < n; ++v) inv.push_back(vertex_invariant(q, v));
    target = inv;
    std::sort(target.begin(), target.end());
    twin.assign(n, std::vector<bool>(n, false));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        if (inv[u] != inv[v] || q.b[u][v] != 0) continue;
        bool same = true;
        for (std::size_t w = 0; w < n && same; ++w)
          if (w != u && w != v && q.b[u][w] != q.b[v][w]) same = false;
        twin[u][v] = twin[v][u] = same;
      }
    used.assign(n, false);
  }

  // Sign of (current prefix through pos) compared with the best prefix.
  int compare_prefix(std::size_t pos) const {
    for (std::size_t p = 0; p <= pos; ++p) {
      if (columns[p] < best_columns[p]) return -1;
      if (best_columns[p] < columns[p]) return 1;
    }
    return 0;
  }

  void run(std::size_t pos) {
    if (pos == n) {
      if (best_order.empty() || compare_prefix(n - 1) < 0) {
        best_order = order;
        best_columns = columns;
      }
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || inv[c] != target[pos]) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](std::size_t t) { return twin[t][c]; })) continue;
      tried.push_back(c);
      IntVector col;
      col.reserve(pos);
      for (std::size_t p = 0; p < pos; ++p) col.push_back(q.b[order[p]][c]);
      order.push_back(c);
      used[c] = true;
      columns.push_back(std::move(col));
      if (best_order.empty() || compare_prefix(pos) <= 0) run(pos + 1);
      columns.pop_back();
      used[c] = false;
      order.pop_back();
    }
  }
};

}  // namespace

CanonicalQuiver canonical_quiver(const Quiver& q) {
  if (q.size() > kMaxIsoSize)
    throw Error(ErrorKind::SizeLimit, std::to_string(q.size()) + " vertices exceeds " + std::to_string(kMaxIsoSize));
  CanonicalSearch search(q);
  search.run(0);
  CanonicalQuiver out;
  out.order = search.best_order;
  const std::size_t n = q.size();
  out.quiver.b.assign(n, IntVector(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t r = 0; r < n; ++r) out.quiver.b[p][r] = q.b[out.order[p]][out.order[r]];
    if (q.is_frozen(out.order[p])) out.quiver.frozen.push_back(p);
  }
  return out;
}

std::optional<std::vector<std::size_t>> quiver_isomorphism(const Quiver& a, const Quiver& b) {
  if (a.size() != b.size() || a.frozen.size() != b.frozen.size()) return std::nullopt;
  auto ca = canonical_quiver(a);
  auto cb = canonical_quiver(b);
  if (ca.quiver != cb.quiver) return std::nullopt;
  std::vector<std::size_t> perm(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) perm[ca.order[p]] = cb.order[p];
  return perm;
}

QuiverClass quiver_mutation_class(const Quiver& q, std::size_t max_size, unsigned jobs) {
  QuiverClass out;
  std::set<Quiver> seen;
  Quiver start = canonical_quiver(q).quiver;
  seen.insert(start);
  out.members.push_back(start);
  std::vector<Quiver> frontier{start};
  while (!frontier.empty()) {
    auto expanded = parallel_map(
        frontier,
        [](const Quiver& x) {
          std::vector<Quiver> next;
          for (auto k : x.unfrozen()) next.push_back(canonical_quiver(quiver_mutate(x, k)).quiver);
          return next;
        },
        jobs);
    std::vector<Quiver> level;
    for (auto& group : expanded)
      for (auto& y : group) {
        if (!seen.insert(y).second) continue;
        if (out.members.size() >= max_size) {
          out.exceeded = true;
          return out;
        }
        out.members.push_back(y);
        level.push_back(std::move(y));
      }
    frontier = std::move(level);
  }
  return out;
}

namespace {

bool is_dynkin_orientation(const Quiver& q, DynkinType type) {
  const std::size_t n = q.size();
  std::vector<int> degree(n, 0);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (abs(q.b[i][j]) > 1) return false;
      if (q.b[i][j] != 0) {
        ++edges;
        ++degree[i];
        ++degree[j];
      }
    }
  int max_degree = n ? *std::max_element(degree.begin(), degree.end()) : 0;
  bool isolated = std::find(degree.begin(), degree.end(), 0) != degree.end();
  switch (type) {
    case DynkinType::A2: return n == 2 && edges == 1;
    case DynkinType::A3: return n == 3 && edges == 2 && !isolated;
    case DynkinType::D4: return n == 4 && edges == 3 && max_degree == 3;
    default: return false;
  }
}

}  // namespace

std::string DynkinResult::to_string() const {
  switch (type) {
    case DynkinType::A1n: return "A1^" + std::to_string(rank);
    case DynkinType::A2: return "A2";
    case DynkinType::A3: return "A3";
    case DynkinType::D4: return "D4";
    case DynkinType::Other: return "other";
  }
  return "other";
}

DynkinResult dynkin_type(const Quiver& q, std::size_t cutoff) {
  Quiver u = unfrozen_part(q);
  const std::size_t n = u.size();
  bool arrows = false;
  for (const auto& row : u.b)
    for (const auto& x : row) arrows = arrows || x != 0;
  if (!arrows) return {DynkinType::A1n, n};
  DynkinType candidate = n == 2 ? DynkinType::A2 : n == 3 ? DynkinType::A3 : n == 4 ? DynkinType::D4 : DynkinType::Other;
  if (candidate == DynkinType::Other) return {DynkinType::Other, n};
  auto cls = quiver_mutation_class(u, cutoff);
  for (const auto& m : cls.members)
    if (is_dynkin_orientation(m, candidate)) return {candidate, n};
  return {DynkinType::Other, n};
}

bool has_kronecker(const Quiver& q) {
  auto idx = q.unfrozen();
  for (auto i : idx)
    for (auto j : idx)
      if (i != j && abs(q.b[i][j]) >= 2) return true;
  return false;
}

Seed initial_seed(const Quiver& q, FrozenMode mode) {
  const std::size_t m = q.size();
  Seed s{q, q.b, {}, {}, mode};
  for (std::size_t i = 0; i < m; ++i) {
    IntVector e(m, 0);
    e[i] = 1;
    s.basis.push_back(e);
    if (mode == FrozenMode::Unit && q.is_frozen(i))
      s.cluster.push_back(LaurentPolynomial::constant(m, 1));
    else
      s.cluster.push_back(LaurentPolynomial::monomial(e));
  }
  return s;
}

Integer skew_form(const IntMatrix& form, const IntVector& a, const IntVector& b) { return dot(a, form * b); }

Seed seed_mutate(const Seed& s, std::size_t k) {
  Seed r = s;
  r.quiver = quiver_mutate(s.quiver, k);
  const std::size_t m = s.quiver.size();
  const std::size_t dim = s.cluster[k].dim();
  LaurentPolynomial in = LaurentPolynomial::constant(dim, 1);
  LaurentPolynomial out = LaurentPolynomial::constant(dim, 1);
  for (std::size_t i = 0; i < m; ++i) {
    const Integer& bik = s.quiver.b[i][k];
    if (i != k && bik > 0) r.basis[i] = s.basis[i] + bik * s.basis[k];
    if (bik > 0) in = in * s.cluster[i].pow(bik.get_ui());
    if (bik < 0) out = out * s.cluster[i].pow(Integer(-bik).get_ui());
  }
  r.basis[k] = -s.basis[k];
  try {
    r.cluster[k] = laurent_divide_exact(in + out, s.cluster[k]);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotDivisible) throw;
    throw Error(ErrorKind::InternalNonLaurent, "exchange relation at vertex " + std::to_string(k));
  }
  return r;
}

void check_seed(const Seed& s) {
  const std::size_t m = s.quiver.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (skew_form(s.form, s.basis[i], s.basis[j]) != s.quiver.b[i][j])
        throw Error(ErrorKind::InvariantViolation,
                    "skew form disagrees with exchange matrix at (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

std::vector<LaurentPolynomial> cluster_key(const Seed& s) {
  std::vector<LaurentPolynomial> key;
  for (auto i : s.quiver.unfrozen()) key.push_back(s.cluster[i]);
  std::sort(key.begin(), key.end());
  return key;
}

ExchangeGraph cluster_exchange_graph(const Seed& s, std::size_t max_clusters, unsigned jobs) {
  ExchangeGraph g;
  std::map<std::vector<LaurentPolynomial>, std::size_t> index;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::pair<std::size_t, Seed>> frontier;

  check_seed(s);
  auto key = cluster_key(s);
  index.emplace(key, 0);
  g.clusters.push_back(std::move(key));
  frontier.emplace_back(0, s);

  while (!frontier.empty() && !g.exceeded) {
    auto expanded = parallel_map(
        frontier,
        [](const std::pair<std::size_t, Seed>& node) {
          std::vector<Seed> next;
          for (auto k : node.second.quiver.unfrozen()) {
            next.push_back(seed_mutate(node.second, k));
            check_seed(next.back());
          }
          return next;
        },
        jobs);
    std::vector<std::pair<std::size_t, Seed>> level;
    for (std::size_t f = 0; f < frontier.size() && !g.exceeded; ++f) {
      for (auto& t : expanded[f]) {
        auto k2 = cluster_key(t);
        auto it = index.find(k2);
        std::size_t target;
        if (it != index.end()) {
          target = it->second;
        } else {
          if (g.clusters.size() >= max_clusters) {
            g.exceeded = true;
            break;
          }
          target = g.clusters.size();
          index.emplace(k2, target);
          g.clusters.push_back(std::move(k2));
          level.emplace_back(target, std::move(t));
        }
        std::size_t from = frontier[f].first;
        if (from != target) edges.insert({std::min(from, target), std::max(from, target)});
      }
    }
    frontier = std::move(level);
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

}  // namespace fanomut
