#include "fanomut/bridge.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "fanomut/parallel.hpp"

namespace fanomut {

PolygonSeed polygon_seed(const FanoPolytope& p) {
  if (p.dim() != 2) throw Error(ErrorKind::NotFano, "polygon seeds need a polygon");
  PolygonSeed s{p, edges(p), 0, {}, {}, {}, {}};
  for (std::size_t e = 0; e < s.edges.size(); ++e)
    for (Integer c = 0; c < s.edges[e].tcone_count; ++c) {
      s.rho.push_back(s.edges[e].normal);
      s.edge_of.push_back(e);
    }
  s.unfrozen_count = s.rho.size();
  s.basket = singularity_content(p).basket;
  for (const auto& cone : s.basket) s.rho.push_back(cone.normal);

  const std::size_t m = s.rho.size();
  IntMatrix b(m, IntVector(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) b[i][j] = det2(s.rho[i], s.rho[j]);
  std::vector<std::size_t> frozen(m - s.unfrozen_count);
  std::iota(frozen.begin(), frozen.end(), s.unfrozen_count);
  s.quiver = make_quiver(std::move(b), std::move(frozen));

  if (m > 0 && row_echelon(s.quiver.b).rank > 2)
    throw Error(ErrorKind::InvariantViolation, "exchange matrix of a polygon has rank above 2");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i || s.quiver.b[i][j] != 0) continue;
      for (std::size_t k = 0; k < m; ++k)
        if (k != i && k != j && s.quiver.b[j][k] == 0 && s.quiver.b[i][k] != 0)
          throw Error(ErrorKind::InvariantViolation, "non-adjacency is not transitive");
    }
  return s;
}

MutationData edge_mutation(const EdgeData& e) { return make_mutation_data(e.normal, e.direction); }

namespace {

IntVector transport_normal(const IntVector& v, const MutationData& d) {
  Integer s = dot(v, d.factor);
  return s < 0 ? v - s * d.weight : v;
}

std::vector<IntVector> sorted_range(const std::vector<IntVector>& v, std::size_t from, std::size_t to) {
  std::vector<IntVector> out(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to));
  std::sort(out.begin(), out.end());
  return out;
}

Integer max_abs_coordinate(const FanoPolytope& p) {
  Integer m = 0;
  for (const auto& v : p.vertices())
    for (const auto& c : v) m = std::max(m, Integer(abs(c)));
  return m;
}

}  // namespace

FanoPolytope polygon_mutate_at(const FanoPolytope& p, std::size_t k) {
  PolygonSeed seed = polygon_seed(p);
  if (k >= seed.rho.size()) throw Error(ErrorKind::InvariantViolation, "index out of range");
  if (k >= seed.unfrozen_count) throw Error(ErrorKind::FrozenVertex, "index " + std::to_string(k));
  MutationData d = edge_mutation(seed.edges[seed.edge_of[k]]);
  FanoPolytope result = combinatorial_mutate(p, d);

  std::vector<IntVector> moved;
  for (std::size_t i = 0; i < seed.rho.size(); ++i) moved.push_back(i == k ? -d.weight : transport_normal(seed.rho[i], d));
  Quiver expected = quiver_mutate(seed.quiver, k);
  for (std::size_t i = 0; i < moved.size(); ++i)
    for (std::size_t j = 0; j < moved.size(); ++j)
      if (det2(moved[i], moved[j]) != expected.b[i][j])
        throw Error(ErrorKind::CompatibilityBroken, "transported normals do not mutate the quiver");
  PolygonSeed after = polygon_seed(result);
  const std::size_t n = seed.unfrozen_count;
  if (after.unfrozen_count != n || after.rho.size() != moved.size() ||
      sorted_range(after.rho, 0, n) != sorted_range(moved, 0, n) ||
      sorted_range(after.rho, n, moved.size()) != sorted_range(moved, n, moved.size()))
    throw Error(ErrorKind::CompatibilityBroken, "seed of the mutated polygon is not the mutated seed");
  return result;
}

MutationGraph polygon_mutation_graph(const FanoPolytope& p, const GraphLimits& limits) {
  MutationGraph g;
  std::map<FanoPolytope, std::size_t> index;
  FanoPolytope start = canonical_form(p).polygon;
  index.emplace(start, 0);
  g.nodes.push_back(start);
  if (max_abs_coordinate(start) > limits.max_coord) {
    g.status = GraphStatus::Exceeded;
    g.reason = "max_coord";
    return g;
  }
  std::vector<std::size_t> frontier{0};

  using Step = std::pair<std::size_t, FanoPolytope>;
  while (!frontier.empty() && g.status == GraphStatus::Complete) {
    std::vector<FanoPolytope> polys;
    for (auto f : frontier) polys.push_back(g.nodes[f]);
    auto expanded = parallel_map(
        polys,
        [](const FanoPolytope& q) {
          PolygonSeed seed = polygon_seed(q);
          SingularityContent content = singularity_content(q);
          Rational area = volume(polytope_dual(q.hull()));
          std::vector<Step> out;
          for (std::size_t k = 0; k < seed.unfrozen_count; ++k) {
            if (k > 0 && seed.edge_of[k] == seed.edge_of[k - 1]) continue;
            FanoPolytope r = canonical_form(polygon_mutate_at(q, k)).polygon;
            if (!same_singularity_content(singularity_content(r), content) ||
                volume(polytope_dual(r.hull())) != area)
              throw Error(ErrorKind::InvariantViolation, "mutation changed singularity content or dual area");
            out.emplace_back(k, std::move(r));
          }
          return out;
        },
        limits.jobs);

    std::vector<std::size_t> level;
    for (std::size_t f = 0; f < frontier.size() && g.status == GraphStatus::Complete; ++f) {
      for (auto& [k, r] : expanded[f]) {
        auto it = index.find(r);
        std::size_t target;
        if (it != index.end()) {
          target = it->second;
        } else {
          if (max_abs_coordinate(r) > limits.max_coord) {
            g.status = GraphStatus::Exceeded;
            g.reason = "max_coord";
            break;
          }
          if (g.nodes.size() >= limits.max_nodes) {
            g.status = GraphStatus::Exceeded;
            g.reason = "max_nodes";
            break;
          }
          target = g.nodes.size();
          index.emplace(r, target);
          g.nodes.push_back(std::move(r));
          level.push_back(target);
        }
        g.edges.push_back({frontier[f], k, target});
      }
    }
    frontier = std::move(level);
  }
  return g;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Finite: return "finite";
    case Verdict::Infinite: return "infinite";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

FiniteTypeReport classify(const FanoPolytope& p, const ClassifyOptions& options) {
  FiniteTypeReport r;
  PolygonSeed seed = polygon_seed(p);
  r.quiver_type = dynkin_type(seed.quiver, options.quiver_cutoff);
  r.kronecker = has_kronecker(seed.quiver);
  if (options.kronecker_fast_path && r.kronecker) {
    r.verdict = Verdict::Infinite;
    return r;
  }
  MutationGraph g = polygon_mutation_graph(p, options.limits);
  r.graph_status = g.status;
  r.polygon_class_size = g.nodes.size();
  bool finite_quiver = r.quiver_type.type != DynkinType::Other;
  bool complete = g.status == GraphStatus::Complete;
  if (finite_quiver && complete) r.verdict = Verdict::Finite;
  else if (!finite_quiver && !complete) r.verdict = Verdict::Infinite;
  else r.verdict = Verdict::Inconclusive;
  return r;
}

namespace {

const EdgeData& edge_with_normal(const std::vector<EdgeData>& es, const IntVector& normal) {
  for (const auto& e : es)
    if (e.normal == normal) return e;
  throw Error(ErrorKind::InvariantViolation, "no edge with normal " + to_string(normal));
}

}  // namespace

std::vector<HeightPair> kronecker_growth_trace(const FanoPolytope& p, std::size_t i, std::size_t j, int steps) {
  PolygonSeed seed = polygon_seed(p);
  if (i >= seed.unfrozen_count || j >= seed.unfrozen_count || i == j)
    throw Error(ErrorKind::NotKronecker, "indices must be distinct unfrozen vertices");
  Integer k = abs(seed.quiver.b[i][j]);
  if (k < 2) throw Error(ErrorKind::NotKronecker, "b_ij = " + seed.quiver.b[i][j].get_str());

  IntVector w[2] = {seed.rho[i], seed.rho[j]};
  Integer h[2] = {seed.edges[seed.edge_of[i]].height, seed.edges[seed.edge_of[j]].height};
  std::vector<HeightPair> trace{{h[0], h[1]}};
  FanoPolytope cur = p;
  for (int s = 0; s < steps; ++s) {
    int a = s % 2, b = 1 - a;
    auto es = edges(cur);
    const EdgeData& e = edge_with_normal(es, w[a]);
    if (e.tcone_count < 1) throw Error(ErrorKind::InvariantViolation, "traced edge has no T-cone");
    MutationData d = edge_mutation(e);
    cur = combinatorial_mutate(cur, d);
    w[b] = transport_normal(w[b], d);
    w[a] = -w[a];
    es = edges(cur);
    Integer ha = edge_with_normal(es, w[a]).height;
    Integer hb = edge_with_normal(es, w[b]).height;
    if (hb != h[b]) throw Error(ErrorKind::InvariantViolation, "untouched edge changed height");
    if (ha < k * h[b] - h[a])
      throw Error(ErrorKind::InvariantViolation, "height " + ha.get_str() + " < " + Integer(k * h[b] - h[a]).get_str());
    h[a] = ha;
    trace.push_back({h[0], h[1]});
  }
  return trace;
}

namespace {

FanoPolytope newton_fano(const LaurentPolynomial& w) {
  try {
    return make_fano(newton_polytope(w).integer_vertices());
  } catch (const Error& e) {
    throw Error(ErrorKind::NotFanoSupport, e.what());
  }
}

bool mutable_search(const LaurentPolynomial& w, const FanoPolytope& p, int depth, const IntVector* previous,
                    std::vector<MutationData>& path, MutabilityReport& report) {
  if (depth == 0) return true;
  for (const auto& e : edges(p)) {
    if (e.tcone_count < 1) continue;
    if (previous && e.normal == -*previous) continue;
    MutationData d = edge_mutation(e);
    path.push_back(d);
    LaurentPolynomial next;
    try {
      next = algebraic_mutate(w, d);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotLaurent) throw;
      report.failing_path = path;
      return false;
    }
    ++report.mutations;
    if (!mutable_search(next, newton_fano(next), depth - 1, &d.weight, path, report)) return false;
    path.pop_back();
  }
  return true;
}

}  // namespace

MutabilityReport maximally_mutable(const LaurentPolynomial& w, int depth) {
  if (w.dim() != 2) throw Error(ErrorKind::NotFanoSupport, "Laurent polynomial must be in two variables");
  MutabilityReport report;
  FanoPolytope p = newton_fano(w);
  std::vector<MutationData> path;
  report.passed = mutable_search(w, p, depth, nullptr, path, report);
  return report;
}

namespace {

struct Point {
  long x, y;
};

long cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Point minus(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

bool angle_less(const Point& a, const Point& b) {
  auto half = [](const Point& p) { return p.y < 0 || (p.y == 0 && p.x < 0); };
  if (half(a) != half(b)) return half(b);
  return cross(a, b) > 0;
}

long edge_tcones(const Point& a, const Point& b) {
  Point d = minus(b, a);
  long len = std::gcd(std::labs(d.x), std::labs(d.y));
  long height = cross(a, b) / len;
  return len / height;
}

struct BoxSearch {
  std::vector<Point> pts;
  std::optional<long> limit;
  std::vector<std::size_t> chain;
  const std::function<void(const std::vector<SmallPoint>&)>* visit = nullptr;
  std::vector<SmallPoint> scratch;

  bool within(long t) const { return !limit || t <= *limit; }
  bool exact(long t) const { return !limit || t == *limit; }

  void emit() {
    scratch.clear();
    for (auto i : chain) scratch.push_back({pts[i].x, pts[i].y});
    (*visit)(scratch);
  }

  void extend(long tcones) {
    const Point& first = pts[chain.front()];
    const Point& last = pts[chain.back()];
    if (chain.size() >= 3) {
      const Point& prev = pts[chain[chain.size() - 2]];
      const Point& second = pts[chain[1]];
      if (cross(last, first) > 0 && cross(minus(last, prev), minus(first, last)) > 0 &&
          cross(minus(first, last), minus(second, first)) > 0 && exact(tcones + edge_tcones(last, first)))
        emit();
    }
    for (std::size_t t = chain.back() + 1; t < pts.size(); ++t) {
      const Point& next = pts[t];
      if (cross(last, next) <= 0) break;  // angles only grow from here
      if (chain.size() >= 2 && cross(minus(last, pts[chain[chain.size() - 2]]), minus(next, last)) <= 0) continue;
      long t_next = tcones + edge_tcones(last, next);
      if (!within(t_next)) continue;
      chain.push_back(t);
      extend(t_next);
      chain.pop_back();
    }
  }
};

}  // namespace

void for_each_fano_polygon(long r, std::optional<long> tcones,
                           const std::function<void(const std::vector<SmallPoint>&)>& visit) {
  BoxSearch search;
  search.limit = tcones;
  search.visit = &visit;
  for (long x = -r; x <= r; ++x)
    for (long y = -r; y <= r; ++y)
      if ((x != 0 || y != 0) && std::gcd(std::labs(x), std::labs(y)) == 1) search.pts.push_back({x, y});
  std::sort(search.pts.begin(), search.pts.end(), angle_less);
  for (std::size_t s = 0; s < search.pts.size(); ++s) {
    search.chain = {s};
    search.extend(0);
  }
}

std::vector<FanoPolytope> fano_polygons_in_box(long r, std::optional<long> tcones) {
  std::vector<FanoPolytope> found;
  for_each_fano_polygon(r, tcones, [&](const std::vector<SmallPoint>& v) {
    std::vector<IntVector> pts;
    for (const auto& x : v) pts.push_back(make_vector({x[0], x[1]}));
    found.push_back(make_fano(pts));
  });
  return found;
}

}  // namespace fanomut

namespace fanomut {

std::vector<FanoPolytope> unimodular_pair_polygons(long r) {
  std::set<FanoPolytope> classes;
  for_each_fano_polygon(r, 2, [&](const std::vector<SmallPoint>& v) {
    std::vector<SmallPoint> normals;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const SmallPoint& a = v[i];
      const SmallPoint& b = v[(i + 1) % v.size()];
      long dx = b[0] - a[0], dy = b[1] - a[1];
      long len = std::gcd(std::labs(dx), std::labs(dy));
      long height = (a[0] * b[1] - a[1] * b[0]) / len;
      for (long c = 0; c < len / height; ++c) normals.push_back({-dy / len, dx / len});
    }
    if (normals.size() != 2) return;
    long det = normals[0][0] * normals[1][1] - normals[0][1] * normals[1][0];
    if (det != 1 && det != -1) return;
    std::vector<IntVector> pts;
    for (const auto& x : v) pts.push_back(make_vector({x[0], x[1]}));
    classes.insert(canonical_form(make_fano(pts)).polygon);
  });
  return {classes.begin(), classes.end()};
}

}  // namespace fanomut
