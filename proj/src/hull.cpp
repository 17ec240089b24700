#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <type_traits>

#include "fanomut/lattice.hpp"

namespace fanomut {

namespace {

using Triangle = std::array<std::size_t, 3>;

RatVector cross(const RatVector& a, const RatVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Sign of det(b-a, c-a, p-a); positive when p lies above the oriented
// triangle (a, b, c).
int orient3(const RatVector& a, const RatVector& b, const RatVector& c, const RatVector& p) {
  return sgn(det3(b - a, c - a, p - a));
}

template <class V>
int orient2(const V& a, const V& b, const V& c) {
  using T = std::decay_t<decltype(a[0])>;
  T x = (b[0] - a[0]) * (c[1] - a[1]), y = (b[1] - a[1]) * (c[0] - a[0]);
  return x < y ? -1 : x > y ? 1 : 0;
}

template <class V>
std::vector<V> unique_sorted(std::vector<V> pts, std::size_t dim) {
  for (const auto& p : pts)
    if (p.size() != dim) throw Error(ErrorKind::InvariantViolation, "point of wrong dimension");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Counter-clockwise hull by monotone chain, collinear points dropped.
template <class V>
std::vector<V> hull2(const std::vector<V>& pts) {
  if (pts.size() < 3) throw Error(ErrorKind::Degenerate, "fewer than three distinct points");
  std::vector<V> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient2(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) throw Error(ErrorKind::Degenerate, "points are collinear");
  return h;
}

// Incremental hull; returns outward-oriented boundary triangles.
std::vector<Triangle> hull3_triangles(const std::vector<RatVector>& pts) {
  std::size_t n = pts.size();
  if (n < 4) throw Error(ErrorKind::Degenerate, "fewer than four distinct points");
  std::size_t i1 = 1;
  std::size_t i2 = n;
  for (std::size_t i = 2; i < n; ++i) {
    RatVector c = cross(pts[i1] - pts[0], pts[i] - pts[0]);
    if (c[0] != 0 || c[1] != 0 || c[2] != 0) {
      i2 = i;
      break;
    }
  }
  if (i2 == n) throw Error(ErrorKind::Degenerate, "points are collinear");
  std::size_t i3 = n;
  for (std::size_t i = 2; i < n; ++i) {
    if (i != i2 && orient3(pts[0], pts[i1], pts[i2], pts[i]) != 0) {
      i3 = i;
      break;
    }
  }
  if (i3 == n) throw Error(ErrorKind::Degenerate, "points are coplanar");

  std::vector<Triangle> faces;
  auto add_face = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t inside) {
    if (orient3(pts[a], pts[b], pts[c], pts[inside]) > 0) std::swap(b, c);
    faces.push_back({a, b, c});
  };
  add_face(0, i1, i2, i3);
  add_face(0, i1, i3, i2);
  add_face(0, i2, i3, i1);
  add_face(i1, i2, i3, 0);

  for (std::size_t p = 2; p < n; ++p) {
    if (p == i2 || p == i3) continue;
    std::vector<bool> visible(faces.size());
    bool any = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      visible[f] = orient3(pts[faces[f][0]], pts[faces[f][1]], pts[faces[f][2]], pts[p]) > 0;
      any = any || visible[f];
    }
    if (!any) continue;
    std::set<std::pair<std::size_t, std::size_t>> visible_edges;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      for (int e = 0; e < 3; ++e) visible_edges.insert({faces[f][e], faces[f][(e + 1) % 3]});
    }
    std::vector<Triangle> next;
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (!visible[f]) next.push_back(faces[f]);
    for (const auto& [a, b] : visible_edges) {
      if (!visible_edges.count({b, a})) next.push_back({a, b, p});
    }
    faces = std::move(next);
  }
  return faces;
}

// Orders coplanar points cyclically around their centroid, counter-clockwise
// when seen from the side `normal` points to.
void order_cyclically(std::vector<std::size_t>& ids, const std::vector<RatVector>& pts,
                      const IntVector& normal) {
  RatVector centroid(3, 0);
  for (auto id : ids) centroid = centroid + pts[id];
  centroid = Rational(1, static_cast<long>(ids.size())) * centroid;
  RatVector n = to_rational(normal);
  RatVector ref = pts[ids[0]] - centroid;
  RatVector ref_perp = cross(n, ref);
  auto half = [&](const RatVector& d) {
    Rational x = dot(d, ref);
    Rational y = dot(d, ref_perp);
    return (y > 0 || (y == 0 && x > 0)) ? 0 : 1;
  };
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    RatVector da = pts[a] - centroid;
    RatVector db = pts[b] - centroid;
    int ha = half(da);
    int hb = half(db);
    if (ha != hb) return ha < hb;
    return dot(cross(da, db), n) > 0;
  });
}

}  // namespace

bool RationalPolytope::contains(const RatVector& p) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return dot(p, f.normal) <= f.offset; });
}

bool RationalPolytope::contains_origin_strictly() const {
  return std::all_of(facets_.begin(), facets_.end(), [](const Facet& f) { return f.offset > 0; });
}

bool RationalPolytope::is_lattice() const {
  for (const auto& v : vertices_)
    for (const auto& c : v)
      if (c.get_den() != 1) return false;
  return true;
}

std::vector<IntVector> RationalPolytope::integer_vertices() const {
  std::vector<IntVector> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(to_integer(v));
  return out;
}

RationalPolytope convex_hull(const std::vector<IntVector>& points, std::size_t dim) {
  if (dim == 2) {
    // same as the rational path, in machine integers when they are safe
    constexpr long kBound = 1L << 30;
    std::vector<std::array<long, 2>> small;
    small.reserve(points.size());
    for (const auto& p : points) {
      if (p.size() != 2) throw Error(ErrorKind::InvariantViolation, "point of wrong dimension");
      if (abs(p[0]) >= kBound || abs(p[1]) >= kBound) break;
      small.push_back({p[0].get_si(), p[1].get_si()});
    }
    if (small.size() == points.size()) {
      std::sort(small.begin(), small.end());
      small.erase(std::unique(small.begin(), small.end()), small.end());
      auto corners = hull2(small);
      RationalPolytope out;
      out.dim_ = 2;
      std::size_t n = corners.size();
      for (std::size_t i = 0; i < n; ++i) {
        const auto& a = corners[i];
        const auto& b = corners[(i + 1) % n];
        long nx = b[1] - a[1], ny = a[0] - b[0];
        long g = std::gcd(nx, ny);
        nx /= g;
        ny /= g;
        out.facets_.push_back({make_vector({nx, ny}), Rational(a[0] * nx + a[1] * ny), {i, (i + 1) % n}});
        out.vertices_.push_back({Rational(a[0]), Rational(a[1])});
      }
      return out;
    }
  }
  std::vector<RatVector> r;
  r.reserve(points.size());
  for (const auto& p : points) r.push_back(to_rational(p));
  return convex_hull(r, dim);
}

RationalPolytope convex_hull(const std::vector<RatVector>& input, std::size_t dim) {
  if (dim != 2 && dim != 3) throw Error(ErrorKind::InvariantViolation, "hull dimension must be 2 or 3");
  std::vector<RatVector> pts = unique_sorted(input, dim);
  RationalPolytope out;
  out.dim_ = dim;

  if (dim == 2) {
    out.vertices_ = hull2(pts);
    std::size_t n = out.vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const RatVector& a = out.vertices_[i];
      const RatVector& b = out.vertices_[(i + 1) % n];
      RatVector d = b - a;
      IntVector normal = primitive_direction({d[1], -d[0]});
      out.facets_.push_back({normal, dot(a, normal), {i, (i + 1) % n}});
    }
    return out;
  }

  std::vector<Triangle> triangles = hull3_triangles(pts);
  std::map<std::pair<IntVector, Rational>, std::set<std::size_t>> planes;
  for (const auto& t : triangles) {
    IntVector normal = primitive_direction(cross(pts[t[1]] - pts[t[0]], pts[t[2]] - pts[t[0]]));
    auto& members = planes[{normal, dot(pts[t[0]], normal)}];
    members.insert(t.begin(), t.end());
  }
  std::set<std::size_t> corner_ids;
  for (const auto& [plane, members] : planes) corner_ids.insert(members.begin(), members.end());

  // A corner is a vertex iff the normals of the facets through it have rank 3.
  std::vector<std::size_t> vertex_ids;
  for (auto id : corner_ids) {
    IntMatrix normals;
    for (const auto& [plane, members] : planes)
      if (dot(pts[id], plane.first) == plane.second) normals.push_back(plane.first);
    if (row_echelon(normals).rank == 3) vertex_ids.push_back(id);
  }
  std::map<std::size_t, std::size_t> index_of;
  for (auto id : vertex_ids) {
    index_of[id] = out.vertices_.size();
    out.vertices_.push_back(pts[id]);
  }
  for (const auto& [plane, members] : planes) {
    std::vector<std::size_t> ids;
    for (auto id : vertex_ids)
      if (dot(pts[id], plane.first) == plane.second) ids.push_back(id);
    order_cyclically(ids, pts, plane.first);
    Facet f{plane.first, plane.second, {}};
    for (auto id : ids) f.vertices.push_back(index_of.at(id));
    out.facets_.push_back(std::move(f));
  }
  return out;
}

RationalPolytope polytope_dual(const RationalPolytope& p) {
  if (!p.contains_origin_strictly())
    throw Error(ErrorKind::OriginNotInterior, "dual needs the origin strictly inside");
  std::vector<RatVector> dual_points;
  for (const auto& f : p.facets()) {
    RatVector u = to_rational(f.normal);
    dual_points.push_back(Rational(-1) / f.offset * u);
  }
  return convex_hull(dual_points, p.dim());
}

Rational volume(const RationalPolytope& p) {
  const auto& v = p.vertices();
  if (p.dim() == 2) {
    Rational twice = 0;
    for (std::size_t i = 0; i < v.size(); ++i) twice += det2(v[i], v[(i + 1) % v.size()]);
    return abs(twice) / 2;
  }
  Rational six = 0;
  const RatVector& apex = v[0];
  for (const auto& f : p.facets()) {
    if (dot(apex, f.normal) == f.offset) continue;
    for (std::size_t i = 1; i + 1 < f.vertices.size(); ++i) {
      six += abs(det3(v[f.vertices[0]] - apex, v[f.vertices[i]] - apex, v[f.vertices[i + 1]] - apex));
    }
  }
  return six / 6;
}

}  // namespace fanomut
