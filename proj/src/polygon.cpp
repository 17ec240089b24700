#include "fanomut/polygon.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <tuple>

namespace fanomut {

FanoPolytope make_fano(const std::vector<IntVector>& points) {
  if (points.empty()) throw Error(ErrorKind::Degenerate, "no points");
  std::size_t dim = points[0].size();
  FanoPolytope p;
  p.dim_ = dim;
  p.hull_ = convex_hull(points, dim);
  p.vertices_ = p.hull_.integer_vertices();
  for (const auto& v : p.vertices_) {
    if (!is_primitive(v)) throw Error(ErrorKind::NonPrimitiveVertex, "vertex " + to_string(v));
  }
  if (!p.hull_.contains_origin_strictly())
    throw Error(ErrorKind::OriginNotInterior, "origin is not strictly interior");
  return p;
}

FanoPolytope apply(const UnimodularMap& u, const FanoPolytope& p) {
  std::vector<IntVector> image;
  image.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) image.push_back(u.apply(v));
  return make_fano(image);
}

std::vector<EdgeData> edges(const FanoPolytope& p) {
  if (p.dim() != 2) throw Error(ErrorKind::InvariantViolation, "edges are defined for polygons");
  const auto& v = p.vertices();
  std::vector<EdgeData> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    EdgeData e;
    e.start = v[i];
    e.end = v[(i + 1) % v.size()];
    auto [dir, len] = primitive_part(e.end - e.start);
    e.direction = dir;
    e.length = len;
    e.normal = {-dir[1], dir[0]};
    e.height = -dot(e.normal, e.start);
    if (e.height <= 0) throw Error(ErrorKind::InvariantViolation, "edge not facing the origin");
    e.tcone_count = e.length / e.height;
    e.residue = e.length % e.height;
    out.push_back(std::move(e));
  }
  return out;
}

CyclicType cyclic_type_of_cone(const IntVector& ray_a, const IntVector& ray_b) {
  // Move ray_a to (0,1); ray_b then lands on (+-R, d) and the cone is 1/R(1, -d).
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), ray_a[0].get_mpz_t(), ray_a[1].get_mpz_t());
  if (g != 1) throw Error(ErrorKind::NonPrimitive, "cone ray " + to_string(ray_a));
  Integer c = ray_a[1] * ray_b[0] - ray_a[0] * ray_b[1];
  Integer d = s * ray_b[0] + t * ray_b[1];
  Integer order = abs(c);
  if (order == 0) throw Error(ErrorKind::Degenerate, "cone rays are collinear");
  if (order == 1) return {1, 0};
  Integer a = (-d) % order;
  if (a < 0) a += order;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), order.get_mpz_t()) == 0)
    throw Error(ErrorKind::NonPrimitive, "cone rays are not primitive");
  return {order, std::min(a, inv)};
}

std::vector<CyclicType> SingularityContent::basket_types() const {
  std::vector<CyclicType> types;
  for (const auto& r : basket) types.push_back(r.cyclic_type);
  std::sort(types.begin(), types.end());
  return types;
}

SingularityContent singularity_content(const FanoPolytope& p) {
  SingularityContent sc{0, {}};
  for (const auto& e : edges(p)) {
    sc.tcone_total += e.tcone_count;
    if (e.residue == 0) continue;
    IntVector far = primitive_part(e.start + e.residue * e.direction).direction;
    sc.basket.push_back({e.height, e.residue, e.normal, cyclic_type_of_cone(e.start, far)});
  }
  return sc;
}

bool same_singularity_content(const SingularityContent& a, const SingularityContent& b) {
  return a.tcone_total == b.tcone_total && a.basket_types() == b.basket_types();
}

namespace {

using Small = std::array<std::int64_t, 2>;
constexpr std::int64_t kSmall = 1 << 12;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

// Bezout coefficients (x, y) with x a + y b = gcd(a, b) >= 0.
Small bezout(std::int64_t a, std::int64_t b) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    std::int64_t q = floor_div(a, b);
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  return a < 0 ? Small{-x0, -y0} : Small{x0, y0};
}

// hermite_normal_form of the columns (a, b) with b primitive, in closed
// form: U = [s(b1, -b0); r] with r.b = 1 and r.a reduced into [0, U_0 . a).
std::array<Small, 2> small_hermite(const Small& a, const Small& b) {
  std::int64_t d = b[1] * a[0] - b[0] * a[1];
  std::int64_t sign = d > 0 ? 1 : -1;
  Small top{sign * b[1], -sign * b[0]};
  std::int64_t h00 = sign * d;
  Small r = bezout(b[0], b[1]);
  std::int64_t t = floor_div(r[0] * a[0] + r[1] * a[1], h00);
  return {top, Small{r[0] - t * top[0], r[1] - t * top[1]}};
}

std::optional<CanonicalForm> small_canonical_form(const FanoPolytope& p) {
  std::vector<Small> v;
  for (const auto& x : p.vertices()) {
    if (abs(x[0]) >= kSmall || abs(x[1]) >= kSmall) return std::nullopt;
    v.push_back({x[0].get_si(), x[1].get_si()});
  }
  std::size_t n = v.size();
  std::vector<Small> best, list(n);
  std::array<Small, 2> best_map{};
  for (int orientation : {1, -1}) {
    for (std::size_t i = 0; i < n; ++i) {
      auto at = [&](std::size_t step) -> const Small& {
        return v[orientation > 0 ? (i + step) % n : (i + n - step % n) % n];
      };
      auto u = small_hermite(at(0), at(1));
      for (std::size_t k = 0; k < n; ++k) {
        const Small& x = at(k);
        list[k] = {u[0][0] * x[0] + u[0][1] * x[1], u[1][0] * x[0] + u[1][1] * x[1]};
      }
      if (best.empty() || list < best) {
        best = list;
        best_map = u;
      }
    }
  }
  std::vector<IntVector> key;
  for (const auto& x : best) key.push_back(make_vector({x[0], x[1]}));
  UnimodularMap map(IntMatrix{make_vector({best_map[0][0], best_map[0][1]}), make_vector({best_map[1][0], best_map[1][1]})});
  return CanonicalForm{key, make_fano(key), map};
}

}  // namespace

CanonicalForm canonical_form(const FanoPolytope& p) {
  if (p.dim() != 2) throw Error(ErrorKind::NotFano, "canonical form is defined for polygons");
  if (auto small = small_canonical_form(p)) return *small;
  const auto& v = p.vertices();
  std::size_t n = v.size();
  std::optional<std::vector<IntVector>> best;
  std::optional<UnimodularMap> best_map;
  for (int orientation : {1, -1}) {
    for (std::size_t i = 0; i < n; ++i) {
      auto at = [&](std::size_t step) {
        std::size_t idx = orientation > 0 ? (i + step) % n : (i + n - step % n) % n;
        return v[idx];
      };
      HermiteForm hf = hermite_normal_form(from_columns({at(0), at(1)}));
      std::vector<IntVector> list;
      list.reserve(n);
      for (std::size_t k = 0; k < n; ++k) list.push_back(hf.u.apply(at(k)));
      if (!best || list < *best) {
        best = std::move(list);
        best_map = hf.u;
      }
    }
  }
  return {*best, make_fano(*best), *best_map};
}

std::vector<IntVector> equivalence_key_3d(const FanoPolytope& p) {
  const auto& v = p.vertices();
  std::optional<std::vector<IntVector>> best;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b)
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (a == b || b == c || a == c) continue;
        IntMatrix m = from_columns({v[a], v[b], v[c]});
        if (determinant(m) == 0) continue;
        HermiteForm hf = hermite_normal_form(m);
        std::vector<IntVector> image;
        for (const auto& x : v) image.push_back(hf.u.apply(x));
        std::sort(image.begin(), image.end());
        if (!best || image < *best) best = std::move(image);
      }
  if (!best) throw Error(ErrorKind::Degenerate, "vertices do not span");
  return *best;
}

std::string polygon_hash(const FanoPolytope& canonical) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& v : canonical.vertices()) {
    for (char ch : to_string(v)) {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace fanomut
