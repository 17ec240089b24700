#include "fanomut/io.hpp"

#include <algorithm>
#include <climits>
#include <regex>
#include <sstream>

namespace fanomut {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) fail("expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

std::size_t size_from_json(const Json& j) {
  Integer x = integer_from_json(j);
  if (x < 0 || !x.fits_ulong_p()) fail("expected a nonnegative index");
  return x.get_ui();
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string vertex_label(const std::vector<IntVector>& vs) {
  std::string out;
  for (const auto& v : vs) out += to_string(v);
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(e.what());
  }
}

Json to_json(const Integer& x) {
  if (x.fits_slong_p() && LONG_MAX >= INT64_MAX) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Json to_json(const Rational& value) {
  Rational x = value;
  x.canonicalize();
  if (x.get_den() == 1) return to_json(Integer(x.get_num()));
  return x.get_str();
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_float()) fail("floats are not accepted");
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    static const std::regex digits("-?[0-9]+");
    const auto& s = j.get_ref<const std::string&>();
    if (!std::regex_match(s, digits)) fail("not an integer: " + s);
    return Integer(s);
  }
  fail("expected an integer");
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    static const std::regex frac("(-?[0-9]+)/([0-9]+)");
    std::smatch m;
    const auto& s = j.get_ref<const std::string&>();
    if (std::regex_match(s, m, frac)) {
      Integer den(m[2].str());
      if (den == 0) fail("zero denominator");
      Rational r(Integer(m[1].str()), den);
      r.canonicalize();
      return r;
    }
  }
  return Rational(integer_from_json(j));
}

IntVector int_vector_from_json(const Json& j) {
  IntVector v;
  for (const auto& x : array(j, "vector")) v.push_back(integer_from_json(x));
  return v;
}

Json to_json(const FanoPolytope& p) {
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  return {{"dim", p.dim()}, {"vertices", vs}};
}

FanoPolytope fano_from_json(const Json& j) {
  std::size_t dim = size_from_json(member(j, "dim"));
  if (dim != 2 && dim != 3) fail("dim must be 2 or 3");
  std::vector<IntVector> pts;
  for (const auto& v : array(member(j, "vertices"), "vertices")) {
    pts.push_back(int_vector_from_json(v));
    if (pts.back().size() != dim) fail("vertex of wrong length");
  }
  return make_fano(pts);
}

Json to_json(const RationalPolytope& p) {
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  return {{"dim", p.dim()}, {"vertices", vs}};
}

RationalPolytope rational_polytope_from_json(const Json& j) {
  std::size_t dim = size_from_json(member(j, "dim"));
  if (dim != 2 && dim != 3) fail("dim must be 2 or 3");
  std::vector<RatVector> pts;
  for (const auto& v : array(member(j, "vertices"), "vertices")) {
    RatVector p;
    for (const auto& x : array(v, "vertex")) p.push_back(rational_from_json(x));
    if (p.size() != dim) fail("vertex of wrong length");
    pts.push_back(p);
  }
  return convex_hull(pts, dim);
}

Json to_json(const LaurentPolynomial& w) {
  Json terms = Json::array();
  for (const auto& [e, c] : w.terms())
    terms.push_back({{"exp", to_json(e)}, {"num", to_json(Integer(c.get_num()))}, {"den", to_json(Integer(c.get_den()))}});
  return {{"dim", w.dim()}, {"terms", terms}};
}

LaurentPolynomial laurent_from_json(const Json& j) {
  std::size_t dim = size_from_json(member(j, "dim"));
  LaurentPolynomial w(dim);
  for (const auto& t : array(member(j, "terms"), "terms")) {
    IntVector e = int_vector_from_json(member(t, "exp"));
    if (e.size() != dim) fail("exponent of wrong length");
    Integer num = integer_from_json(member(t, "num"));
    Integer den = t.contains("den") ? integer_from_json(t["den"]) : Integer(1);
    if (den == 0) fail("zero denominator");
    w.add_term(e, Rational(num, den));
  }
  return w;
}

Json to_json(const Quiver& q) {
  Json b = Json::array();
  for (const auto& row : q.b) b.push_back(to_json(row));
  return {{"size", q.size()}, {"frozen", q.frozen}, {"b", b}};
}

Quiver quiver_from_json(const Json& j) {
  IntMatrix b;
  for (const auto& row : array(member(j, "b"), "b")) b.push_back(int_vector_from_json(row));
  if (j.contains("size") && size_from_json(j["size"]) != b.size()) fail("size does not match b");
  std::vector<std::size_t> frozen;
  if (j.contains("frozen"))
    for (const auto& f : array(j["frozen"], "frozen")) frozen.push_back(size_from_json(f));
  return make_quiver(b, frozen);
}

Json to_json(const MutationData& d) { return {{"w", to_json(d.weight)}, {"f", to_json(d.factor)}}; }

MutationData mutation_data_from_json(const Json& j) {
  return {int_vector_from_json(member(j, "w")), int_vector_from_json(member(j, "f"))};
}

Json to_json(const CompatibleCollection& e) {
  Json items = Json::array();
  for (const auto& d : e.items) items.push_back(to_json(d));
  return {{"dim", e.dim()}, {"items", items}};
}

CompatibleCollection collection_from_json(const Json& j) {
  std::size_t dim = size_from_json(member(j, "dim"));
  std::vector<MutationData> items;
  for (const auto& it : array(member(j, "items"), "items")) {
    items.push_back(mutation_data_from_json(it));
    if (items.back().weight.size() != dim || items.back().factor.size() != dim) fail("item of wrong length");
  }
  if (items.empty()) fail("empty collection");
  return check_compatible(items);
}

Json to_json(const SingularityContent& s) {
  Json basket = Json::array();
  for (const auto& t : s.basket_types()) basket.push_back({{"order", to_json(t.order)}, {"weight", to_json(t.weight)}});
  return {{"n", to_json(s.tcone_total)}, {"basket", basket}};
}

Json to_json(const MutationGraph& g) {
  Json nodes = Json::array(), edges = Json::array();
  for (const auto& p : g.nodes) nodes.push_back({{"id", polygon_hash(p)}, {"vertices", to_json(p)["vertices"]}});
  for (const auto& e : g.edges)
    edges.push_back({{"from", polygon_hash(g.nodes[e.from])}, {"to", polygon_hash(g.nodes[e.to])}, {"index", e.index}});
  return {{"status", g.status == GraphStatus::Complete ? "complete" : "exceeded"},
          {"reason", g.reason},
          {"size", g.nodes.size()},
          {"nodes", nodes},
          {"edges", edges}};
}

Json to_json(const FiniteTypeReport& r) {
  Json out = {{"quiver_type", r.quiver_type.to_string()},
              {"kronecker", r.kronecker},
              {"verdict", verdict_name(r.verdict)}};
  if (r.graph_status) {
    out["graph_status"] = *r.graph_status == GraphStatus::Complete ? "complete" : "exceeded";
    out["class_size"] = r.polygon_class_size;
  } else {
    out["graph_status"] = nullptr;
  }
  return out;
}

Json to_json(const ExchangeGraph& g) {
  Json clusters = Json::array(), edges = Json::array();
  for (const auto& c : g.clusters) {
    Json vars = Json::array();
    for (const auto& x : c) vars.push_back(to_json(x));
    clusters.push_back(vars);
  }
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  return {{"exceeded", g.exceeded}, {"size", g.clusters.size()}, {"clusters", clusters}, {"edges", edges}};
}

std::string to_dot(const MutationGraph& g) {
  std::ostringstream out;
  out << "digraph mutations {\n";
  for (const auto& p : g.nodes)
    out << "  " << quoted(polygon_hash(p)) << " [label=" << quoted(vertex_label(p.vertices())) << "];\n";
  for (const auto& e : g.edges)
    out << "  " << quoted(polygon_hash(g.nodes[e.from])) << " -> " << quoted(polygon_hash(g.nodes[e.to]))
        << " [label=\"" << e.index << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (std::size_t i = 0; i < q.size(); ++i)
    out << "  " << i << (q.is_frozen(i) ? " [shape=box];\n" : " [shape=circle];\n");
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      if (q.b[i][j] > 0) out << "  " << i << " -> " << j << " [label=\"" << q.b[i][j].get_str() << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const ExchangeGraph& g) {
  std::ostringstream out;
  out << "graph exchange {\n";
  for (std::size_t i = 0; i < g.clusters.size(); ++i) {
    std::string label;
    for (const auto& x : g.clusters[i]) label += (label.empty() ? "" : ", ") + x.to_string();
    out << "  " << i << " [label=" << quoted(label) << "];\n";
  }
  for (auto [a, b] : g.edges) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_svg(const FanoPolytope& p) {
  if (p.dim() != 2) throw Error(ErrorKind::InvariantViolation, "svg needs a polygon");
  Integer r = 1;
  for (const auto& v : p.vertices())
    for (const auto& x : v) r = std::max(r, Integer(abs(x)));
  const long unit = 40, lim = r.get_si() + 1, size = 2 * lim * unit;
  auto sx = [&](const Integer& x) { return (x.get_si() + lim) * unit; };
  auto sy = [&](const Integer& y) { return (lim - y.get_si()) * unit; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
      << size << " " << size << "\">\n";
  out << "  <polygon points=\"";
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    out << (i ? " " : "") << sx(p.vertices()[i][0]) << "," << sy(p.vertices()[i][1]);
  out << "\" fill=\"#dde6f2\" stroke=\"#1f3b63\" stroke-width=\"2\"/>\n";
  for (long x = -lim + 1; x < lim; ++x)
    for (long y = -lim + 1; y < lim; ++y) {
      bool origin = x == 0 && y == 0;
      out << "  <circle cx=\"" << (x + lim) * unit << "\" cy=\"" << (lim - y) * unit << "\" r=\"" << (origin ? 5 : 2)
          << "\" fill=\"" << (origin ? "#b03030" : "#555555") << "\"/>\n";
    }
  out << "</svg>\n";
  return out.str();
}

}  // namespace fanomut
