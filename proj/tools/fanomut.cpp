// fanomut: command-line driver. Exit codes: 0 ok, 2 bad input, 3 finding
// (NotConvex, NotLaurent, Exceeded, failed check), 4 internal invariant.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "fanomut/io.hpp"

using namespace fanomut;

namespace {

constexpr int kOk = 0, kInput = 2, kFinding = 3, kInternal = 4;

struct Options {
  std::size_t max_nodes = 10000;
  std::string max_coord = "1000000";
  int depth = 4;
  std::string format = "json";
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::string frozen_mode = "unit";
  std::string output;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Json read_json(const std::string& path) { return parse_json(read_input(path)); }

void write_output(const Options& o, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + o.output);
  out << text;
}

void write_json(const Options& o, const Json& j) { write_output(o, j.dump() + "\n"); }

IntVector parse_list(const std::string& s) {
  IntVector v;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) v.push_back(integer_from_json(Json(part)));
  if (v.empty()) throw Error(ErrorKind::Parse, "empty vector");
  return v;
}

GraphLimits limits(const Options& o) {
  GraphLimits l;
  l.max_nodes = o.max_nodes;
  l.max_coord = integer_from_json(Json(o.max_coord));
  if (l.max_coord <= 0) throw Error(ErrorKind::Parse, "--max-coord must be positive");
  l.jobs = o.jobs;
  return l;
}

FrozenMode frozen_mode(const Options& o) { return o.frozen_mode == "symbolic" ? FrozenMode::Symbolic : FrozenMode::Unit; }

Json polygon_report(const FanoPolytope& p) {
  Json out = to_json(p);
  if (p.dim() == 2) {
    out["singularity_content"] = to_json(singularity_content(p));
    out["canonical"] = to_json(canonical_form(p).polygon)["vertices"];
    out["dual_area"] = to_json(volume(polytope_dual(p.hull())));
    out["quiver"] = to_json(polygon_seed(p).quiver);
  } else {
    out["dual_volume"] = to_json(volume(polytope_dual(p.hull())));
  }
  return out;
}

void write_polygon(const Options& o, const FanoPolytope& p, const Json& j) {
  if (o.format == "svg" && p.dim() == 2)
    write_output(o, to_svg(p));
  else
    write_json(o, j);
}

int cmd_validate(const Options& o, const std::string& in) {
  FanoPolytope p = fano_from_json(read_json(in));
  write_polygon(o, p, polygon_report(p));
  return kOk;
}

int cmd_mutate(const Options& o, const std::string& in, const std::string& w, const std::string& f, long edge) {
  FanoPolytope p = fano_from_json(read_json(in));
  MutationData d;
  if (edge >= 0) {
    auto es = edges(p);
    if (p.dim() != 2 || static_cast<std::size_t>(edge) >= es.size()) throw Error(ErrorKind::Parse, "no such edge");
    d = edge_mutation(es[static_cast<std::size_t>(edge)]);
  } else {
    if (w.empty() || f.empty()) throw Error(ErrorKind::Parse, "give --w and --f, or --edge");
    d = make_mutation_data(parse_list(w), parse_list(f));
  }
  FanoPolytope r = combinatorial_mutate(p, d);
  write_polygon(o, r, to_json(r));
  return kOk;
}

int cmd_classify(const Options& o, const std::string& in) {
  FanoPolytope p = fano_from_json(read_json(in));
  ClassifyOptions c;
  c.limits = limits(o);
  auto report = classify(p, c);
  Json out = to_json(report);
  out["quiver"] = to_json(polygon_seed(p).quiver);
  out["singularity_content"] = to_json(singularity_content(p));
  write_json(o, out);
  return kOk;
}

int cmd_explore(const Options& o, const std::string& in, const std::string& out_dir, bool svg) {
  FanoPolytope p = fano_from_json(read_json(in));
  auto g = polygon_mutation_graph(p, limits(o));
  if (!out_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::ofstream(fs::path(out_dir) / "graph.json") << to_json(g).dump() << "\n";
    std::ofstream(fs::path(out_dir) / "graph.dot") << to_dot(g);
    if (svg) {
      fs::create_directories(fs::path(out_dir) / "nodes");
      for (const auto& n : g.nodes) std::ofstream(fs::path(out_dir) / "nodes" / (polygon_hash(n) + ".svg")) << to_svg(n);
    }
  } else if (o.format == "dot") {
    write_output(o, to_dot(g));
  } else if (o.format == "svg") {
    std::string all;
    for (const auto& n : g.nodes) all += to_svg(n);
    write_output(o, all);
  } else {
    write_json(o, to_json(g));
  }
  return g.status == GraphStatus::Complete ? kOk : kFinding;
}

int cmd_quiver(const Options& o, const std::string& action, const std::string& in, std::size_t vertex) {
  Quiver q = quiver_from_json(read_json(in));
  if (action == "mutate") {
    Quiver m = quiver_mutate(q, vertex);
    o.format == "dot" ? write_output(o, to_dot(m)) : write_json(o, to_json(m));
    return kOk;
  }
  if (action == "class") {
    auto c = quiver_mutation_class(q, o.max_nodes, o.jobs);
    Json members = Json::array();
    for (const auto& m : c.members) members.push_back(to_json(m));
    write_json(o, {{"exceeded", c.exceeded}, {"size", c.members.size()}, {"members", members}});
    return c.exceeded ? kFinding : kOk;
  }
  auto t = dynkin_type(q);
  write_json(o, {{"type", t.to_string()}, {"rank", t.rank}, {"kronecker", has_kronecker(q)}});
  return kOk;
}

int cmd_cluster(const Options& o, const std::string& in) {
  Quiver q = quiver_from_json(read_json(in));
  auto g = cluster_exchange_graph(initial_seed(q, frozen_mode(o)), o.max_nodes, o.jobs);
  o.format == "dot" ? write_output(o, to_dot(g)) : write_json(o, to_json(g));
  return g.exceeded ? kFinding : kOk;
}

int cmd_highdim(const Options& o, const std::string& action, const std::string& in, std::size_t index,
                const std::string& polytope) {
  if (action == "seed") {
    Json j = read_json(in);
    IntMatrix b, v;
    for (const auto& row : j.at("b")) b.push_back(int_vector_from_json(row));
    if (j.contains("kernel"))
      for (const auto& row : j["kernel"]) v.push_back(int_vector_from_json(row));
    write_json(o, to_json(from_cluster_seed(b, v)));
    return kOk;
  }
  CompatibleCollection e = collection_from_json(read_json(in));
  if (action == "check") {
    Json out = to_json(e);
    out["quiver"] = to_json(collection_quiver(e));
    out["type"] = dynkin_type(collection_quiver(e)).to_string();
    if (e.size() == 2) {
      auto t = tropical_period(e, 20);
      out["pl_period"] = t ? Json(*t) : Json(nullptr);
      auto l = labelled_period(e, 20);
      out["labelled_period"] = l ? Json(*l) : Json(nullptr);
    }
    write_json(o, out);
    return kOk;
  }
  if (action == "mutate") {
    write_json(o, to_json(collection_mutate(e, index)));
    return kOk;
  }
  if (polytope.empty()) throw Error(ErrorKind::Parse, "pentagon needs --polytope");
  auto walk = pentagon_walk(rational_polytope_from_json(read_json(polytope)), e, static_cast<std::size_t>(o.depth));
  Json ps = Json::array();
  for (const auto& q : walk.polytopes) ps.push_back(to_json(q));
  write_json(o, {{"polytopes", ps},
                 {"indices", walk.indices},
                 {"failed_step", walk.failed_step ? Json(*walk.failed_step) : Json(nullptr)},
                 {"closes_at", walk.closes_at ? Json(*walk.closes_at) : Json(nullptr)},
                 {"distinct", walk.distinct}});
  return walk.failed_step || !walk.closes_at ? kFinding : kOk;
}

int cmd_mutable(const Options& o, const std::string& in) {
  auto r = maximally_mutable(laurent_from_json(read_json(in)), o.depth);
  Json path = Json::array();
  for (const auto& d : r.failing_path) path.push_back(to_json(d));
  write_json(o, {{"passed", r.passed}, {"mutations", r.mutations}, {"failing_path", path}});
  return r.passed ? kOk : kFinding;
}

// Random edge mutations of random polygons; checks the invariants and the
// inverse law. Exit 4 on a violation.
int cmd_check(const Options& o, std::size_t count) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<long> coord(-5, 5);
  std::size_t done = 0, attempts = 0;
  while (done < count && attempts < 100 * count) {
    ++attempts;
    std::vector<IntVector> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(make_vector({coord(rng), coord(rng)}));
    FanoPolytope p;
    try {
      p = make_fano(pts);
    } catch (const Error&) {
      continue;
    }
    auto s = polygon_seed(p);
    if (s.unfrozen_count == 0) continue;
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, s.unfrozen_count - 1)(rng);
    FanoPolytope r = polygon_mutate_at(p, k);
    auto d = edge_mutation(s.edges[s.edge_of[k]]);
    if (!same_singularity_content(singularity_content(r), singularity_content(p)) ||
        volume(polytope_dual(r.hull())) != volume(polytope_dual(p.hull())) ||
        combinatorial_mutate(combinatorial_mutate(p, d), inverse(d)) != p)
      throw Error(ErrorKind::InvariantViolation, "invariant failed on " + to_json(p).dump());
    ++done;
  }
  write_json(o, {{"seed", o.seed}, {"checked", done}});
  return done == count ? kOk : kFinding;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutations of Fano polytopes, quivers and cluster seeds"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-nodes", o.max_nodes, "node cutoff for searches")->check(CLI::PositiveNumber);
  app.add_option("--max-coord", o.max_coord, "coordinate cutoff for polygon searches");
  app.add_option("--depth", o.depth, "search depth or walk length")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "dot", "svg"}));
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.add_option("--frozen-mode", o.frozen_mode, "frozen variables")->check(CLI::IsMember({"symbolic", "unit"}));
  app.add_option("-o,--output", o.output, "output file, default stdout");
  app.fallthrough();

  std::string in, w, f, out_dir, action, polytope;
  long edge = -1;
  std::size_t index = 0, count = 100;
  bool svg = false;

  auto* validate = app.add_subcommand("validate", "check a polytope and print its data");
  validate->add_option("input", in)->required();
  auto* mutate = app.add_subcommand("mutate", "combinatorial mutation");
  mutate->add_option("input", in)->required();
  mutate->add_option("--w", w, "weight, comma separated");
  mutate->add_option("--f", f, "factor, comma separated");
  mutate->add_option("--edge", edge, "use the edge mutation of this edge")->check(CLI::NonNegativeNumber);
  auto* cls = app.add_subcommand("classify", "finite mutation type report");
  cls->add_option("input", in)->required();
  auto* explore = app.add_subcommand("explore", "mutation graph of a polygon");
  explore->add_option("input", in)->required();
  explore->add_option("--out-dir", out_dir, "write graph.json, graph.dot and nodes/");
  explore->add_flag("--svg", svg, "with --out-dir, draw every node");
  auto* quiver = app.add_subcommand("quiver", "quiver operations");
  quiver->add_option("action", action)->required()->check(CLI::IsMember({"mutate", "class", "type"}));
  quiver->add_option("input", in)->required();
  quiver->add_option("--vertex", index, "vertex to mutate");
  auto* cluster = app.add_subcommand("cluster", "cluster exchange graph");
  cluster->add_option("action", action)->required()->check(CLI::IsMember({"graph"}));
  cluster->add_option("input", in)->required();
  auto* highdim = app.add_subcommand("highdim", "compatible collections");
  highdim->add_option("action", action)->required()->check(CLI::IsMember({"check", "mutate", "pentagon", "seed"}));
  highdim->add_option("input", in)->required();
  highdim->add_option("--index", index, "item to mutate");
  highdim->add_option("--polytope", polytope, "start polytope for pentagon");
  auto* mut = app.add_subcommand("mutable", "maximal mutability of a Laurent polynomial");
  mut->add_option("input", in)->required();
  auto* check = app.add_subcommand("check", "randomized invariant checks");
  check->add_option("--count", count, "number of mutations")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*validate) return cmd_validate(o, in);
    if (*mutate) return cmd_mutate(o, in, w, f, edge);
    if (*cls) return cmd_classify(o, in);
    if (*explore) return cmd_explore(o, in, out_dir, svg);
    if (*quiver) return cmd_quiver(o, action, in, index);
    if (*cluster) return cmd_cluster(o, in);
    if (*highdim) return cmd_highdim(o, action, in, index, polytope);
    if (*mut) return cmd_mutable(o, in);
    if (*check) return cmd_check(o, count);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (is_internal(e.kind())) return kInternal;
    return is_finding(e.kind()) ? kFinding : kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "Parse: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
