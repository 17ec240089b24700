#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fanomut/cluster.hpp"
#include "fanomut/laurent.hpp"
#include "fanomut/mutation.hpp"
#include "fanomut/polygon.hpp"

namespace fanomut {

/// Quiver data of a Fano polygon. Unfrozen indices come first, m_E
/// consecutive copies per edge in counter-clockwise order; frozen indices
/// follow, one per residual cone.
struct PolygonSeed {
  FanoPolytope polygon;
  std::vector<EdgeData> edges;
  std::size_t unfrozen_count = 0;
  std::vector<IntVector> rho;         // primitive inward normal per index
  std::vector<std::size_t> edge_of;   // unfrozen index -> position in edges
  std::vector<ResidueCone> basket;    // frozen index - unfrozen_count -> cone
  Quiver quiver;                      // b_ij = det[rho_i rho_j]
};

/// Throws InvariantViolation if the rank or transitivity properties fail.
PolygonSeed polygon_seed(const FanoPolytope& p);

MutationData edge_mutation(const EdgeData& e);

/// Mutation at unfrozen index k. Checks that the transported normals give
/// quiver_mutate(Q_P, k) and match the seed of the result, else
/// CompatibilityBroken.
FanoPolytope polygon_mutate_at(const FanoPolytope& p, std::size_t k);

struct MutationEdge {
  std::size_t from;
  std::size_t index;  // unfrozen index in the seed of `from`
  std::size_t to;
};

enum class GraphStatus { Complete, Exceeded };

struct MutationGraph {
  std::vector<FanoPolytope> nodes;  // canonical forms, discovery order
  std::vector<MutationEdge> edges;
  GraphStatus status = GraphStatus::Complete;
  std::string reason;  // why the search stopped early
};

struct GraphLimits {
  std::size_t max_nodes = 10000;
  Integer max_coord = Integer(1000000);
  unsigned jobs = 1;
};

MutationGraph polygon_mutation_graph(const FanoPolytope& p, const GraphLimits& limits = {});

enum class Verdict { Finite, Infinite, Inconclusive };
std::string verdict_name(Verdict v);

struct ClassifyOptions {
  GraphLimits limits;
  bool kronecker_fast_path = true;
  std::size_t quiver_cutoff = 1000;
};

struct FiniteTypeReport {
  DynkinResult quiver_type;
  bool kronecker = false;
  std::optional<GraphStatus> graph_status;  // empty when the search was skipped
  std::size_t polygon_class_size = 0;       // nodes found, meaningful when Complete
  Verdict verdict = Verdict::Inconclusive;
};

FiniteTypeReport classify(const FanoPolytope& p, const ClassifyOptions& options = {});

struct HeightPair {
  Integer h1;
  Integer h2;
  friend bool operator==(const HeightPair&, const HeightPair&) = default;
};

/// Alternately mutates at unfrozen indices i and j, recording the local
/// indices of their edges, starting with the initial pair. Throws
/// NotKronecker unless |b_ij| >= 2, InvariantViolation if an inequality
/// h' >= k h_other - h fails.
std::vector<HeightPair> kronecker_growth_trace(const FanoPolytope& p, std::size_t i, std::size_t j, int steps);

struct MutabilityReport {
  bool passed = true;
  std::size_t mutations = 0;                  // successful algebraic mutations
  std::vector<MutationData> failing_path;     // last entry is the failing step
};

/// Depth-limited search over edge mutations of Newt(W), transporting W by
/// algebraic mutation. Throws NotFanoSupport.
MutabilityReport maximally_mutable(const LaurentPolynomial& w, int depth = 4);

/// Every Fano polygon with vertices in [-r, r]^2, optionally only those
/// with exactly `tcones` T-cones. Found by a depth-first search over
/// vertices in angular order; each polygon is produced once.
std::vector<FanoPolytope> fano_polygons_in_box(long r, std::optional<long> tcones = std::nullopt);

using SmallPoint = std::array<long, 2>;

/// Same search, passing each counter-clockwise vertex list to `visit`
/// without building polytopes.
void for_each_fano_polygon(long r, std::optional<long> tcones,
                           const std::function<void(const std::vector<SmallPoint>&)>& visit);

/// Polygons in [-r, r]^2 with singularity content (2, B) whose two T-cone
/// normals form a lattice basis, one canonical form per GL(2,Z) class.
std::vector<FanoPolytope> unimodular_pair_polygons(long r);

}  // namespace fanomut
