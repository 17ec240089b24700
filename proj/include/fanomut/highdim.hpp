#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fanomut/cluster.hpp"
#include "fanomut/mutation.hpp"

namespace fanomut {

/// Mutation data E_i = (w_i, f_i) over a common lattice with
/// <w_i,f_j> = -<w_j,f_i>. form[i][j] = <w_i, f_j>.
struct CompatibleCollection {
  std::vector<MutationData> items;
  IntMatrix form;

  std::size_t dim() const { return items.empty() ? 0 : items.front().weight.size(); }
  std::size_t size() const { return items.size(); }
  friend bool operator==(const CompatibleCollection&, const CompatibleCollection&) = default;
};

/// Throws Incompatible, NotAnnihilating, or NonPrimitive when
/// require_primitive is set.
CompatibleCollection check_compatible(const std::vector<MutationData>& items, bool require_primitive = true);

Quiver collection_quiver(const CompatibleCollection& e);

/// E_k -> -E_k and E_i -> E_i + max(<w_i,f_k>, 0) E_k. The items need not
/// stay primitive. Throws CompatibilityBroken if the result is not
/// compatible or its quiver is not quiver_mutate(Q_E, k).
CompatibleCollection collection_mutate(const CompatibleCollection& e, std::size_t k);

/// theta(n) = (p(n), {-, n}) for a skew form B on Z^m and a sublattice V of
/// ker B given by rows. p is the projection onto Z^m / sat(V) in the
/// coordinates of a unimodular completion.
struct SeedProjection {
  IntMatrix form;        // m x m
  IntMatrix projection;  // (m - r) x m, kernel sat(V)
  IntMatrix section;     // m x (m - r), projection * section = 1

  std::size_t rank() const { return projection.size(); }
  MutationData theta(const IntVector& n) const;
};

/// Throws NotInKernel.
SeedProjection seed_projection(const IntMatrix& b, const IntMatrix& v);

/// theta applied to the standard basis.
CompatibleCollection from_cluster_seed(const IntMatrix& b, const IntMatrix& v);

/// theta applied to the current basis of a seed whose form is proj.form.
CompatibleCollection collection_of_seed(const Seed& s, const SeedProjection& proj);

/// combinatorial_mutate restricted to dimension 3.
FanoPolytope mutate_polytope_3d(const FanoPolytope& p, const MutationData& d);

/// Sign of the piecewise linear map attached to an item (w, f) of a walk.
/// Printed: m + max(0, <m,f>) w, which is tropical_map with (w, -f).
/// NewtonDual: tropical_map with (w, f).
enum class PlConvention { Printed, NewtonDual };

MutationData walk_map(const MutationData& item, PlConvention c);

/// Composite of the maps met along the walk mu_0, mu_1, mu_0, ... where step
/// s uses the transported item being mutated. Returns the first step at
/// which the composite agrees with a linear map on the sample set (the grid
/// [-3,3]^d plus seeded random rationals).
std::optional<std::size_t> tropical_period(const CompatibleCollection& e, std::size_t max_steps,
                                           PlConvention c = PlConvention::Printed);

/// Number of steps of the alternating walk after which the labelled
/// collection returns to itself, if within max_steps.
std::optional<std::size_t> labelled_period(const CompatibleCollection& e, std::size_t max_steps);

struct PentagonWalk {
  std::vector<RationalPolytope> polytopes;  // start first
  std::vector<std::size_t> indices;         // item mutated at each step
  std::optional<std::size_t> failed_step;   // NotConvex at this step
  std::optional<std::size_t> closes_at;     // first step s > 0 with Q_s = L(Q_0), L the linear composite
  std::size_t distinct = 0;                 // classes before closing, by invariant fingerprint
};

/// Applies the tropical maps of a two-item collection to a polytope q in M,
/// alternately mutating items 0 and 1 and transporting the collection.
PentagonWalk pentagon_walk(const RationalPolytope& q, const CompatibleCollection& e, std::size_t max_steps,
                           PlConvention c = PlConvention::Printed);

/// Rational function obtained by pulling z^u back along the seed's
/// projection: prod x_i^<u, w_i>.
RationalFunction pullback_monomial(const Seed& s, const SeedProjection& proj, const IntVector& u);

struct CommutationCheck {
  RationalFunction mutate_then_pull;  // z^u pulled back to the mutated seed, cluster of s' substituted
  RationalFunction pull_of_mutation;  // phi_{theta(e'_k)}(z^u) pulled back along s
  bool equal = false;
};

CommutationCheck check_commutation(const Seed& s, const SeedProjection& proj, std::size_t k, const IntVector& u);

}  // namespace fanomut
