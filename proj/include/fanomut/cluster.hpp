#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanomut/laurent.hpp"
#include "fanomut/lattice.hpp"

namespace fanomut {

/// Skew-symmetric exchange matrix; b[i][j] > 0 counts arrows i -> j.
/// `frozen` is sorted and duplicate-free.
struct Quiver {
  IntMatrix b;
  std::vector<std::size_t> frozen;

  std::size_t size() const { return b.size(); }
  bool is_frozen(std::size_t k) const;
  std::vector<std::size_t> unfrozen() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;
  friend bool operator<(const Quiver& a, const Quiver& b) {
    return a.b != b.b ? a.b < b.b : a.frozen < b.frozen;
  }
};

/// Throws InvariantViolation unless b is square and skew-symmetric.
Quiver make_quiver(IntMatrix b, std::vector<std::size_t> frozen = {});
Quiver unfrozen_part(const Quiver& q);

/// Matrix mutation; throws FrozenVertex.
Quiver quiver_mutate(const Quiver& q, std::size_t k);

constexpr std::size_t kMaxIsoSize = 12;

struct CanonicalQuiver {
  Quiver quiver;
  std::vector<std::size_t> order;  // quiver.b[p][r] == input.b[order[p]][order[r]]
};

/// Unfrozen vertices first, then by a vertex invariant; among the
/// remaining freedom, the lexicographically least upper triangle read
/// column by column. Throws SizeLimit above kMaxIsoSize vertices.
CanonicalQuiver canonical_quiver(const Quiver& q);

/// perm with b2[perm[i]][perm[j]] == b1[i][j], respecting frozen vertices.
std::optional<std::vector<std::size_t>> quiver_isomorphism(const Quiver& a, const Quiver& b);

struct QuiverClass {
  std::vector<Quiver> members;  // canonical forms in discovery order
  bool exceeded = false;
};

/// BFS over unfrozen mutations modulo isomorphism.
QuiverClass quiver_mutation_class(const Quiver& q, std::size_t max_size, unsigned jobs = 1);

enum class DynkinType { A1n, A2, A3, D4, Other };

struct DynkinResult {
  DynkinType type;
  std::size_t rank;  // number of unfrozen vertices
  std::string to_string() const;
};

/// Searches the mutation class of the unfrozen part for an orientation of
/// (A1)^n, A2, A3 or D4. Classes larger than `cutoff` give Other.
DynkinResult dynkin_type(const Quiver& q, std::size_t cutoff = 1000);

bool has_kronecker(const Quiver& q);

enum class FrozenMode { Unit, Symbolic };

/// Labelled seed. basis[i] lives in Z^m with skew form {a,b} = a^T form b;
/// cluster[i] is a Laurent polynomial in the initial variables.
struct Seed {
  Quiver quiver;
  IntMatrix form;
  std::vector<IntVector> basis;
  std::vector<LaurentPolynomial> cluster;
  FrozenMode mode = FrozenMode::Unit;
};

Seed initial_seed(const Quiver& q, FrozenMode mode = FrozenMode::Unit);

Integer skew_form(const IntMatrix& form, const IntVector& a, const IntVector& b);

/// e'_k = -e_k, e'_i = e_i + max(b_ik,0) e_k, and the exchange relation for
/// x_k. Throws FrozenVertex, or InternalNonLaurent if division fails.
Seed seed_mutate(const Seed& s, std::size_t k);

/// Throws InvariantViolation unless the skew form on the basis equals the
/// quiver's matrix.
void check_seed(const Seed& s);

/// Sorted unfrozen cluster variables.
std::vector<LaurentPolynomial> cluster_key(const Seed& s);

struct ExchangeGraph {
  std::vector<std::vector<LaurentPolynomial>> clusters;  // discovery order
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
  bool exceeded = false;
};

ExchangeGraph cluster_exchange_graph(const Seed& s, std::size_t max_clusters, unsigned jobs = 1);

}  // namespace fanomut
