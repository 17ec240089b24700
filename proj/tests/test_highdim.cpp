#include "doctest.h"
#include "fanomut/bridge.hpp"
#include "fanomut/highdim.hpp"
#include "support.hpp"

using namespace fanomut;
using fanomut::testing::random_fano;
using fanomut::testing::mutate_basis;
using fanomut::testing::random_form;
using fanomut::testing::random_kernel_part;
using fanomut::testing::random_vector;
using fanomut::testing::uniform;

namespace {

MutationData item(std::initializer_list<long> w, std::initializer_list<long> f) {
  return {make_vector(w), make_vector(f)};
}

CompatibleCollection b5() { return check_compatible({item({-1, 0, 0}, {0, 1, 1}), item({0, 0, -1}, {-1, 0, 0})}); }

RationalPolytope hull3(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<IntVector> v;
  for (auto p : pts) v.push_back(make_vector(p));
  return convex_hull(v, 3);
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Parse;
}

IntMatrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m;
  for (auto r : rows) m.push_back(make_vector(r));
  return m;
}

}  // namespace

TEST_CASE("compatible collections") {
  auto e = b5();
  CHECK(e.form[0][1] == 1);
  CHECK(e.form[1][0] == -1);
  CHECK(dynkin_type(collection_quiver(e)).type == DynkinType::A2);

  auto single = check_compatible({item({1, 0}, {0, 1})});
  CHECK(collection_quiver(single).size() == 1);
  CHECK(collection_quiver(single).b[0][0] == 0);

  CHECK(kind_of([] { check_compatible({item({1, 0}, {0, 1}), item({0, 1}, {1, 0})}); }) == ErrorKind::Incompatible);
  CHECK(kind_of([] { check_compatible({item({2, 0}, {0, 1})}); }) == ErrorKind::NonPrimitive);
  CHECK(kind_of([] { check_compatible({item({1, 0}, {1, 1})}); }) == ErrorKind::NotAnnihilating);
  CHECK_NOTHROW(check_compatible({item({2, 0}, {0, 1})}, false));
}

TEST_CASE("polygon collections reproduce the unfrozen quiver") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = polygon_seed(random_fano(rng, 2, 3, 6));
    if (s.unfrozen_count == 0) continue;
    std::vector<MutationData> items;
    for (std::size_t i = 0; i < s.unfrozen_count; ++i) items.push_back(edge_mutation(s.edges[s.edge_of[i]]));
    auto e = check_compatible(items);
    for (std::size_t i = 0; i < s.unfrozen_count; ++i)
      for (std::size_t j = 0; j < s.unfrozen_count; ++j) CHECK(e.form[i][j] == s.quiver.b[i][j]);
    auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(s.unfrozen_count) - 1));
    // twice gives the shear E_i + <w_i,f_k> E_k
    auto twice = collection_mutate(collection_mutate(e, k), k);
    CHECK(twice.form == e.form);
    for (std::size_t i = 0; i < e.size(); ++i) {
      const auto& a = e.items[i];
      const auto& c = e.items[k];
      CHECK(twice.items[i].weight == a.weight + e.form[i][k] * c.weight);
      CHECK(twice.items[i].factor == a.factor + e.form[i][k] * c.factor);
    }
  }
}

TEST_CASE("cluster seed collections") {
  auto a2 = from_cluster_seed(matrix({{0, 1}, {-1, 0}}), {});
  CHECK(a2.size() == 2);
  CHECK(dynkin_type(collection_quiver(a2)).type == DynkinType::A2);

  auto markov = matrix({{0, 3, -3}, {-3, 0, 3}, {3, -3, 0}});
  auto m = from_cluster_seed(markov, matrix({{1, 1, 1}}));
  CHECK(m.size() == 3);
  CHECK(m.dim() == 2);
  CHECK(m.form == markov);
  CHECK(kind_of([&] { from_cluster_seed(markov, matrix({{1, 0, 0}})); }) == ErrorKind::NotInKernel);

  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 5));
    IntMatrix b = random_form(rng, n, 2);
    auto proj = seed_projection(b, random_kernel_part(rng, b));
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n, 0);
      e[i] = 1;
      basis.push_back(e);
    }
    std::vector<MutationData> items;
    for (const auto& v : basis) items.push_back(proj.theta(v));
    auto coll = check_compatible(items, false);
    CHECK(coll.form == b);
    for (int step = 0; step < 4; ++step) {
      auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
      basis = mutate_basis(b, basis, k);
      coll = collection_mutate(coll, k);
      std::vector<MutationData> mapped;
      for (const auto& v : basis) mapped.push_back(proj.theta(v));
      CHECK(coll.items == mapped);
    }
  }

  // the same through seed_mutate on small seeds
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 4));
    IntMatrix b = random_form(rng, n, 1);
    auto proj = seed_projection(b, random_kernel_part(rng, b));
    Seed s = initial_seed(make_quiver(b), FrozenMode::Symbolic);
    auto coll = collection_of_seed(s, proj);
    for (int step = 0; step < 3; ++step) {
      auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
      s = seed_mutate(s, k);
      coll = collection_mutate(coll, k);
      CHECK(collection_of_seed(s, proj) == coll);
    }
  }
}

TEST_CASE("walk periods") {
  CHECK(tropical_period(b5(), 12) == 5u);
  CHECK(tropical_period(b5(), 12, PlConvention::NewtonDual) == 7u);
  CHECK(labelled_period(b5(), 12) == 4u);

  auto commuting = check_compatible({item({1, 0, 0}, {0, 1, 0}), item({0, 0, 1}, {0, 1, 0})});
  auto p = tropical_period(commuting, 12);
  REQUIRE(p);
  CHECK(*p <= 4);
}

TEST_CASE("three-dimensional mutations") {
  auto start = hull3({{-1, -1, 1}, {-1, 0, 0}, {0, -1, -1}, {0, 1, -1}, {1, -1, 1}, {1, 1, 1}});
  auto walk = pentagon_walk(start, b5(), 10);
  CHECK_FALSE(walk.failed_step);
  CHECK(walk.closes_at == 5u);
  CHECK(walk.distinct == 5);
  for (const auto& q : walk.polytopes) CHECK(volume(q) == volume(start));

  auto breaks = hull3({{-1, 1, -1}, {0, -1, 1}, {0, 1, 0}, {1, -1, 0}, {1, 0, 1}});
  auto bad = pentagon_walk(breaks, b5(), 10);
  CHECK(bad.failed_step == 2u);
  CHECK(bad.polytopes.size() == 2);

  // bipyramid over the P^2 polygon; an edge mutation lifts from the plane
  auto p2 = make_fano({make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, -1})});
  auto lift = [](const std::vector<IntVector>& pts) {
    std::vector<IntVector> out{make_vector({0, 0, 1}), make_vector({0, 0, -1})};
    for (const auto& v : pts) out.push_back(make_vector({v[0].get_si(), v[1].get_si(), 0}));
    return make_fano(out);
  };
  auto plane = edge_mutation(edges(p2)[0]);
  MutationData d{make_vector({plane.weight[0].get_si(), plane.weight[1].get_si(), 0}),
                 make_vector({plane.factor[0].get_si(), plane.factor[1].get_si(), 0})};
  auto bipyramid = lift(p2.vertices());
  auto r = mutate_polytope_3d(bipyramid, d);
  CHECK(r == lift(combinatorial_mutate(p2, plane).vertices()));
  CHECK(volume(polytope_dual(r.hull())) == volume(polytope_dual(bipyramid.hull())));
  CHECK(mutate_polytope_3d(r, inverse(d)) == bipyramid);
  CHECK(kind_of([&] { mutate_polytope_3d(p2, d); }) == ErrorKind::InvariantViolation);
}

TEST_CASE("mutation commutes with the seed projection") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 3));
    IntMatrix b = random_form(rng, n, 1);
    IntMatrix v = n == 3 ? integer_kernel(b, n) : IntMatrix{};
    if (v.size() != n - 2) continue;
    auto proj = seed_projection(b, v);
    Seed s = initial_seed(make_quiver(b), FrozenMode::Symbolic);
    for (int step = 0; step < 2; ++step) {
      auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
      auto c = check_commutation(s, proj, k, random_vector(rng, 2, 2));
      CHECK(c.equal);
      s = seed_mutate(s, k);
    }
  }
}
