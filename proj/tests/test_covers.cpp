#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bkvc/covers.hpp"
#include "bkvc/exact.hpp"
#include "bkvc/rng.hpp"

using namespace bkvc;

namespace {

BipartiteGraph k22() { return BipartiteGraph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}); }

void check_solution(const BipartiteGraph& g, const CoverSolution& s, int k) {
  CHECK(static_cast<int>(s.chosen.size()) <= k);
  CHECK(s.value == covered_edges(g, s.chosen));
}

}  // namespace

TEST_CASE("greedy") {
  CHECK(greedy(k22(), 2).value == 4);
  CHECK(greedy(BipartiteGraph(3, 3, {}), 2).value == 0);
  // star a0 -> b0, b1, b2 next to the matching a1-b3, a2-b4, a3-b5
  const BipartiteGraph star(4, 6, {{0, 0}, {0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}});
  const CoverSolution s = greedy(star, 2);
  CHECK(s.value == 4);
  CHECK(s.value == brute_force_opt(star, 2).opt_value);
  CHECK(s.chosen == VertexSet{0, 1});
  CHECK(greedy(star, 0).value == 0);
}

TEST_CASE("two-thirds") {
  CHECK(two_thirds(k22(), 1).value == 2);
  // one class alone holds the optimum: the k1 = k or k2 = k split finds it
  const BipartiteGraph g = generate_semiregular(6, 4, 2, 3, 2);
  for (int k = 1; k <= 4; ++k) CHECK(two_thirds(g, k).value == brute_force_opt(g, k).opt_value);
  const auto sols = two_thirds_split(k22(), 1, 1);
  for (const auto& s : sols) check_solution(k22(), s, 2);
}

TEST_CASE("nu-xi-zero") {
  CHECK(nu_xi_zero(k22(), 0).value == 0);
  CHECK(nu_xi_zero(k22(), 2).value == 4);
  const NuXiZeroIteration it = nu_xi_zero_iteration(k22(), 2, 1);
  CHECK(it.a.size() == 1);
  CHECK(it.b_prime.size() == 1);
}

TEST_CASE("fraction counts") {
  CHECK(fraction_count(1e-5, 7) == 1);
  CHECK(fraction_count(0.5, 4) == 2);
  CHECK(fraction_count(0.5, 5) == 3);
  CHECK(fraction_count(0.1 * 3, 10) == 3);  // 0.30000000000000004 * 10
  CHECK(fraction_count(0.0, 5) == 0);
  CHECK(fraction_count(0.3, 0) == 0);
  CHECK(fraction_count(1.0, 5) == 5);
}

TEST_CASE("layout and the six solutions") {
  const BipartiteGraph g = generate_random(4, 4, 0.5, 3);
  const Guess q{2, 2, 1, 1, false};
  const PartitionLayout layout = make_layout(g, q);
  CHECK(layout.s1.size() == 2);
  CHECK(layout.x1.size() == 1);
  CHECK(set_intersection(layout.s1, layout.x1).empty());
  CHECK(set_intersection(layout.s2, layout.x2).empty());
  for (int which = 1; which <= 6; ++which) {
    const CoverSolution s = build_solution(g, layout, which, 0.25, 0.5);
    check_solution(g, s, 4);
    CHECK(s.sol_index == which);
    CHECK(s.guess == q);
  }
  CHECK_THROWS_AS(build_solution(g, layout, 0, 0.25, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(build_solution(g, layout, 7, 0.25, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(vertical_separation(g, layout, 4, 0.5), std::invalid_argument);
  // tiny fractions still take one vertex per set
  CHECK(vertical_separation(g, layout, 5, 1e-5).size() == 2);
  CHECK(vertical_separation(g, layout, 6, 1e-5).size() == 2);
}

TEST_CASE("SOL3 without X1 coincides with SOL1") {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const BipartiteGraph g = generate_random(4, 4, rng.uniform(), rng.next());
    const Guess q{2, 2, 2, 1, false};
    const PartitionLayout layout = make_layout(g, q);
    CHECK(layout.x1.empty());
    CHECK(build_solution(g, layout, 3, 0.1, 0.1).chosen ==
          build_solution(g, layout, 1, 0.1, 0.1).chosen);
  }
}

TEST_CASE("lambda limit") {
  CHECK(lambda_limit(Guess{1, 2, 0, 1, false}) == doctest::Approx(1.5 / 1.5));
  CHECK(lambda_limit(Guess{2, 2, 0, 0, false}) == doctest::Approx(1.0));
  CHECK(lambda_limit(Guess{0, 0, 0, 0, false}) == 0.0);
}

TEST_CASE("kvc algorithm") {
  CHECK(kvc_algorithm(k22(), 1, 1e-5, 1e-5).value == 2);
  SplitMix64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const int n1 = 1 + static_cast<int>(rng.below(4));
    const int n2 = 1 + static_cast<int>(rng.below(4));
    const BipartiteGraph g = generate_random(n1, n2, rng.uniform(), rng.next());
    for (int k = 0; k <= g.num_vertices(); ++k) {
      const CoverSolution s = kvc_algorithm(g, k, 1e-5, 1e-5);
      check_solution(g, s, k);
      const std::int64_t opt = brute_force_opt(g, k).opt_value;
      CHECK(1000 * s.value >= 821 * opt);
      if (k >= std::min(n1, n2)) CHECK(s.value == g.num_edges());
      CHECK(3 * two_thirds(g, k).value >= 2 * opt);
      CHECK(greedy(g, k).value >= std::ceil((1.0 - std::exp(-1.0)) * opt));
    }
  }
}
