#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "bkvc/exact.hpp"
#include "bkvc/rng.hpp"

using namespace bkvc;

TEST_CASE("small optima by hand") {
  const BipartiteGraph k22(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const ExactResult r = brute_force_opt(k22, 1);
  CHECK(r.opt_value == 2);
  CHECK(r.opt_set == VertexSet{0});
  CHECK(r.k1 == 1);
  CHECK(r.k2 == 0);
  CHECK(brute_force_opt(k22, 2).opt_value == 4);
  CHECK(brute_force_opt(k22, 0).opt_value == 0);

  // a1-b1, a1-b2, a2-b2, a3-b3
  const BipartiteGraph g(3, 3, {{0, 0}, {0, 1}, {1, 1}, {2, 2}});
  const ExactResult two = brute_force_opt(g, 2);
  CHECK(two.opt_value == 3);
  CHECK(two.opt_set == VertexSet{0, 1});
  CHECK(brute_force_opt(g, 3).opt_value == 4);
  CHECK(brute_force_opt(g, 100).opt_value == 4);
}

TEST_CASE("canonical optimum is the lexicographically smallest maximizer") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int n1 = 1 + static_cast<int>(rng.below(4));
    const int n2 = 1 + static_cast<int>(rng.below(4));
    const BipartiteGraph g = generate_random(n1, n2, rng.uniform(), rng.next());
    const int n = g.num_vertices();
    std::int64_t previous = 0;
    for (int k = 0; k <= n; ++k) {
      const ExactResult r = brute_force_opt(g, k);
      CHECK(r.opt_value == covered_edges(g, r.opt_set));
      CHECK(static_cast<int>(r.opt_set.size()) <= k);
      CHECK(r.k1 + r.k2 == static_cast<int>(r.opt_set.size()));
      CHECK(r.opt_value >= previous);
      previous = r.opt_value;
      if (k >= std::min(n1, n2)) CHECK(r.opt_value == g.num_edges());

      std::vector<VertexId> smallest;
      std::int64_t best = -1;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != static_cast<unsigned>(k)) continue;
        std::vector<VertexId> m;
        for (int v = 0; v < n; ++v) {
          if (mask >> v & 1u) m.push_back(v);
        }
        const std::int64_t c = covered_edges(g, VertexSet(m));
        if (c > best || (c == best && m < smallest)) {
          best = c;
          smallest = m;
        }
      }
      CHECK(r.opt_value == best);
      CHECK(std::vector<VertexId>(r.opt_set.begin(), r.opt_set.end()) == smallest);
    }
    CHECK(brute_force_opt(g, n).opt_value == g.num_edges());
  }
}

TEST_CASE("one class suffices on semiregular graphs") {
  const BipartiteGraph g = generate_semiregular(6, 4, 2, 3, 21);
  for (int k = 1; k <= 4; ++k) CHECK(brute_force_opt(g, k).opt_value == 3 * k);
}

TEST_CASE("size guard") {
  const BipartiteGraph big = generate_random(13, 13, 0.2, 1);
  CHECK_THROWS_AS(brute_force_opt(big, 3), std::length_error);
  CHECK(brute_force_opt(generate_random(3, 3, 0.5, 1), 2, ExactOptions{6}).opt_value >= 0);
}
