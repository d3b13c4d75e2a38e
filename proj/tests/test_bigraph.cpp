#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <stdexcept>

#include "bkvc/bigraph.hpp"
#include "bkvc/rng.hpp"

using namespace bkvc;

namespace {

BipartiteGraph k22() { return BipartiteGraph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}); }

}  // namespace

TEST_CASE("vertex sets are sorted and reject duplicates") {
  const VertexSet s{3, 1, 2};
  CHECK(std::vector<VertexId>(s.begin(), s.end()) == std::vector<VertexId>{1, 2, 3});
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(0));
  CHECK_THROWS_AS(VertexSet({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(VertexSet({-1}), std::invalid_argument);
  CHECK(set_union(VertexSet{1, 3}, VertexSet{2, 3}) == VertexSet{1, 2, 3});
  CHECK(set_difference(VertexSet{1, 2, 3}, VertexSet{2}) == VertexSet{1, 3});
  CHECK(set_intersection(VertexSet{1, 2, 3}, VertexSet{2, 5}) == VertexSet{2});
}

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(BipartiteGraph(2, 2, {{0, 0}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteGraph(2, 2, {{2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteGraph(2, 2, {{0, -1}}), std::invalid_argument);
  const BipartiteGraph g(2, 3, {{1, 2}, {0, 0}, {1, 0}});
  CHECK(g.edges() == std::vector<Edge>{{0, 0}, {1, 0}, {1, 2}});
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(g.global_id(Side::kSecond, 0)) == 2);
  CHECK(g.degree(g.global_id(Side::kSecond, 1)) == 0);
  CHECK(g.side_vertices(Side::kSecond) == VertexSet{2, 3, 4});
}

TEST_CASE("covered edges") {
  const BipartiteGraph g = k22();
  CHECK(covered_edges(g, VertexSet{0}) == 2);
  CHECK(covered_edges(g, VertexSet{}) == 0);
  const BipartiteGraph path(2, 1, {{0, 0}, {1, 0}});
  CHECK(covered_edges(path, VertexSet{2}) == 2);
  CHECK(covered_edges(g, VertexSet{0, 2}) == 3);
}

TEST_CASE("best_k picks by residual degree with smallest-id ties") {
  const BipartiteGraph star(3, 2, {{0, 0}, {1, 0}, {2, 0}});
  CHECK(best_k(star, Side::kSecond, 1) == VertexSet{3});
  const BipartiteGraph g = k22();
  CHECK(best_k(g, Side::kSecond, 1) == VertexSet{2});
  EdgeMask at_b1(g);
  at_b1.cover_vertex(g, 2);
  CHECK(residual_degree(g, 3, at_b1) == 2);
  CHECK(residual_degree(g, 0, at_b1) == 1);
  CHECK(best_k(g, Side::kSecond, 1, {}, at_b1) == VertexSet{3});
  CHECK(best_k(g, Side::kFirst, 5) == VertexSet{0, 1});
  CHECK(best_k(g, Side::kFirst, 1, VertexSet{0}) == VertexSet{1});
}

TEST_CASE("best_k maximizes coverage among same-side sets") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n1 = 1 + static_cast<int>(rng.below(4));
    const int n2 = 1 + static_cast<int>(rng.below(4));
    const BipartiteGraph g = generate_random(n1, n2, rng.uniform(), rng.next());
    for (int k = 0; k <= n1; ++k) {
      const std::int64_t best = covered_edges(g, best_k(g, Side::kFirst, k));
      for (unsigned mask = 0; mask < (1u << n1); ++mask) {
        if (std::popcount(mask) != static_cast<unsigned>(k)) continue;
        std::vector<VertexId> m;
        for (int v = 0; v < n1; ++v) {
          if (mask >> v & 1u) m.push_back(v);
        }
        const VertexSet s(m);
        CHECK(covered_edges(g, s) <= best);
        // monotone and subadditive
        CHECK(covered_edges(g, s) <= covered_edges(g, set_union(s, VertexSet{n1})));
        CHECK(covered_edges(g, set_union(s, VertexSet{n1})) <=
              covered_edges(g, s) + covered_edges(g, VertexSet{n1}));
      }
    }
  }
}

TEST_CASE("generators") {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    CHECK(generate_random(2, 2, 1.0, seed).edges() == k22().edges());
  }
  CHECK(generate_random(5, 5, 0.5, 42).edges() == generate_random(5, 5, 0.5, 42).edges());
  CHECK(generate_random(4, 4, 0.0, 3).num_edges() == 0);
  const BipartiteGraph s = generate_semiregular(4, 2, 1, 2, 5);
  CHECK(s.num_edges() == 4);
  for (VertexId v = 0; v < 4; ++v) CHECK(s.degree(v) == 1);
  for (VertexId v = 4; v < 6; ++v) CHECK(s.degree(v) == 2);
  const BipartiteGraph r = generate_semiregular(6, 4, 2, 3, 8);
  for (VertexId v = 0; v < 6; ++v) CHECK(r.degree(v) == 2);
  for (VertexId v = 6; v < 10; ++v) CHECK(r.degree(v) == 3);
  CHECK_THROWS_AS(generate_semiregular(3, 2, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_random(2, 2, 1.5, 0), std::invalid_argument);
}

TEST_CASE("text format") {
  const BipartiteGraph one = parse_graph("p bkvc 1 1 1\ne 0 0\n");
  CHECK(one.n1() == 1);
  CHECK(one.num_edges() == 1);
  const std::string canonical = serialize_graph(k22());
  CHECK(serialize_graph(parse_graph(canonical)) == canonical);
  CHECK(parse_graph("c hello\np bkvc 2 1 1\nc mid\ne 1 0\n").edges() == std::vector<Edge>{{1, 0}});
  try {
    parse_graph("p bkvc 2 2 1\ne 5 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph("e 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p bkvc 1 1 2\ne 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p bkvc 1 1 1\ne 0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p bkvc 1 1 2\ne 0 0\ne 0 0\n"), ParseError);
}

TEST_CASE("transposition maps ids and keeps degrees") {
  const BipartiteGraph g = generate_random(3, 4, 0.5, 17);
  const BipartiteGraph t = g.transposed();
  CHECK(t.n1() == 4);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    CHECK(t.degree(g.to_transposed_id(v)) == g.degree(v));
  }
  CHECK(t.transposed().edges() == g.edges());
  CHECK(covered_edges(t, g.to_transposed(VertexSet{0, 4})) == covered_edges(g, VertexSet{0, 4}));
}
