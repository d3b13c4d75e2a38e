#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "bkvc/bigraph.hpp"

namespace bkvc {

// Guessed split sizes of an optimum: k1 = |O1|, k2 = |O2|, k1p = |S1 ∩ O1|,
// k2p = |S2 ∩ O2|. `swapped` means the guess lives on the transposed graph
// (sides exchanged so that k1 <= k2).
struct Guess {
  int k1 = 0;
  int k2 = 0;
  int k1p = 0;
  int k2p = 0;
  bool swapped = false;
  friend bool operator==(const Guess&, const Guess&) = default;
};

struct CoverSolution {
  VertexSet chosen;
  std::int64_t value = 0;
  std::string algorithm;
  std::optional<Guess> guess;
  std::optional<int> sol_index;  // 1..6 for the guess-based constructions
};

// S1, S2: the k1 / k2 highest-degree vertices of each class.
// X1, X2: the k1 - k1p / k2 - k2p highest-degree vertices outside S1 / S2.
// O1, O2 stay empty unless an oracle fills them (see cutmodel).
struct PartitionLayout {
  Guess guess;
  VertexSet s1, s2, x1, x2;
  VertexSet o1, o2;
};

PartitionLayout make_layout(const BipartiteGraph& g, const Guess& guess);

// Repeatedly takes the vertex covering the most uncovered edges (smaller id
// wins ties, so V1 before V2) until k picks or everything is covered.
CoverSolution greedy(const BipartiteGraph& g, int k);

// The three 2/3-algorithm solutions for one split k1 + k2:
// S1 + best k2 of V2, S2 + best k1 of V1, S1 ∪ S2.
std::array<CoverSolution, 3> two_thirds_split(const BipartiteGraph& g, int k1, int k2);
// Best of two_thirds_split over every feasible split.
CoverSolution two_thirds(const BipartiteGraph& g, int k);

struct NuXiZeroIteration {
  VertexSet a;        // i highest-degree vertices of V1
  VertexSet b_prime;  // k - i highest-degree vertices of V2
  CoverSolution from_first;   // a ∪ (best k - i of V2 once a is taken)
  CoverSolution from_second;  // (best i of V1 once b_prime is taken) ∪ b_prime
};

NuXiZeroIteration nu_xi_zero_iteration(const BipartiteGraph& g, int k, int i);
CoverSolution nu_xi_zero(const BipartiteGraph& g, int k);

// Applies the ceiling convention used for vertical separations: the number of
// vertices making up a `fraction` of a set of `size` vertices.
int fraction_count(double fraction, int size);

// Separation part of SOL5 (which = 5, drawn from S1 and X1) or SOL6
// (which = 6, from S2 and X2): the top ceil(fraction * |set|) of each.
VertexSet vertical_separation(const BipartiteGraph& g, const PartitionLayout& layout, int which,
                              double fraction);

// One of the six k-VC constructions for the layout's guess. Completions use
// residual degrees and spill to the other class when a class runs out.
// Throws std::invalid_argument when `which` is outside 1..6.
CoverSolution build_solution(const BipartiteGraph& g, const PartitionLayout& layout, int which,
                             double pi, double lambda);

// Upper end of the admissible lambda range for a guess, (1 + mu) / (2 - xi).
double lambda_limit(const Guess& guess);

// Enumerates every guess (k1, k2, k1p, k2p), builds all six solutions, and
// returns the best. Also considers the smaller color class whenever
// k >= min(n1, n2).
CoverSolution kvc_algorithm(const BipartiteGraph& g, int k, double pi, double lambda);

}  // namespace bkvc
