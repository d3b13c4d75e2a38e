#pragma once

#include <cstdint>

#include "bkvc/bigraph.hpp"

namespace bkvc {

struct ExactResult {
  std::int64_t opt_value = 0;
  VertexSet opt_set;  // lexicographically smallest maximizer in mixed id order
  int k1 = 0;         // |opt_set ∩ V1|
  int k2 = 0;         // |opt_set ∩ V2|
};

struct ExactOptions {
  int max_vertices = 24;  // refuse larger instances unless raised
};

// Exhaustive optimum of max k-vertex cover over all k-subsets of V1 ∪ V2
// (k is clamped to n1 + n2). Throws std::length_error above the size guard.
ExactResult brute_force_opt(const BipartiteGraph& g, int k, const ExactOptions& options = {});

}  // namespace bkvc
