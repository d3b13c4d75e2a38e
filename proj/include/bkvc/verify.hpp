#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bkvc/bigraph.hpp"
#include "bkvc/cutmodel.hpp"

namespace bkvc {

enum class Family : int {
  kExactOracle,           // brute force agrees with naive subset enumeration
  kGraphRoundTrip,        // serialize/parse and double transposition are identities
  kGreedy,                // greedy >= ceil((1 - 1/e) opt)
  kTwoThirds,             // two-thirds >= ceil(2/3 opt)
  kKvc,                   // kvc >= ceil(0.821 opt)
  kNuXiZero,              // nu-xi-zero >= ceil(0.8 opt) when O1∩S1 = O2∩S2 = ∅
  kTwoThirdsSum,          // sol1 + sol2 + sol3 >= 2 opt at the optimum's split
  kNuXiZeroChain,         // the three chains behind the 4/5 bound
  kIdentities,            // delta sums equal direct edge counts
  kExtractedConstraints,  // extracted configurations satisfy inequalities 1..10
  kBridge,                // analytic numerators bound the built solutions
  kCount,
};

const char* family_name(Family f);

struct CheckResult {
  Family family = Family::kExactOracle;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string example;  // first failure
  bool ok() const { return cases > 0 && failures == 0; }
};

struct VerifyOptions {
  int max_n = 8;             // n1 + n2 of random instances
  int exhaustive_side = 3;   // every graph with n1, n2 <= this
  int random_instances = 10000;
  // Extra graphs from disjoint_optimum_instances; small graphs have none.
  int disjoint_instances = 20;
  std::uint64_t seed = 1;
  double pi = 1e-5;          // kvc parameters for the ratio check
  double lambda = 1e-5;
  std::vector<std::pair<double, double>> bridge_params = {{1e-5, 1e-5}, {0.4, 0.4}, {0.2, 1e-5}};
  std::vector<Family> families;  // empty = all
};

// Every simple bipartite graph with 1 <= n1, n2 <= exhaustive_side, then
// random_instances random graphs with n1 + n2 <= max_n, then the
// disjoint-optimum graphs.
std::vector<BipartiteGraph> verification_instances(const VerifyOptions& o);

// Graphs whose canonical optimum at size k avoids the top-degree sets on both
// sides, found by local search over edge flips. At most `count`; fewer only if
// the search budget runs out.
std::vector<BipartiteGraph> disjoint_optimum_instances(int count, std::uint64_t seed,
                                                       int n1 = 6, int n2 = 6, int k = 3);

std::vector<CheckResult> run_checks(const std::vector<BipartiteGraph>& instances,
                                    const VerifyOptions& o);

// Relative change of every ratio under cut scaling by each factor; returns the
// largest one seen.
double homogeneity_defect(const Configuration& c, const std::vector<double>& factors,
                          const RatioOptions& options = {});

std::string format_checks(const std::vector<CheckResult>& results);

}  // namespace bkvc
