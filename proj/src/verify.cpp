#include "bkvc/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "bkvc/covers.hpp"
#include "bkvc/exact.hpp"
#include "bkvc/rng.hpp"

namespace bkvc {

namespace {

std::int64_t ceil_frac(std::int64_t num, std::int64_t den, std::int64_t opt) {
  return (num * opt + den - 1) / den;
}

std::string describe(const BipartiteGraph& g, int k) {
  std::ostringstream ss;
  ss << "n1=" << g.n1() << " n2=" << g.n2() << " k=" << k << " edges:";
  for (const Edge& e : g.edges()) ss << ' ' << e.u << '-' << e.v;
  return ss.str();
}

class Tally {
 public:
  explicit Tally(const VerifyOptions& o) {
    for (int f = 0; f < static_cast<int>(Family::kCount); ++f) {
      results_[f].family = static_cast<Family>(f);
      enabled_[f] = o.families.empty();
    }
    for (Family f : o.families) enabled_[static_cast<int>(f)] = true;
  }

  bool on(Family f) const { return enabled_[static_cast<int>(f)]; }

  void record(Family f, bool passed, const std::string& context) {
    CheckResult& r = results_[static_cast<int>(f)];
    ++r.cases;
    if (!passed && r.failures++ == 0) r.example = context;
  }

  std::vector<CheckResult> results() const {
    std::vector<CheckResult> out;
    for (int f = 0; f < static_cast<int>(Family::kCount); ++f) {
      if (enabled_[f]) out.push_back(results_[f]);
    }
    return out;
  }

 private:
  CheckResult results_[static_cast<int>(Family::kCount)];
  bool enabled_[static_cast<int>(Family::kCount)] = {};
};

// Naive maximum and lexicographically smallest maximizer over all k-subsets.
std::pair<std::int64_t, std::vector<VertexId>> naive_opt(const BipartiteGraph& g, int k) {
  const int n = g.num_vertices();
  const int kk = std::clamp(k, 0, n);
  std::int64_t best = -1;
  std::vector<VertexId> best_set;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != kk) continue;
    std::int64_t covered = 0;
    for (const Edge& e : g.edges()) {
      const VertexId u = g.global_id(Side::kFirst, e.u);
      const VertexId v = g.global_id(Side::kSecond, e.v);
      if ((mask >> u & 1u) || (mask >> v & 1u)) ++covered;
    }
    std::vector<VertexId> set;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1u) set.push_back(v);
    }
    if (covered > best || (covered == best && set < best_set)) {
      best = covered;
      best_set = std::move(set);
    }
  }
  return {best, best_set};
}

std::int64_t cut_size(const BipartiteGraph& g, const VertexSet& a, const VertexSet& b) {
  std::int64_t n = 0;
  for (const Edge& e : g.edges()) {
    const VertexId u = g.global_id(Side::kFirst, e.u);
    const VertexId v = g.global_id(Side::kSecond, e.v);
    if ((a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))) ++n;
  }
  return n;
}

void check_nu_xi_zero_chain(const BipartiteGraph& g, int k, const ExactResult& oracle,
                            Tally& t, const std::string& ctx) {
  // Orient so that k1 <= k / 2; the algorithm is symmetric in the classes.
  const bool flip = 2 * oracle.k1 > k;
  const BipartiteGraph h = flip ? g.transposed() : g;
  const VertexSet o = flip ? g.to_transposed(oracle.opt_set) : oracle.opt_set;
  const VertexSet o1 = set_intersection(o, h.side_vertices(Side::kFirst));
  const VertexSet o2 = set_intersection(o, h.side_vertices(Side::kSecond));
  const int i = static_cast<int>(o1.size());

  const std::int64_t sol = nu_xi_zero(h, k).value;
  const NuXiZeroIteration it = nu_xi_zero_iteration(h, k, i);
  const std::int64_t e_a = it.from_first.value;
  const std::int64_t d_ai = covered_edges(h, it.a);
  const std::int64_t d_ai_o2 = cut_size(h, it.a, o2);
  const std::int64_t e_ak = covered_edges(h, best_k(h, Side::kFirst, k));

  const bool first = sol >= e_a && e_a >= covered_edges(h, set_union(it.a, o2)) &&
                     covered_edges(h, set_union(it.a, o2)) ==
                         d_ai + covered_edges(h, o2) - d_ai_o2;
  const std::int64_t e_ab = covered_edges(h, set_union(it.a, it.b_prime));
  const bool second = e_a >= e_ab && e_ab >= covered_edges(h, it.b_prime) + d_ai_o2;
  const bool third = sol >= e_ak && e_ak >= covered_edges(h, set_union(it.a, o1)) &&
                     covered_edges(h, set_union(it.a, o1)) == d_ai + covered_edges(h, o1);
  t.record(Family::kNuXiZeroChain, first && second && third,
           ctx + " chain " + std::to_string(first) + std::to_string(second) +
               std::to_string(third));
}

void check_extracted(const BipartiteGraph& g, int k, const ExactResult& oracle,
                     const VerifyOptions& o, Tally& t, const std::string& ctx) {
  const ExtractedConfig e = extract_config(g, k, oracle);
  const BipartiteGraph& h = e.graph;
  const PartitionLayout& l = e.layout;

  if (t.on(Family::kIdentities)) {
    const DeltaQuantities d = delta_quantities(e.raw);
    const bool ok = d.dS1 == covered_edges(h, l.s1) && d.dS2 == covered_edges(h, l.s2) &&
                    d.dX1 == covered_edges(h, l.x1) && d.dX2 == covered_edges(h, l.x2) &&
                    d.dO1 == covered_edges(h, l.o1) && d.dO2 == covered_edges(h, l.o2) &&
                    d.opt == static_cast<double>(oracle.opt_value) &&
                    d.opt == covered_edges(h, set_union(l.o1, l.o2));
    t.record(Family::kIdentities, ok, ctx);
  }
  if (t.on(Family::kExtractedConstraints)) {
    const auto slack = constraint_slacks(e.raw);
    bool ok = true;
    int bad = 0;
    for (int i = 0; i < 10; ++i) {
      if (slack[i] < -1e-9) {
        ok = false;
        bad = i + 1;
      }
    }
    t.record(Family::kExtractedConstraints, ok, ctx + " constraint " + std::to_string(bad));
  }
  if (!t.on(Family::kBridge)) return;

  const int s1x1 = static_cast<int>(l.s1.size() + l.x1.size());
  const int s2x2 = static_cast<int>(l.s2.size() + l.x2.size());
  bool first_params = true;
  for (const auto& [pi, lambda_raw] : o.bridge_params) {
    const double lambda = std::min(lambda_raw, lambda_limit(l.guess));
    for (int which = 1; which <= 6; ++which) {
      if (which <= 4 && !first_params) continue;
      const CoverSolution sol = build_solution(h, l, which, pi, lambda);
      Configuration c = e.raw;
      double pi_eff = pi, lambda_eff = lambda;
      if (which == 5) {
        const VertexSet sep = vertical_separation(h, l, 5, pi);
        c.pi_frac = realized_pi_fractions(e, sep);
        pi_eff = s1x1 > 0 ? static_cast<double>(sep.size()) / s1x1 : 0.0;
      }
      if (which == 6) {
        const VertexSet sep = vertical_separation(h, l, 6, lambda);
        c.lambda_frac = realized_lambda_fractions(e, sep);
        lambda_eff = s2x2 > 0 ? static_cast<double>(sep.size()) / s2x2 : 0.0;
      }
      const RatioReport r = eval_ratios(c, pi_eff, lambda_eff);
      const double bound = r.numerator[which - 1];
      const bool ok = bound <= static_cast<double>(sol.value) + 1e-9;
      char buf[128];
      std::snprintf(buf, sizeof buf, " SOL%d bound %.4f > value %lld (pi %g lambda %g)", which,
                    bound, static_cast<long long>(sol.value), pi, lambda);
      t.record(Family::kBridge, ok, ctx + buf);
    }
    first_params = false;
  }
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::kExactOracle: return "exact oracle vs naive enumeration";
    case Family::kGraphRoundTrip: return "graph serialize / transpose round trip";
    case Family::kGreedy: return "greedy >= ceil((1-1/e) opt)";
    case Family::kTwoThirds: return "two-thirds >= ceil(2/3 opt)";
    case Family::kKvc: return "kvc >= ceil(0.821 opt)";
    case Family::kNuXiZero: return "nu-xi-zero >= ceil(4/5 opt) when nu = xi = 0";
    case Family::kTwoThirdsSum: return "sol1 + sol2 + sol3 >= 2 opt";
    case Family::kNuXiZeroChain: return "nu-xi-zero proof chains";
    case Family::kIdentities: return "delta identities on extracted cuts";
    case Family::kExtractedConstraints: return "extracted cuts satisfy inequalities 1-10";
    case Family::kBridge: return "ratio numerators <= built solution values";
    case Family::kCount: break;
  }
  return "?";
}

std::vector<BipartiteGraph> verification_instances(const VerifyOptions& o) {
  std::vector<BipartiteGraph> out;
  for (int n1 = 1; n1 <= o.exhaustive_side; ++n1) {
    for (int n2 = 1; n2 <= o.exhaustive_side; ++n2) {
      const int slots = n1 * n2;
      for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
        std::vector<Edge> edges;
        for (int s = 0; s < slots; ++s) {
          if (mask >> s & 1u) edges.push_back({s / n2, s % n2});
        }
        out.emplace_back(n1, n2, std::move(edges));
      }
    }
  }
  SplitMix64 rng(o.seed);
  for (int i = 0; i < o.random_instances; ++i) {
    const int n1 = 1 + static_cast<int>(rng.below(o.max_n - 1));
    const int n2 = 1 + static_cast<int>(rng.below(o.max_n - n1));
    const double p = 0.1 + 0.8 * rng.uniform();
    out.push_back(generate_random(n1, n2, p, rng.next()));
  }
  const std::vector<BipartiteGraph> planted =
      disjoint_optimum_instances(o.disjoint_instances, derive_seed(o.seed, 0xD15));
  out.insert(out.end(), planted.begin(), planted.end());
  return out;
}

std::vector<BipartiteGraph> disjoint_optimum_instances(int count, std::uint64_t seed, int n1,
                                                       int n2, int k) {
  if (n1 < 1 || n2 < 1 || k < 1 || k > n1 + n2) {
    throw std::invalid_argument("disjoint_optimum_instances: bad shape");
  }
  // Overlap of the optimum with the top-degree sets at the optimum's split.
  auto overlap = [&](const std::vector<Edge>& edges) {
    const BipartiteGraph g(n1, n2, edges);
    const ExactResult oracle = brute_force_opt(g, k);
    const VertexSet o1 = set_intersection(oracle.opt_set, g.side_vertices(Side::kFirst));
    const VertexSet o2 = set_intersection(oracle.opt_set, g.side_vertices(Side::kSecond));
    return set_intersection(best_k(g, Side::kFirst, oracle.k1), o1).size() +
           set_intersection(best_k(g, Side::kSecond, oracle.k2), o2).size();
  };
  std::vector<BipartiteGraph> out;
  SplitMix64 rng(seed);
  const int slots = n1 * n2;
  for (int attempt = 0; static_cast<int>(out.size()) < count && attempt < 200 * count; ++attempt) {
    std::vector<char> on(slots);
    for (char& b : on) b = rng.uniform() < 0.35;
    auto edges = [&] {
      std::vector<Edge> e;
      for (int s = 0; s < slots; ++s) {
        if (on[s]) e.push_back({s / n2, s % n2});
      }
      return e;
    };
    std::size_t cur = overlap(edges());
    for (int step = 0; step < 3000 && cur > 0; ++step) {
      const int s = static_cast<int>(rng.below(slots));
      on[s] ^= 1;
      const std::size_t next = overlap(edges());
      if (next <= cur || rng.uniform() < 0.05) {
        cur = next;
      } else {
        on[s] ^= 1;
      }
    }
    if (cur == 0) out.emplace_back(n1, n2, edges());
  }
  return out;
}

std::vector<CheckResult> run_checks(const std::vector<BipartiteGraph>& instances,
                                    const VerifyOptions& o) {
  Tally t(o);
  const bool need_oracle =
      t.on(Family::kExactOracle) || t.on(Family::kGreedy) || t.on(Family::kTwoThirds) ||
      t.on(Family::kKvc) || t.on(Family::kNuXiZero) || t.on(Family::kTwoThirdsSum) ||
      t.on(Family::kNuXiZeroChain) || t.on(Family::kIdentities) ||
      t.on(Family::kExtractedConstraints) || t.on(Family::kBridge);
  for (const BipartiteGraph& g : instances) {
    if (t.on(Family::kGraphRoundTrip)) {
      const BipartiteGraph back = parse_graph(serialize_graph(g));
      const BipartiteGraph twice = g.transposed().transposed();
      const bool ok = back.n1() == g.n1() && back.n2() == g.n2() && back.edges() == g.edges() &&
                      twice.n1() == g.n1() && twice.edges() == g.edges();
      t.record(Family::kGraphRoundTrip, ok, describe(g, 0));
    }
    if (!need_oracle) continue;
    for (int k = 1; k <= g.num_vertices(); ++k) {
      const ExactResult oracle = brute_force_opt(g, k);
      const std::int64_t opt = oracle.opt_value;
      const std::string ctx = describe(g, k);

      if (t.on(Family::kExactOracle)) {
        const auto [value, set] = naive_opt(g, k);
        const std::vector<VertexId> got(oracle.opt_set.begin(), oracle.opt_set.end());
        t.record(Family::kExactOracle, value == opt && set == got, ctx);
      }
      if (t.on(Family::kGreedy)) {
        const auto need = static_cast<std::int64_t>(std::ceil((1.0 - std::exp(-1.0)) * opt));
        t.record(Family::kGreedy, greedy(g, k).value >= need, ctx);
      }
      if (t.on(Family::kTwoThirds)) {
        t.record(Family::kTwoThirds, two_thirds(g, k).value >= ceil_frac(2, 3, opt), ctx);
      }
      if (t.on(Family::kKvc)) {
        const std::int64_t got = kvc_algorithm(g, k, o.pi, o.lambda).value;
        t.record(Family::kKvc, got >= ceil_frac(821, 1000, opt),
                 ctx + " value " + std::to_string(got) + " opt " + std::to_string(opt));
      }
      if (t.on(Family::kTwoThirdsSum)) {
        const auto sols = two_thirds_split(g, oracle.k1, oracle.k2);
        t.record(Family::kTwoThirdsSum, sols[0].value + sols[1].value + sols[2].value >= 2 * opt,
                 ctx);
      }

      const VertexSet o1 = set_intersection(oracle.opt_set, g.side_vertices(Side::kFirst));
      const VertexSet o2 = set_intersection(oracle.opt_set, g.side_vertices(Side::kSecond));
      const bool disjoint =
          set_intersection(best_k(g, Side::kFirst, oracle.k1), o1).empty() &&
          set_intersection(best_k(g, Side::kSecond, oracle.k2), o2).empty();
      if (disjoint && t.on(Family::kNuXiZero)) {
        t.record(Family::kNuXiZero, nu_xi_zero(g, k).value >= ceil_frac(4, 5, opt), ctx);
      }
      if (disjoint && t.on(Family::kNuXiZeroChain)) check_nu_xi_zero_chain(g, k, oracle, t, ctx);

      if (opt > 0 && (t.on(Family::kIdentities) || t.on(Family::kExtractedConstraints) ||
                      t.on(Family::kBridge))) {
        check_extracted(g, k, oracle, o, t, ctx);
      }
    }
  }
  return t.results();
}

double homogeneity_defect(const Configuration& c, const std::vector<double>& factors,
                          const RatioOptions& options) {
  const RatioReport base = eval_ratios(c, options);
  double worst = 0.0;
  for (double f : factors) {
    const RatioReport r = eval_ratios(c.scaled(f), options);
    for (int i = 0; i < 6; ++i) {
      const double scale = std::max(std::abs(base.r[i]), 1e-300);
      worst = std::max(worst, std::abs(r.r[i] - base.r[i]) / scale);
    }
  }
  return worst;
}

std::string format_checks(const std::vector<CheckResult>& results) {
  std::string out;
  for (const CheckResult& r : results) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "[%s] %-48s cases %lld failures %lld\n",
                  r.ok() ? "PASS" : "FAIL", family_name(r.family),
                  static_cast<long long>(r.cases), static_cast<long long>(r.failures));
    out += buf;
    if (r.failures > 0) out += "       first failure: " + r.example + "\n";
  }
  return out;
}

}  // namespace bkvc
