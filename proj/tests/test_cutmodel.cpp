#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bkvc/config_io.hpp"
#include "bkvc/covers.hpp"
#include "bkvc/cutmodel.hpp"
#include "bkvc/exact.hpp"
#include "bkvc/rng.hpp"
#include "bkvc/verify.hpp"

using namespace bkvc;

namespace {

Configuration table2() { return read_config_file(BKVC_ASSET_DIR "/table2.cfg"); }

Configuration only(Cut cut, double mu, double nu, double xi) {
  Configuration c;
  c[cut] = 1.0;
  c.mu = mu;
  c.nu = nu;
  c.xi = xi;
  return c;
}

}  // namespace

TEST_CASE("shipped configuration delta groups") {
  const DeltaQuantities d = delta_quantities(table2());
  // frozen from the shipped configuration
  CHECK(std::abs(d.dS1 - 5.28490) < 5e-5);
  CHECK(std::abs(d.dS2 - 5.90330) < 5e-5);
  CHECK(std::abs(d.dX1 - 2.78400) < 5e-5);
  CHECK(std::abs(d.dX2 - 3.09960) < 5e-5);
  CHECK(std::abs(d.dO1 - 5.26470) < 5e-5);
  CHECK(std::abs(d.dO2 - 5.88330) < 5e-5);
  CHECK(std::abs(d.opt - 10.5588) < 5e-5);
  // reference values that the cut table reproduces
  CHECK(std::abs(d.dS1 - 5.28490) < 5e-4);
  CHECK(std::abs(d.dX1 - 2.78398) < 5e-4);
  CHECK(std::abs(d.dX2 - 3.09961) < 5e-4);
  CHECK(std::abs(d.dO1 - 5.26489) < 5e-4);
  CHECK(std::abs(d.dO2 - 5.88331) < 5e-4);
  CHECK(std::abs(d.opt - 10.5589) < 5e-4);
  // digit swap in the reference d(S2): 5.90033 vs 5.90330
  CHECK(std::abs(d.dS2 - 5.90033) > 1e-3);
}

TEST_CASE("trivial delta groups") {
  const DeltaQuantities z = delta_quantities(Configuration{});
  CHECK(z.opt == 0.0);
  CHECK(z.dS1 == 0.0);
  const DeltaQuantities l1 = delta_quantities(only(Cut::L1, 1, 0.5, 0.5));
  CHECK(l1.dS1 == 1.0);
  CHECK(l1.dS2 == 1.0);
  CHECK(l1.dO1 == 1.0);
  CHECK(l1.dO2 == 1.0);
  CHECK(l1.opt == 1.0);
  CHECK(l1.dX1 == 0.0);
  CHECK(l1.dX2 == 0.0);
}

TEST_CASE("shipped configuration ratios") {
  const RatioReport r = eval_ratios(table2(), 1e-5, 1e-5);
  CHECK(std::abs(r.r[0] - 0.81806) < 1e-3);
  CHECK(std::abs(r.r[1] - 0.81797) < 1e-3);
  CHECK(std::abs(r.r[2] - 0.79280) < 1e-3);
  CHECK(std::abs(r.r[3] - 0.79657) < 1e-3);
  // frozen
  CHECK(std::abs(r.r[0] - 0.818076) < 1e-5);
  CHECK(std::abs(r.r[1] - 0.817972) < 1e-5);
  CHECK(std::abs(r.r[2] - 0.792821) < 1e-5);
  CHECK(std::abs(r.r[3] - 0.796575) < 1e-5);
  CHECK(std::abs(r.r[4] - 0.853754) < 1e-5);
  CHECK(std::abs(r.r[5] - 0.951803) < 1e-5);
  CHECK(r.argbest == 6);
  CHECK(r.best == r.r[5]);
  CHECK((r.branches & kR4Small) != 0);
  for (int i = 0; i < 6; ++i) CHECK(r.numerator[i] == doctest::Approx(r.r[i] * r.opt));

  RatioOptions four;
  four.ratio_count = 4;
  const RatioReport a = eval_ratios(table2(), 1e-5, 1e-5, four);
  CHECK(a.argbest == 1);
  CHECK(a.best == doctest::Approx(r.r[0]));
}

TEST_CASE("ratio input checks") {
  CHECK_THROWS_AS(eval_ratios(Configuration{}, 1e-5, 1e-5), DegenerateConfiguration);
  const Configuration c = table2();
  CHECK_THROWS_AS(eval_ratios(c, -0.1, 1e-5), std::invalid_argument);
  CHECK_THROWS_AS(eval_ratios(c, 1e-5, -1.0), std::invalid_argument);
  Configuration bad = c;
  bad[Cut::B] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(eval_ratios(bad, 1e-5, 1e-5), std::invalid_argument);
}

TEST_CASE("optimum inside S") {
  const double eps = 1e-9;
  const RatioReport r = eval_ratios(only(Cut::L1, 1.0, 1.0 - eps, 1.0 - eps), 1e-5, 1e-5);
  CHECK(r.r[0] == doctest::Approx(1.0));
  CHECK(r.best == doctest::Approx(1.0));
}

TEST_CASE("a tie at mu = 1 - xi evaluates both branches") {
  Configuration c = table2();
  c.mu = 1.0 - c.xi;
  const RatioReport r = eval_ratios(c, 1e-5, 1e-5);
  CHECK((r.branches & kR4Small) != 0);
  CHECK((r.branches & kR4Large) != 0);
  c.mu = 1.0 - c.xi - 1e-3;
  CHECK((eval_ratios(c, 1e-5, 1e-5).branches & kR4Large) == 0);
}

TEST_CASE("constraints") {
  const ConstraintViolations t = check_constraints(table2(), 1e-3);
  CHECK(t.feasible);
  CHECK(t.slacks.size() == static_cast<std::size_t>(kNumConstraints));
  CHECK(check_constraints(Configuration{}, 0.0).feasible);
  const ConstraintViolations v = check_constraints(only(Cut::I3, 0.5, 0.5, 0.5), 1e-9);
  CHECK_FALSE(v.feasible);
  CHECK(v.slacks[0].id == 1);
  CHECK(v.slacks[0].slack < 0.0);
  CHECK(v.worst < 0.0);
  const auto slacks = constraint_slacks(table2());
  for (int i = 0; i < kNumConstraints; ++i) CHECK(slacks[i] == doctest::Approx(t.slacks[i].slack));
}

TEST_CASE("homogeneity") {
  const std::vector<double> factors = {0.25, 0.5, 2.0};
  CHECK(homogeneity_defect(table2(), factors) < 1e-12);
  SplitMix64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Configuration c = table2();
    for (double& x : c.cuts) x *= 0.5 + rng.uniform();
    c.mu = 0.2 + 0.8 * rng.uniform();
    c.nu = 0.9 * rng.uniform();
    c.xi = 0.9 * rng.uniform();
    CHECK(homogeneity_defect(c, factors) < 1e-12);
  }
  // factors that do not scale exactly in binary
  CHECK(homogeneity_defect(table2(), {0.1, 3.0, 7.3}) < 1e-12);
  const Configuration n = table2().scaled(3.0).normalized();
  for (int i = 0; i < kNumCuts; ++i) CHECK(n.cuts[i] == doctest::Approx(table2().cuts[i]));
}

TEST_CASE("groups add up to the separation sides") {
  const Configuration c = table2();
  const DeltaQuantities d = delta_quantities(c);
  double pi = 0.0, la = 0.0;
  for (double x : pi_groups(c)) pi += x;
  for (double x : lambda_groups(c)) la += x;
  CHECK(pi == doctest::Approx(d.dS1 + d.dX1));
  CHECK(la == doctest::Approx(d.dS2 + d.dX2));
}

TEST_CASE("extraction reproduces direct counts") {
  SplitMix64 rng(8);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n1 = 1 + static_cast<int>(rng.below(4));
    const int n2 = 1 + static_cast<int>(rng.below(4));
    const BipartiteGraph g = generate_random(n1, n2, 0.2 + 0.7 * rng.uniform(), rng.next());
    for (int k = 1; k <= g.num_vertices(); ++k) {
      const ExactResult oracle = brute_force_opt(g, k);
      if (oracle.opt_value == 0) continue;
      ExtractedConfig e;
      try {
        e = extract_config(g, k, oracle);
      } catch (const DegenerateConfiguration&) {
        continue;
      }
      const BipartiteGraph& h = e.graph;
      const PartitionLayout& L = e.layout;
      const DeltaQuantities d = delta_quantities(e.raw);
      CHECK(d.dS1 == covered_edges(h, L.s1));
      CHECK(d.dS2 == covered_edges(h, L.s2));
      CHECK(d.dX1 == covered_edges(h, L.x1));
      CHECK(d.dX2 == covered_edges(h, L.x2));
      CHECK(d.dO1 == covered_edges(h, L.o1));
      CHECK(d.dO2 == covered_edges(h, L.o2));
      CHECK(d.opt == oracle.opt_value);
      CHECK(L.guess.k1 <= L.guess.k2);
      CHECK(e.raw.mu == doctest::Approx(static_cast<double>(L.guess.k1) / L.guess.k2));
      const auto slacks = constraint_slacks(e.raw);
      for (int i = 0; i < 10; ++i) CHECK(slacks[i] >= -1e-9);
      if (set_union(L.s1, L.s2) == set_union(L.o1, L.o2)) {
        CHECK(L.x1.empty());
        CHECK(L.x2.empty());
      }
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("extraction on K22") {
  const BipartiteGraph k22(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const ExactResult oracle = brute_force_opt(k22, 2);
  CHECK(oracle.opt_set == VertexSet{0, 1});
  // the whole optimum sits in one class, which becomes V2 after orientation
  const ExtractedConfig e = extract_config(k22, 2, oracle);
  CHECK(e.swapped);
  CHECK(e.raw.mu == 0.0);
  CHECK(delta_quantities(e.raw).opt == 4.0);
  CHECK_THROWS_AS(extract_config(k22, 0, brute_force_opt(k22, 0)), DegenerateConfiguration);
}
