#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bkvc/config_io.hpp"
#include "bkvc/optimizer.hpp"

using namespace bkvc;

namespace {

Configuration table2() { return read_config_file(BKVC_ASSET_DIR "/table2.cfg"); }

OptimizerSettings small(int restarts) {
  OptimizerSettings s;
  s.restarts = restarts;
  s.seed = 3;
  s.threads = 2;
  return s;
}

}  // namespace

TEST_CASE("central differences") {
  const std::vector<double> lo(2, -1.0), hi(2, 1.0);
  const BoxFunction linear = [](const std::vector<double>& x) { return 3.0 * x[0] - 0.5 * x[1]; };
  const auto g = central_diff_grad(linear, {0.2, 0.3}, lo, hi, 1e-5);
  CHECK(g[0] == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(g[1] == doctest::Approx(-0.5).epsilon(1e-9));

  const BoxFunction square = [](const std::vector<double>& x) { return x[0] * x[0]; };
  CHECK(std::abs(central_diff_grad(square, {0.5, 0.0}, lo, hi, 1e-5)[0] - 1.0) < 1e-9);
  // one-sided at a bound
  CHECK(central_diff_grad(square, {1.0, 0.0}, lo, hi, 1e-5)[0] ==
        doctest::Approx(2.0 - 0.5e-5).epsilon(1e-6));
  // fixed variable
  CHECK(central_diff_grad(linear, {0.0, 0.0}, lo, {1.0, -1.0}, 1e-5)[1] == 0.0);
}

TEST_CASE("box descent") {
  const std::vector<double> lo(3, 0.0), hi(3, 1.0);
  const BoxFunction flat = [](const std::vector<double>&) { return 2.0; };
  const BoxDescentResult still = minimize_box(flat, {0.3, 0.3, 0.3}, lo, hi, 1e-5, 1e-7, 100);
  CHECK(still.reason == StopReason::kStationary);
  CHECK(still.iterations == 0);
  CHECK(still.x == std::vector<double>{0.3, 0.3, 0.3});

  const BoxFunction bowl = [](const std::vector<double>& x) {
    return (x[0] - 0.25) * (x[0] - 0.25) + (x[1] + 1.0) * (x[1] + 1.0) +
           4.0 * (x[2] - 2.0) * (x[2] - 2.0);
  };
  const BoxDescentResult r = minimize_box(bowl, {0.9, 0.9, 0.1}, lo, hi, 1e-5, 1e-8, 500);
  CHECK(r.x[0] == doctest::Approx(0.25).epsilon(1e-5));
  CHECK(r.x[1] == 0.0);
  CHECK(r.x[2] == 1.0);
  CHECK(r.reason != StopReason::kMaxIters);
  CHECK(r.value <= bowl({0.9, 0.9, 0.1}));
}

TEST_CASE("vector layout and bounds") {
  const Configuration c = table2();
  const Configuration back = from_vector(to_vector(c), c.pi, c.lambda);
  CHECK(back.cuts == c.cuts);
  CHECK(back.pi_frac == c.pi_frac);
  CHECK(back.lambda_frac == c.lambda_frac);
  CHECK(to_vector(c).size() == static_cast<std::size_t>(kNumVars));
  OptimizerSettings s;
  std::vector<double> lo, hi;
  variable_bounds(s, lo, hi);
  CHECK(lo[kNumCuts] == s.mu_min);
  CHECK(hi.back() == 1.0);
  s.fraction_vars = 5;
  variable_bounds(s, lo, hi);
  CHECK(hi.back() == 0.0);
}

TEST_CASE("settings validation") {
  OptimizerSettings s;
  CHECK_NOTHROW(validate(s));
  s.restarts = 0;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s = {};
  s.h = 0.0;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s = {};
  s.fraction_vars = 4;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s = {};
  s.penalty_schedule.clear();
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
}

TEST_CASE("objective") {
  const OptimizerSettings s;
  const Configuration t = table2();
  CHECK(objective(t, s, 0.0) == eval_ratios(t, 1e-5, 1e-5).best);
  CHECK(objective(Configuration{}, s, 10.0) > 1.0);

  Configuration bad;
  bad[Cut::I3] = 1.0;
  bad.mu = bad.nu = bad.xi = 0.5;
  const auto slacks = constraint_slacks(bad);
  CHECK(slacks[0] < 0.0);
  double squares = 0.0;
  for (double x : slacks) squares += x < 0.0 ? x * x : 0.0;
  CHECK(violation(bad, s) == doctest::Approx(squares));
  CHECK(objective(bad, s, 100.0) == doctest::Approx(max_ratio(bad, s) + 100.0 * squares));
}

TEST_CASE("descent from the reference point") {
  OptimizerSettings s;
  const DescentResult r = local_descent(table2(), s);
  CHECK(r.feasible);
  CHECK(r.value <= 0.8215);
  CHECK(r.iterations > 0);
  CHECK(check_constraints(r.point, s.feasibility_tol).feasible);
  CHECK(eval_ratios(r.point, s.pi, s.lambda).best == doctest::Approx(r.value));
}

TEST_CASE("descent from the single-cut configuration") {
  Configuration c;
  c[Cut::L1] = 1.0;
  c.nu = c.xi = 1.0 - 1e-6;
  OptimizerSettings s;
  CHECK(max_ratio(c, s) == doctest::Approx(1.0));
  const DescentResult r = local_descent(c, s);
  CHECK(r.feasible);
  CHECK(r.value < 0.95);
}

TEST_CASE("multistart is deterministic and prefix stable") {
  const OptimizerRun a = minimize_max_ratio(small(6));
  OptimizerSettings one_thread = small(6);
  one_thread.threads = 1;
  const OptimizerRun b = minimize_max_ratio(one_thread);
  CHECK(a.best_value == b.best_value);
  CHECK(a.best_restart == b.best_restart);
  CHECK(a.best_config.cuts == b.best_config.cuts);
  const OptimizerRun prefix = minimize_max_ratio(small(3));
  for (int i = 0; i < 3; ++i) {
    CHECK(prefix.restarts[i].result.value == a.restarts[i].result.value);
    CHECK(prefix.restarts[i].start.cuts == a.restarts[i].start.cuts);
  }
  CHECK(a.best_value <= prefix.best_value);
  CHECK(a.best_feasible);
  for (const auto& rec : a.restarts) {
    if (rec.result.feasible) CHECK(a.best_value <= rec.result.value);
  }
}

TEST_CASE("injected start and the five-fraction mode") {
  OptimizerSettings s = small(1);
  s.initial_points = {table2()};
  CHECK(start_point(s, 0).cuts == table2().cuts);
  const OptimizerRun r = minimize_max_ratio(s);
  CHECK(r.best_value <= 0.8215);

  OptimizerSettings f = small(2);
  f.fraction_vars = 5;
  const OptimizerRun five = minimize_max_ratio(f);
  CHECK(five.best_config.pi_frac[5] == 0.0);
  CHECK(five.best_config.lambda_frac[5] == 0.0);
}
