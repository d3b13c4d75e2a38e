#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bkvc/cutmodel.hpp"

namespace bkvc {

enum class StopReason {
  kStationary,  // projected gradient below tolerance
  kStalled,     // line search could not decrease the objective
  kMaxIters,
};

const char* to_string(StopReason r);

enum class Method { kProjectedGradient };

struct OptimizerSettings {
  double pi = 1e-5;
  double lambda = 1e-5;
  int restarts = 1000;
  std::uint64_t seed = 1;
  double h = 1e-5;               // central-difference spacing
  int max_iters = 400;           // per inner descent
  int max_outer = 30;            // multiplier updates
  double stationarity_tol = 1e-7;
  std::vector<double> penalty_schedule = {10, 100, 1e3, 1e4, 1e5, 1e6};
  double feasibility_tol = 1e-6;
  double opt_floor = 0.1;
  double mu_min = 1e-3;
  int fraction_vars = 6;         // 5 pins pi6 = lambda6 = 0
  int ratio_count = 6;           // 4 drops the vertical-separation ratios
  FractionMode fractions = FractionMode::kCapped;
  int start_samples = 100;       // uniform draws per start; least violating is kept
  int threads = 0;               // 0 = hardware concurrency
  Method method = Method::kProjectedGradient;
  // Used verbatim as the first starts; the remaining ones are sampled.
  std::vector<Configuration> initial_points;
};

// Throws std::invalid_argument for settings outside their documented ranges.
void validate(const OptimizerSettings& s);

// Flat variable vector: 35 cuts, mu, nu, xi, pi1..pi6, lambda1..lambda6.
inline constexpr int kNumVars = kNumCuts + 3 + 12;
std::vector<double> to_vector(const Configuration& c);
Configuration from_vector(const std::vector<double>& x, double pi, double lambda);
void variable_bounds(const OptimizerSettings& s, std::vector<double>& lo, std::vector<double>& hi);

// Max ratio (1 when opt <= 0).
double max_ratio(const Configuration& c, const OptimizerSettings& s);
// Squared constraint violations plus the squared opt-floor shortfall.
double violation(const Configuration& c, const OptimizerSettings& s);
// max_ratio + w * violation.
double objective(const Configuration& c, const OptimizerSettings& s, double w);

using BoxFunction = std::function<double(const std::vector<double>&)>;

// Central differences with x +- h/2 clipped into [lo, hi]; one-sided at a bound.
std::vector<double> central_diff_grad(const BoxFunction& f, const std::vector<double>& x,
                                      const std::vector<double>& lo,
                                      const std::vector<double>& hi, double h);

struct BoxDescentResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  StopReason reason = StopReason::kMaxIters;
};

// Projected quasi-Newton (BFGS on the free variables, gradient on the bound
// ones) with an Armijo backtracking line search over a box, falling back to a
// projected gradient step. The objective never increases between accepted
// iterates.
BoxDescentResult minimize_box(const BoxFunction& f, std::vector<double> x,
                              const std::vector<double>& lo, const std::vector<double>& hi,
                              double h, double tol, int max_iters);

struct DescentResult {
  Configuration point;
  double value = 0.0;          // max ratio at the final point, penalties removed
  double max_violation = 0.0;  // most negative slack, as a positive number
  bool feasible = false;       // within feasibility_tol and opt >= opt_floor
  int iterations = 0;
  StopReason reason = StopReason::kMaxIters;
  bool converged = false;      // stationary or stalled in the last stage
};

// Penalty-only feasibility phase, then an augmented Lagrangian on
// "minimize t s.t. every candidate ratio <= t" with the penalty weight taken
// from penalty_schedule, then a penalty-only restoration if the point is still
// infeasible.
DescentResult local_descent(const Configuration& start, const OptimizerSettings& s);

struct RestartRecord {
  Configuration start;
  DescentResult result;
};

struct OptimizerRun {
  Configuration best_config;
  double best_value = 0.0;
  int best_restart = -1;
  bool best_feasible = false;
  std::vector<RestartRecord> restarts;
  OptimizerSettings settings;
};

// Start point of restart `index`: injected, or the least violating of
// `start_samples` uniform draws from the stream derive_seed(seed, index).
Configuration start_point(const OptimizerSettings& s, int index);

// Multistart minimization. Restarts run on worker threads; the result only
// depends on the settings. Feasible restarts are preferred; ties go to the
// smaller index.
OptimizerRun minimize_max_ratio(const OptimizerSettings& s);

}  // namespace bkvc
