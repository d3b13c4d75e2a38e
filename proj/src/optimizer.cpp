#include "bkvc/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "bkvc/rng.hpp"

namespace bkvc {

namespace {

constexpr int kMu = kNumCuts;
constexpr int kNu = kNumCuts + 1;
constexpr int kXi = kNumCuts + 2;
constexpr int kPiFrac = kNumCuts + 3;
constexpr int kLambdaFrac = kNumCuts + 9;

void clip(std::vector<double>& x, const std::vector<double>& lo, const std::vector<double>& hi) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
}

RatioOptions ratio_options(const OptimizerSettings& s) {
  RatioOptions o;
  o.fractions = s.fractions;
  o.ratio_count = s.ratio_count;
  return o;
}

double worst_slack(const Configuration& c) {
  const auto slack = constraint_slacks(c);
  return std::min(0.0, *std::min_element(slack.begin(), slack.end()));
}

bool is_feasible(const Configuration& c, const OptimizerSettings& s) {
  return worst_slack(c) >= -s.feasibility_tol &&
         delta_quantities(c).opt >= s.opt_floor - s.feasibility_tol;
}

// Constraint functions g <= 0 of the epigraph problem "minimize t": one slot
// per candidate lower bound (candidate / opt - t, or -inf when its case is
// inactive), then the negated constraint slacks, then the opt floor.
constexpr int kCandidateSlots = 40;
constexpr int kTerms = kCandidateSlots + kNumConstraints + 1;
constexpr double kInactive = -1e300;

void epigraph_terms(const Configuration& c, double t, const OptimizerSettings& s,
                    std::array<double, kTerms>& g) {
  g.fill(kInactive);
  const DeltaQuantities d = delta_quantities(c);
  if (d.opt > 0.0) {
    const RatioReport r = eval_ratios(c, s.pi, s.lambda, ratio_options(s));
    auto put = [&](int slot, double num) { g[slot] = num / d.opt - t; };
    for (int i = 0; i < 3; ++i) {
      put(i, r.a[i]);
      put(3 + i, r.b[i]);
      put(6 + i, d.dS1 + d.dX1 + r.c[i]);
    }
    if (r.branches & kR4Small) put(9, d.dS2 + r.m[0]);
    if (r.branches & kR4Large) {
      for (int i = 1; i < 5; ++i) put(9 + i, d.dS2 + d.dX2 + r.m[i]);
    }
    if (s.ratio_count == 6) {
      for (int i = 0; i < 5; ++i) {
        if (r.branches & kR5Z) put(14 + i, r.separation5 + r.z[i]);
        if (r.branches & kR5Phi) put(22 + i, r.separation5 + r.phi[i]);
        if (r.branches & kR6Upsilon) put(27 + i, r.separation6 + r.upsilon[i]);
        if (r.branches & kR6Omega) put(35 + i, r.separation6 + r.omega[i]);
      }
      for (int i = 0; i < 3; ++i) {
        if (r.branches & kR5Theta) put(19 + i, r.separation5 + r.theta[i]);
        if (r.branches & kR6Psi) put(32 + i, r.separation6 + r.psi[i]);
      }
    }
  } else {
    g[0] = 1.0 - t;
  }
  const auto slack = constraint_slacks(c);
  for (int i = 0; i < kNumConstraints; ++i) g[kCandidateSlots + i] = -slack[i];
  g[kTerms - 1] = s.opt_floor - d.opt;
}

}  // namespace

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::kStationary: return "stationary";
    case StopReason::kStalled: return "stalled";
    case StopReason::kMaxIters: return "max-iters";
  }
  return "?";
}

void validate(const OptimizerSettings& s) {
  auto fail = [](const char* what) { throw std::invalid_argument(what); };
  if (!(s.h > 0.0)) fail("h must be positive");
  if (s.restarts < 1) fail("restarts must be at least 1");
  if (!(s.pi > 0.0 && s.pi <= 0.5)) fail("pi must lie in (0, 1/2]");
  if (!(s.lambda > 0.0)) fail("lambda must be positive");
  if (s.max_iters < 0) fail("max_iters must be nonnegative");
  if (s.penalty_schedule.empty()) fail("penalty schedule is empty");
  if (s.fraction_vars != 5 && s.fraction_vars != 6) fail("fraction_vars must be 5 or 6");
  if (s.ratio_count != 4 && s.ratio_count != 6) fail("ratio_count must be 4 or 6");
  if (!(s.mu_min > 0.0 && s.mu_min <= 1.0)) fail("mu_min must lie in (0, 1]");
  if (s.start_samples < 1) fail("start_samples must be at least 1");
}

std::vector<double> to_vector(const Configuration& c) {
  std::vector<double> x(kNumVars);
  std::copy(c.cuts.begin(), c.cuts.end(), x.begin());
  x[kMu] = c.mu;
  x[kNu] = c.nu;
  x[kXi] = c.xi;
  std::copy(c.pi_frac.begin(), c.pi_frac.end(), x.begin() + kPiFrac);
  std::copy(c.lambda_frac.begin(), c.lambda_frac.end(), x.begin() + kLambdaFrac);
  return x;
}

Configuration from_vector(const std::vector<double>& x, double pi, double lambda) {
  Configuration c;
  std::copy(x.begin(), x.begin() + kNumCuts, c.cuts.begin());
  c.mu = x[kMu];
  c.nu = x[kNu];
  c.xi = x[kXi];
  std::copy(x.begin() + kPiFrac, x.begin() + kPiFrac + 6, c.pi_frac.begin());
  std::copy(x.begin() + kLambdaFrac, x.begin() + kLambdaFrac + 6, c.lambda_frac.begin());
  c.pi = pi;
  c.lambda = lambda;
  return c;
}

void variable_bounds(const OptimizerSettings& s, std::vector<double>& lo, std::vector<double>& hi) {
  lo.assign(kNumVars, 0.0);
  hi.assign(kNumVars, 1.0);
  lo[kMu] = s.mu_min;
  if (s.fraction_vars == 5) {
    hi[kPiFrac + 5] = 0.0;
    hi[kLambdaFrac + 5] = 0.0;
  }
}

double max_ratio(const Configuration& c, const OptimizerSettings& s) {
  if (!(delta_quantities(c).opt > 0.0)) return 1.0;
  return eval_ratios(c, s.pi, s.lambda, ratio_options(s)).best;
}

double violation(const Configuration& c, const OptimizerSettings& s) {
  double v = 0.0;
  for (double slack : constraint_slacks(c)) {
    if (slack < 0.0) v += slack * slack;
  }
  const double short_by = s.opt_floor - delta_quantities(c).opt;
  if (short_by > 0.0) v += short_by * short_by;
  return v;
}

double objective(const Configuration& c, const OptimizerSettings& s, double w) {
  return max_ratio(c, s) + w * violation(c, s);
}

std::vector<double> central_diff_grad(const BoxFunction& f, const std::vector<double>& x,
                                      const std::vector<double>& lo,
                                      const std::vector<double>& hi, double h) {
  std::vector<double> g(x.size(), 0.0);
  std::vector<double> y = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xp = std::min(x[i] + 0.5 * h, hi[i]);
    const double xm = std::max(x[i] - 0.5 * h, lo[i]);
    if (!(xp > xm)) continue;  // fixed variable
    y[i] = xp;
    const double fp = f(y);
    y[i] = xm;
    const double fm = f(y);
    y[i] = x[i];
    g[i] = (fp - fm) / (xp - xm);
  }
  return g;
}

BoxDescentResult minimize_box(const BoxFunction& f, std::vector<double> x,
                              const std::vector<double>& lo, const std::vector<double>& hi,
                              double h, double tol, int max_iters) {
  const std::size_t n = x.size();
  clip(x, lo, hi);
  BoxDescentResult out;
  double fx = f(x);

  // Two-metric projection: a BFGS inverse-Hessian step on the free variables,
  // plain gradient on those held at a bound. H resets to the identity
  // whenever the quasi-Newton direction fails.
  std::vector<double> hinv(n * n, 0.0);
  auto reset = [&] {
    std::fill(hinv.begin(), hinv.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) hinv[i * n + i] = 1.0;
  };
  reset();
  std::vector<double> g, g_prev, x_prev, d(n), y(n), sv(n), yv(n), hy(n);
  std::vector<char> held(n);
  bool have_prev = false;

  for (out.iterations = 0; out.iterations < max_iters; ++out.iterations) {
    g = central_diff_grad(f, x, lo, hi, h);
    if (have_prev) {
      double sy = 0.0, yy = 0.0, ss = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        sv[i] = x[i] - x_prev[i];
        yv[i] = g[i] - g_prev[i];
        sy += sv[i] * yv[i];
        yy += yv[i] * yv[i];
        ss += sv[i] * sv[i];
      }
      if (sy > 1e-10 * std::sqrt(ss * yy)) {
        double yhy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          double acc = 0.0;
          for (std::size_t j = 0; j < n; ++j) acc += hinv[i * n + j] * yv[j];
          hy[i] = acc;
          yhy += yv[i] * acc;
        }
        const double rho = 1.0 / sy;
        const double scale = (1.0 + rho * yhy) * rho;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            hinv[i * n + j] += scale * sv[i] * sv[j] - rho * (hy[i] * sv[j] + sv[i] * hy[j]);
          }
        }
      }
    }

    double largest = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      held[i] = (x[i] <= lo[i] && g[i] > 0.0) || (x[i] >= hi[i] && g[i] < 0.0);
      if (!held[i]) largest = std::max(largest, std::abs(g[i]));
    }
    if (largest < tol) {
      out.reason = StopReason::kStationary;
      break;
    }

    bool accepted = false;
    for (int attempt = 0; attempt < 2 && !accepted; ++attempt) {
      const bool newton = attempt == 0;
      double slope = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (held[i]) {
          d[i] = 0.0;
          continue;
        }
        double acc = g[i];
        if (newton) {
          acc = 0.0;
          for (std::size_t j = 0; j < n; ++j) {
            if (!held[j]) acc += hinv[i * n + j] * g[j];
          }
        }
        d[i] = -acc;
        slope += g[i] * d[i];
      }
      if (!(slope < 0.0)) {
        reset();
        continue;
      }
      for (double step = 1.0; step > 1e-12; step *= 0.5) {
        double decrease = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          y[i] = std::clamp(x[i] + step * d[i], lo[i], hi[i]);
          decrease += g[i] * (x[i] - y[i]);
        }
        const double fy = f(y);
        if (fy < fx && fy <= fx - 1e-4 * decrease) {
          x_prev = x;
          g_prev = g;
          have_prev = true;
          x.swap(y);
          fx = fy;
          accepted = true;
          break;
        }
      }
      if (!accepted) reset();
    }
    if (!accepted) {
      out.reason = StopReason::kStalled;
      break;
    }
  }
  out.x = std::move(x);
  out.value = fx;
  return out;
}

DescentResult local_descent(const Configuration& start, const OptimizerSettings& s) {
  std::vector<double> lo, hi;
  variable_bounds(s, lo, hi);
  auto config = [&](const std::vector<double>& v) { return from_vector(v, s.pi, s.lambda); };
  const BoxFunction infeasibility = [&](const std::vector<double>& v) {
    return violation(config(v), s);
  };

  DescentResult out;
  BoxDescentResult step =
      minimize_box(infeasibility, to_vector(start), lo, hi, s.h, s.stationarity_tol, s.max_iters);
  out.iterations += step.iterations;

  // Augmented Lagrangian on the epigraph problem: the level t joins the
  // variables as the last coordinate, every bound and constraint becomes
  // g <= 0 with a multiplier. The weight climbs the schedule whenever the
  // violation fails to shrink fourfold.
  std::vector<double> xt = std::move(step.x);
  xt.push_back(max_ratio(config(xt), s));
  std::vector<double> lo_t = lo, hi_t = hi;
  lo_t.push_back(0.0);
  hi_t.push_back(2.0);
  std::array<double, kTerms> y{};
  std::array<double, kTerms> g{};
  std::size_t stage = 0;
  double previous = std::numeric_limits<double>::infinity();
  for (int outer = 0; outer < s.max_outer; ++outer) {
    const double rho = s.penalty_schedule[stage];
    const BoxFunction lagrangian = [&](const std::vector<double>& v) {
      std::array<double, kTerms> gv;
      epigraph_terms(from_vector(v, s.pi, s.lambda), v.back(), s, gv);
      double f = v.back();
      for (int j = 0; j < kTerms; ++j) {
        const double shifted = gv[j] + y[j] / rho;
        if (shifted > 0.0) f += 0.5 * rho * shifted * shifted;
        f -= 0.5 * y[j] * y[j] / rho;
      }
      return f;
    };
    const double t_before = xt.back();
    step = minimize_box(lagrangian, std::move(xt), lo_t, hi_t, s.h, s.stationarity_tol,
                        s.max_iters);
    out.iterations += step.iterations;
    xt = std::move(step.x);

    epigraph_terms(from_vector(xt, s.pi, s.lambda), xt.back(), s, g);
    double worst = 0.0;
    for (int j = 0; j < kTerms; ++j) {
      worst = std::max(worst, g[j]);
      y[j] = std::max(0.0, y[j] + rho * g[j]);
    }
    if (worst < 0.1 * s.feasibility_tol && std::abs(xt.back() - t_before) < 1e-9) break;
    if (worst > 0.25 * previous && stage + 1 < s.penalty_schedule.size()) ++stage;
    previous = worst;
  }
  out.reason = step.reason;
  out.converged = step.reason != StopReason::kMaxIters;

  std::vector<double> x(xt.begin(), xt.end() - 1);
  if (!is_feasible(config(x), s)) {
    BoxDescentResult fix =
        minimize_box(infeasibility, std::move(x), lo, hi, s.h, 1e-12, s.max_iters);
    out.iterations += fix.iterations;
    x = std::move(fix.x);
  }
  out.point = config(x);
  out.value = max_ratio(out.point, s);
  out.max_violation = -worst_slack(out.point);
  out.feasible = is_feasible(out.point, s);
  return out;
}

Configuration start_point(const OptimizerSettings& s, int index) {
  std::vector<double> lo, hi;
  variable_bounds(s, lo, hi);
  if (index >= 0 && index < static_cast<int>(s.initial_points.size())) {
    std::vector<double> x = to_vector(s.initial_points[index]);
    clip(x, lo, hi);
    return from_vector(x, s.pi, s.lambda);
  }
  SplitMix64 rng(derive_seed(s.seed, static_cast<std::uint64_t>(index)));
  std::vector<double> x(kNumVars);
  Configuration best;
  double best_violation = 0.0;
  for (int draw = 0; draw < s.start_samples; ++draw) {
    for (int i = 0; i < kNumVars; ++i) x[i] = lo[i] + (hi[i] - lo[i]) * rng.uniform();
    const Configuration c = from_vector(x, s.pi, s.lambda);
    const double v = violation(c, s);
    if (draw == 0 || v < best_violation) {
      best = c;
      best_violation = v;
    }
    if (v == 0.0) break;
  }
  return best;
}

OptimizerRun minimize_max_ratio(const OptimizerSettings& s) {
  validate(s);
  OptimizerRun run;
  run.settings = s;
  run.restarts.resize(s.restarts);

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < s.restarts; i = next++) {
      RestartRecord& rec = run.restarts[i];
      rec.start = start_point(s, i);
      rec.result = local_descent(rec.start, s);
    }
  };
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  const int threads = std::clamp(s.threads > 0 ? s.threads : hw, 1, s.restarts);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Feasible beats infeasible; then lower value; then lower index.
  for (int i = 0; i < s.restarts; ++i) {
    const DescentResult& r = run.restarts[i].result;
    bool better = run.best_restart < 0;
    if (!better) {
      if (r.feasible != run.best_feasible) {
        better = r.feasible;
      } else if (r.feasible) {
        better = r.value < run.best_value;
      } else {
        better = r.max_violation < run.restarts[run.best_restart].result.max_violation;
      }
    }
    if (better) {
      run.best_restart = i;
      run.best_value = r.value;
      run.best_feasible = r.feasible;
      run.best_config = r.point;
    }
  }
  return run;
}

}  // namespace bkvc
