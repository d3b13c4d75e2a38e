#include "bkvc/cutmodel.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>

namespace bkvc {

namespace {

constexpr double kGuard = 1e-9;   // smallest admissible denominator
constexpr double kTie = 1e-12;    // branch conditions closer than this evaluate both sides

struct Cuts {
  double B, C, F1, F2, F3, H1, H2;
  double I1, I2, I3, I4, I5, I6;
  double J1, J2, J3;
  double L1, L2, L3, L4, L5, L6, L7, L8, L9;
  double N1, N2;
  double P1, P2, P3, P4, P5;
  double U1, U2, U3;
};
static_assert(sizeof(Cuts) == kNumCuts * sizeof(double));

Cuts unpack(const Configuration& c) {
  Cuts v;
  std::memcpy(&v, c.cuts.data(), sizeof v);
  return v;
}

double sum_l(const Cuts& v) {
  return v.L1 + v.L2 + v.L3 + v.L4 + v.L5 + v.L6 + v.L7 + v.L8 + v.L9;
}

DeltaQuantities deltas(const Cuts& v) {
  const double ls = sum_l(v);
  DeltaQuantities d;
  d.dS1 = v.B + v.C + v.F1 + v.F2 + v.F3 + v.H1 + v.H2 + v.L1 + v.L2 + v.L3 + v.U1 + v.U2;
  d.dS2 = v.B + v.C + v.J1 + v.J2 + v.J3 + v.L1 + v.L4 + v.L7 + v.N1 + v.N2 + v.U1 + v.U3;
  d.dX1 = v.I1 + v.I2 + v.I5 + v.I6 + v.J1 + v.J3 + v.L4 + v.L5 + v.L6 + v.N1 + v.P2 + v.P4;
  d.dX2 = v.F1 + v.F3 + v.H1 + v.I1 + v.I3 + v.I5 + v.L2 + v.L5 + v.L8 + v.P1 + v.P4 + v.P5;
  d.dO1 = v.C + v.H1 + v.H2 + v.I3 + v.I4 + v.I5 + v.I6 + v.J2 + v.J3 + ls;
  d.dO2 = v.B + v.F2 + v.F3 + v.N1 + v.N2 + v.P2 + v.P3 + v.P4 + v.P5 + ls;
  d.opt = v.B + v.C + v.F2 + v.F3 + v.H1 + v.H2 + v.I3 + v.I4 + v.I5 + v.I6 + v.J2 + v.J3 + ls +
          v.N1 + v.N2 + v.P2 + v.P3 + v.P4 + v.P5;
  return d;
}

std::array<double, 6> pi_groups(const Cuts& v) {
  return {v.C + v.J1 + v.J3 + v.U1, v.B + v.L1 + v.L4 + v.N1, v.F3 + v.L2 + v.L5 + v.P4,
          v.I1 + v.I5 + v.F1 + v.H1, v.F2 + v.L3 + v.L6 + v.P2, v.I2 + v.I6 + v.H2 + v.U2};
}

std::array<double, 6> lambda_groups(const Cuts& v) {
  return {v.B + v.F1 + v.F3 + v.U1, v.C + v.H1 + v.L1 + v.L2, v.J3 + v.I5 + v.L4 + v.L5,
          v.I1 + v.J1 + v.N1 + v.P4, v.I3 + v.J2 + v.L7 + v.L8, v.N2 + v.P1 + v.P5 + v.U3};
}

double max_of(const double* p, int n) { return *std::max_element(p, p + n); }

bool finite_config(const Configuration& c) {
  auto ok = [](double x) { return std::isfinite(x); };
  return std::all_of(c.cuts.begin(), c.cuts.end(), ok) && ok(c.mu) && ok(c.nu) && ok(c.xi) &&
         std::all_of(c.pi_frac.begin(), c.pi_frac.end(), ok) &&
         std::all_of(c.lambda_frac.begin(), c.lambda_frac.end(), ok);
}

}  // namespace

Configuration Configuration::scaled(double t) const {
  Configuration out = *this;
  for (double& x : out.cuts) x *= t;
  return out;
}

Configuration Configuration::normalized() const {
  const double top = *std::max_element(cuts.begin(), cuts.end());
  return top > 0.0 ? scaled(1.0 / top) : *this;
}

DeltaQuantities delta_quantities(const Configuration& c) { return deltas(unpack(c)); }

std::array<double, 6> pi_groups(const Configuration& c) { return pi_groups(unpack(c)); }
std::array<double, 6> lambda_groups(const Configuration& c) { return lambda_groups(unpack(c)); }

constexpr std::array<std::string_view, kNumConstraints> kConstraintLabels = {
    "dS1 >= dO1",
    "dS2 >= dO2",
    "dX1 + d(O1 in S1) >= dO1",
    "dX2 + d(O2 in S2) >= dO2",
    "dS1 >= dX1/(1-nu)",
    "dS2 >= dX2/(1-xi)",
    "dS1 + dX1 >= (2-nu)/(1-nu) d(Obar1)",
    "dS2 + dX2 >= (2-xi)/(1-xi) d(Obar2)",
    "d(S1 minus O1) >= dX1",
    "d(S2 minus O2) >= dX2",
    "sum pi_i Pi_i >= pi sum Pi_i",
    "sum lambda_i Lambda_i >= lambda sum Lambda_i",
    "lambda (2-xi) <= 1+mu",
};

std::array<double, kNumConstraints> constraint_slacks(const Configuration& c) {
  const Cuts v = unpack(c);
  const DeltaQuantities d = deltas(v);
  const double one_nu = 1.0 - c.nu;
  const double one_xi = 1.0 - c.xi;
  const double obar1 = v.I3 + v.I4 + v.J2 + v.L7 + v.L8 + v.L9;
  const double obar2 = v.F2 + v.L3 + v.L6 + v.L9 + v.P2 + v.P3;

  // lhs - (num / den) x, or the limit -num x once den is numerically zero.
  auto ratio_slack = [](double lhs, double num, double den, double x) {
    if (den >= kGuard) return lhs - num / den * x;
    return -num * x;
  };

  const auto pg = pi_groups(v);
  const auto lg = lambda_groups(v);
  double sep5 = 0.0, sep6 = 0.0, tot5 = 0.0, tot6 = 0.0;
  for (int i = 0; i < 6; ++i) {
    sep5 += c.pi_frac[i] * pg[i];
    sep6 += c.lambda_frac[i] * lg[i];
    tot5 += pg[i];
    tot6 += lg[i];
  }
  return {d.dS1 - d.dO1,
          d.dS2 - d.dO2,
          d.dX1 + v.C + v.H1 + v.H2 + v.L1 + v.L2 + v.L3 - d.dO1,
          d.dX2 + v.B + v.N1 + v.N2 + v.L1 + v.L4 + v.L7 - d.dO2,
          ratio_slack(d.dS1, 1.0, one_nu, d.dX1),
          ratio_slack(d.dS2, 1.0, one_xi, d.dX2),
          ratio_slack(d.dS1 + d.dX1, 2.0 - c.nu, one_nu, obar1),
          ratio_slack(d.dS2 + d.dX2, 2.0 - c.xi, one_xi, obar2),
          v.B + v.F1 + v.F2 + v.F3 + v.U1 + v.U2 - d.dX1,
          v.C + v.J1 + v.J2 + v.J3 + v.U1 + v.U3 - d.dX2,
          sep5 - c.pi * tot5,
          sep6 - c.lambda * tot6,
          1.0 + c.mu - c.lambda * (2.0 - c.xi)};
}

ConstraintViolations check_constraints(const Configuration& c, double tol) {
  const auto slack = constraint_slacks(c);
  ConstraintViolations out;
  for (int i = 0; i < kNumConstraints; ++i) {
    out.slacks.push_back({i + 1, kConstraintLabels[i], slack[i]});
    out.worst = std::min(out.worst, slack[i]);
  }
  out.feasible = out.worst >= -tol;
  return out;
}

RatioReport eval_ratios(const Configuration& config, double pi, double lambda,
                        const RatioOptions& options) {
  if (!finite_config(config) || !std::isfinite(pi) || !std::isfinite(lambda)) {
    throw std::invalid_argument("eval_ratios: non-finite input");
  }
  if (pi < 0.0 || lambda < 0.0) {
    throw std::invalid_argument("eval_ratios: pi and lambda must be nonnegative");
  }
  const Cuts v = unpack(config);
  const DeltaQuantities d = deltas(v);
  if (!(d.opt > 0.0)) throw DegenerateConfiguration("eval_ratios: opt <= 0");

  const bool capped = options.fractions == FractionMode::kCapped;
  auto frac = [capped](double x) { return capped ? std::clamp(x, 0.0, 1.0) : x; };

  const double mu = config.mu, nu = config.nu, xi = config.xi;
  const double mu_g = std::max(mu, kGuard);
  const double one_xi = std::max(1.0 - xi, kGuard);

  RatioReport rep;
  rep.opt = d.opt;
  rep.ratio_count = options.ratio_count;

  // SOL1: S1 plus the best completion in V2.
  rep.a = {d.dS1 + v.J1 + v.J2 + v.J3 + v.L4 + v.L7 + v.N1 + v.N2 + v.U3,
           d.dS1 + v.I1 + v.I3 + v.I5 + v.L5 + v.L8 + v.P1 + v.P4 + v.P5,
           d.dS1 + v.L4 + v.L5 + v.L6 + v.L7 + v.L8 + v.L9 + v.N1 + v.N2 + v.P2 + v.P3 + v.P4 +
               v.P5};
  // SOL2: S2 plus the best completion in V1.
  rep.b = {d.dS2 + v.H1 + v.H2 + v.F1 + v.F2 + v.F3 + v.L2 + v.L3 + v.U2,
           d.dS2 + v.I1 + v.I2 + v.I5 + v.I6 + v.L5 + v.L6 + v.P2 + v.P4,
           d.dS2 + v.H1 + v.H2 + v.I3 + v.I4 + v.I5 + v.I6 + v.L2 + v.L3 + v.L5 + v.L6 + v.L8 +
               v.L9};
  // SOL3: S1 ∪ X1 plus what the remaining budget reaches in V2.
  const double f3 = 1.0 - mu * (1.0 - nu);
  rep.c = {frac(f3) * (v.J2 + v.N2 + v.L7 + v.U3),
           frac(f3 / (2.0 - xi)) * (v.I3 + v.J2 + v.L7 + v.L8 + v.N2 + v.P1 + v.P5 + v.U3),
           frac(f3 / (3.0 - 2.0 * xi)) *
               (v.I3 + v.J2 + v.L7 + v.L8 + v.L9 + v.N2 + v.P1 + v.P3 + v.P5 + v.U3)};

  // SOL4.
  const double obar2 = v.F2 + v.L3 + v.L6 + v.L9 + v.P2 + v.P3;
  const double t4 = mu - 1.0 + xi;
  rep.m[0] = std::max(frac(mu / one_xi) * d.dX2, frac(mu / (2.0 * one_xi)) * (d.dX2 + obar2));
  rep.m[1] = std::min(1.0, t4 / one_xi) * obar2;
  rep.m[2] = frac(t4 / mu_g) * (v.F2 + v.H2 + v.L3 + v.U2);
  rep.m[3] = frac(t4 / (mu_g * (2.0 - nu))) *
             (v.F2 + v.H2 + v.I2 + v.I6 + v.L3 + v.L6 + v.P2 + v.U2);
  rep.m[4] = frac(t4 / (mu_g * (3.0 - 2.0 * nu))) *
             (v.F2 + v.H2 + v.I2 + v.I4 + v.I6 + v.L3 + v.L6 + v.L9 + v.P2 + v.U2);
  double r4_num = 0.0;
  if (t4 <= kTie) {
    rep.branches |= kR4Small;
    r4_num = std::max(r4_num, d.dS2 + rep.m[0]);
  }
  if (t4 >= -kTie) {
    rep.branches |= kR4Large;
    r4_num = std::max(r4_num, d.dS2 + d.dX2 + max_of(&rep.m[1], 4));
  }

  rep.numerator[0] = max_of(rep.a.data(), 3);
  rep.numerator[1] = max_of(rep.b.data(), 3);
  rep.numerator[2] = d.dS1 + d.dX1 + max_of(rep.c.data(), 3);
  rep.numerator[3] = r4_num;

  // SOL5: a pi-fraction of S1 and X1, then the rest in V2.
  rep.pi_group = pi_groups(v);
  std::array<double, 6> q{};
  for (int i = 0; i < 6; ++i) {
    rep.separation5 += config.pi_frac[i] * rep.pi_group[i];
    q[i] = (1.0 - config.pi_frac[i]) * rep.pi_group[i];
  }
  {
    const double a5 = 1.0 - mu * (2.0 * pi - 1.0) + mu * nu * pi;
    const double b5 = mu * (1.0 - 2.0 * pi) + mu * nu * pi;
    const double s_part = q[0] + q[1] + v.J2 + v.L7 + v.N2 + v.U3;
    const double w34 = q[0] + q[1] + q[2] + q[3] + v.I3 + v.J2 + v.L7 + v.L8 + v.N2 + v.P1 + v.P5 + v.U3;
    const double w35 = q[0] + q[1] + q[2] + q[4] + v.J2 + v.L7 + v.L8 + v.L9 + v.N2 + v.P3 + v.P5 + v.U3;
    const double w_all = q[0] + q[1] + q[2] + q[3] + q[4] + v.I3 + v.J2 + v.L7 + v.L8 + v.L9 +
                         v.N2 + v.P1 + v.P3 + v.P5 + v.U3;
    const double x_b = frac(b5 / one_xi);
    rep.z = {s_part + x_b * (q[2] + q[4] + v.L8 + v.L9 + v.P3 + v.P5),
             s_part + x_b * (q[2] + q[3] + v.I3 + v.L8 + v.P1 + v.P5),
             frac(a5 / (2.0 - xi)) * w34, frac(a5 / (2.0 - xi)) * w35,
             frac(a5 / (3.0 - 2.0 * xi)) * w_all};
    const double over = frac((b5 - (1.0 - xi)) / one_xi);
    rep.theta = {w34 + over * (q[4] + v.L9 + v.P3), w35 + over * (q[3] + v.I3 + v.P1),
                 frac(a5 / (3.0 - 2.0 * xi)) * w_all};
    rep.phi = {frac(a5) * s_part, frac(a5 / one_xi) * (q[2] + q[3] + v.I3 + v.L8 + v.P1 + v.P5),
               frac(a5) * (q[1] + q[2] + q[4] + v.L7 + v.L8 + v.L9 + v.N2 + v.P3 + v.P5),
               frac(a5 / (2.0 - xi)) * w34, frac(a5 / (3.0 - 2.0 * xi)) * w_all};
    rep.z_star = max_of(rep.z.data(), 5);
    rep.theta_star = max_of(rep.theta.data(), 3);
    rep.phi_star = max_of(rep.phi.data(), 5);

    double best5 = 0.0;
    if (a5 - 1.0 >= -kTie) {
      const double e = b5 - (1.0 - xi);
      if (e <= kTie) {
        rep.branches |= kR5Z;
        best5 = std::max(best5, rep.z_star);
      }
      if (e >= -kTie) {
        rep.branches |= kR5Theta;
        best5 = std::max(best5, rep.theta_star);
      }
    }
    if (a5 - 1.0 <= kTie) {
      rep.branches |= kR5Phi;
      best5 = std::max(best5, rep.phi_star);
    }
    rep.numerator[4] = rep.separation5 + best5;
  }

  // SOL6: a lambda-fraction of S2 and X2, then the rest in V1.
  rep.lambda_group = lambda_groups(v);
  std::array<double, 6> w{};
  for (int i = 0; i < 6; ++i) {
    rep.separation6 += config.lambda_frac[i] * rep.lambda_group[i];
    w[i] = (1.0 - config.lambda_frac[i]) * rep.lambda_group[i];
  }
  {
    const double al = 1.0 + mu - lambda * (2.0 - xi);
    const double bl = 1.0 - lambda * (2.0 - xi);
    const double m1 = std::max(mu_g * (1.0 - nu), kGuard);
    const double s_part = w[0] + w[1] + v.H2 + v.F2 + v.L3 + v.U2;
    const double k1 = w[0] + w[1] + w[2] + w[3] + v.F2 + v.H2 + v.I2 + v.I6 + v.L3 + v.L6 + v.P2 + v.U2;
    const double k2 = w[0] + w[1] + w[2] + w[4] + v.F2 + v.H2 + v.I4 + v.I6 + v.L3 + v.L6 + v.L9 + v.U2;
    const double k3 = w[0] + w[1] + w[2] + w[3] + w[4] + v.F2 + v.H2 + v.I2 + v.I4 + v.I6 + v.L3 +
                      v.L6 + v.L9 + v.P2 + v.U2;
    const double c2 = frac(al / (mu_g * (2.0 - nu)));
    const double c3 = frac(al / (mu_g * (3.0 - 2.0 * nu)));
    const double x_b = frac(bl / m1);
    rep.upsilon = {s_part + x_b * (w[2] + w[3] + v.I2 + v.I6 + v.L6 + v.P2),
                   s_part + x_b * (w[2] + w[4] + v.I4 + v.I6 + v.L6 + v.L9), c2 * k1, c2 * k2,
                   c3 * k3};
    const double over = frac((bl - mu * (1.0 - nu)) / m1);
    rep.psi = {k1 + over * (w[4] + v.I4 + v.L9), k2 + over * (w[3] + v.I2 + v.P2), c3 * k3};
    const double f = frac(al / mu_g);
    rep.omega = {f * s_part, f * (w[2] + w[3] + v.I2 + v.I6 + v.L6 + v.P2),
                 f * (w[1] + w[2] + w[4] + v.H2 + v.I4 + v.I6 + v.L3 + v.L6 + v.L9), c2 * k1,
                 c3 * k3};
    rep.upsilon_star = max_of(rep.upsilon.data(), 5);
    rep.psi_star = max_of(rep.psi.data(), 3);
    rep.omega_star = max_of(rep.omega.data(), 5);

    double best6 = 0.0;
    if (bl >= -kTie) {
      const double e = bl - (1.0 - nu) * mu;
      if (e <= kTie) {
        rep.branches |= kR6Upsilon;
        best6 = std::max(best6, rep.upsilon_star);
      }
      if (e >= -kTie) {
        rep.branches |= kR6Psi;
        best6 = std::max(best6, rep.psi_star);
      }
    }
    if (bl <= kTie) {
      rep.branches |= kR6Omega;
      best6 = std::max(best6, rep.omega_star);
    }
    rep.numerator[5] = rep.separation6 + best6;
  }

  const int used = std::clamp(options.ratio_count, 1, 6);
  for (int i = 0; i < 6; ++i) rep.r[i] = rep.numerator[i] / d.opt;
  rep.argbest = 1;
  rep.best = rep.r[0];
  for (int i = 1; i < used; ++i) {
    if (rep.r[i] > rep.best) {
      rep.best = rep.r[i];
      rep.argbest = i + 1;
    }
  }
  return rep;
}

std::vector<std::pair<std::string, double>> RatioReport::named() const {
  std::vector<std::pair<std::string, double>> out;
  auto put = [&out](const std::string& stem, const double* p, int n) {
    for (int i = 0; i < n; ++i) out.emplace_back(stem + std::to_string(i + 1), p[i]);
  };
  put("r", r.data(), 6);
  out.emplace_back("opt", opt);
  out.emplace_back("best", best);
  put("A", a.data(), 3);
  put("B", b.data(), 3);
  put("C", c.data(), 3);
  put("M", m.data(), 5);
  put("Pi", pi_group.data(), 6);
  out.emplace_back("sum_pi_Pi", separation5);
  put("Z", z.data(), 5);
  put("Theta", theta.data(), 3);
  put("Phi", phi.data(), 5);
  put("Lambda", lambda_group.data(), 6);
  out.emplace_back("sum_lambda_Lambda", separation6);
  put("Upsilon", upsilon.data(), 5);
  put("Psi", psi.data(), 3);
  put("Omega", omega.data(), 5);
  out.emplace_back("Z*", z_star);
  out.emplace_back("Theta*", theta_star);
  out.emplace_back("Phi*", phi_star);
  out.emplace_back("Upsilon*", upsilon_star);
  out.emplace_back("Psi*", psi_star);
  out.emplace_back("Omega*", omega_star);
  return out;
}

namespace {

enum Region { kSN = 0, kSO, kXN, kXO, kOB, kR };

// Cut index for (region in V1, region in V2); -1 for the irrelevant R-R pair.
constexpr int kCutTable[6][6] = {
    // SN2                    SO2                          XN2                          XO2                          OB2                          R2
    {int(Cut::U1), int(Cut::B), int(Cut::F1), int(Cut::F3), int(Cut::F2), int(Cut::U2)},  // SN1
    {int(Cut::C), int(Cut::L1), int(Cut::H1), int(Cut::L2), int(Cut::L3), int(Cut::H2)},  // SO1
    {int(Cut::J1), int(Cut::N1), int(Cut::I1), int(Cut::P4), int(Cut::P2), int(Cut::I2)},  // XN1
    {int(Cut::J3), int(Cut::L4), int(Cut::I5), int(Cut::L5), int(Cut::L6), int(Cut::I6)},  // XO1
    {int(Cut::J2), int(Cut::L7), int(Cut::I3), int(Cut::L8), int(Cut::L9), int(Cut::I4)},  // OB1
    {int(Cut::U3), int(Cut::N2), int(Cut::P1), int(Cut::P5), int(Cut::P3), -1},            // R1
};

// Group order of the Π / Λ sums: S∖O, S∩O, X∩O, X∖O, Ō, R.
constexpr int kGroupOf[6] = {0, 1, 3, 2, 4, 5};

Region region_of(VertexId v, const VertexSet& s, const VertexSet& x, const VertexSet& o) {
  const bool in_o = o.contains(v);
  if (s.contains(v)) return in_o ? kSO : kSN;
  if (x.contains(v)) return in_o ? kXO : kXN;
  return in_o ? kOB : kR;
}

std::vector<Region> regions(const BipartiteGraph& g, const PartitionLayout& l) {
  std::vector<Region> out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out[v] = g.side_of(v) == Side::kFirst ? region_of(v, l.s1, l.x1, l.o1)
                                          : region_of(v, l.s2, l.x2, l.o2);
  }
  return out;
}

std::array<double, 6> realized(const ExtractedConfig& e, const VertexSet& separation,
                               Side separated) {
  const BipartiteGraph& g = e.graph;
  const auto reg = regions(g, e.layout);
  const PartitionLayout& l = e.layout;
  const VertexSet& s = separated == Side::kFirst ? l.s1 : l.s2;
  const VertexSet& x = separated == Side::kFirst ? l.x1 : l.x2;
  std::array<double, 6> total{}, hit{};
  for (const Edge& ed : g.edges()) {
    const VertexId u = g.global_id(Side::kFirst, ed.u);
    const VertexId w = g.global_id(Side::kSecond, ed.v);
    const VertexId near = separated == Side::kFirst ? u : w;
    const VertexId far = separated == Side::kFirst ? w : u;
    if (!s.contains(near) && !x.contains(near)) continue;
    const int grp = kGroupOf[reg[far]];
    total[grp] += 1.0;
    if (separation.contains(near)) hit[grp] += 1.0;
  }
  std::array<double, 6> out{};
  for (int i = 0; i < 6; ++i) out[i] = total[i] > 0.0 ? hit[i] / total[i] : 0.0;
  return out;
}

}  // namespace

ExtractedConfig extract_config(const BipartiteGraph& g, int k, const ExactResult& oracle) {
  if (static_cast<int>(oracle.opt_set.size()) > std::max(k, 0)) {
    throw std::invalid_argument("extract_config: oracle set larger than k");
  }
  int k1 = 0, k2 = 0;
  for (VertexId v : oracle.opt_set) {
    if (!g.valid(v)) throw std::invalid_argument("extract_config: oracle vertex out of range");
    (g.side_of(v) == Side::kFirst ? k1 : k2) += 1;
  }
  const bool swapped = k1 > k2;
  ExtractedConfig e{swapped ? g.transposed() : g, swapped, {}, {}, {}, {}};
  const VertexSet o = swapped ? g.to_transposed(oracle.opt_set) : oracle.opt_set;
  if (swapped) std::swap(k1, k2);
  if (k2 == 0) throw DegenerateConfiguration("extract_config: optimum has k2 = 0");

  const BipartiteGraph& h = e.graph;
  const VertexSet o1 = set_intersection(o, h.side_vertices(Side::kFirst));
  const VertexSet o2 = set_intersection(o, h.side_vertices(Side::kSecond));
  const int k1p = static_cast<int>(set_intersection(best_k(h, Side::kFirst, k1), o1).size());
  const int k2p = static_cast<int>(set_intersection(best_k(h, Side::kSecond, k2), o2).size());
  e.layout = make_layout(h, Guess{k1, k2, k1p, k2p, swapped});
  e.layout.o1 = o1;
  e.layout.o2 = o2;

  const auto reg = regions(h, e.layout);
  for (const Edge& ed : h.edges()) {
    const int r1 = reg[h.global_id(Side::kFirst, ed.u)];
    const int r2 = reg[h.global_id(Side::kSecond, ed.v)];
    const int cut = kCutTable[r1][r2];
    if (cut >= 0) ++e.counts[cut];
  }
  for (int i = 0; i < kNumCuts; ++i) e.raw.cuts[i] = static_cast<double>(e.counts[i]);
  e.raw.mu = static_cast<double>(k1) / k2;
  e.raw.nu = k1 > 0 ? static_cast<double>(k1p) / k1 : 0.0;
  e.raw.xi = static_cast<double>(k2p) / k2;
  e.normalized = e.raw.normalized();
  return e;
}

std::array<double, 6> realized_pi_fractions(const ExtractedConfig& e, const VertexSet& separation) {
  return realized(e, separation, Side::kFirst);
}

std::array<double, 6> realized_lambda_fractions(const ExtractedConfig& e,
                                                const VertexSet& separation) {
  return realized(e, separation, Side::kSecond);
}

}  // namespace bkvc
