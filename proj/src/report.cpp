#include "bkvc/report.hpp"

#include <algorithm>
#include <cstdio>

namespace bkvc {

namespace {

std::string num(double x, const char* format = "%.5f") {
  char buf[48];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string branch_names(unsigned b) {
  std::string out;
  auto add = [&](unsigned bit, const char* name) {
    if (!(b & bit)) return;
    if (!out.empty()) out += ' ';
    out += name;
  };
  add(kR4Small, "r4:mu<=1-xi");
  add(kR4Large, "r4:mu>=1-xi");
  add(kR5Z, "r5:Z");
  add(kR5Theta, "r5:Theta");
  add(kR5Phi, "r5:Phi");
  add(kR6Upsilon, "r6:Upsilon");
  add(kR6Psi, "r6:Psi");
  add(kR6Omega, "r6:Omega");
  return out;
}

}  // namespace

std::string format_configuration_table(const Configuration& c, const RatioReport& r) {
  using Cell = std::pair<std::string, std::string>;
  std::vector<Cell> vars, groups, seps, ratios;
  for (int i = 0; i < kNumCuts; ++i) vars.emplace_back(std::string(kCutNames[i]), num(c.cuts[i], "%.4f"));
  vars.emplace_back("mu", num(c.mu, "%.4f"));
  vars.emplace_back("nu", num(c.nu, "%.4f"));
  vars.emplace_back("xi", num(c.xi, "%.4f"));

  const DeltaQuantities d = delta_quantities(c);
  groups = {{"d(S1)", num(d.dS1)}, {"d(S2)", num(d.dS2)}, {"d(X1)", num(d.dX1)},
            {"d(X2)", num(d.dX2)}, {"d(O1)", num(d.dO1)}, {"d(O2)", num(d.dO2)},
            {"d(OPT)", num(d.opt, "%.4f")}};

  seps.emplace_back("pi", num(c.pi, "%g"));
  for (int i = 0; i < 6; ++i) seps.emplace_back("pi" + std::to_string(i + 1), num(c.pi_frac[i]));
  seps.emplace_back("", "");
  seps.emplace_back("lambda", num(c.lambda, "%g"));
  for (int i = 0; i < 6; ++i) {
    seps.emplace_back("lambda" + std::to_string(i + 1), num(c.lambda_frac[i]));
  }

  for (int i = 0; i < 6; ++i) {
    std::string v = num(r.r[i]);
    if (i >= r.ratio_count) v += " (off)";
    ratios.emplace_back("r" + std::to_string(i + 1), v);
  }
  ratios.emplace_back("best", num(r.best));
  ratios.emplace_back("argbest", std::to_string(r.argbest));

  std::string out = pad("Variables", 10) + pad("Values", 9) + "| " + pad("Groups", 8) +
                    pad("Values", 10) + "| " + pad("pi,lambda", 10) + pad("Values", 10) + "| " +
                    pad("Ratios", 9) + "Values\n";
  out += std::string(92, '-') + "\n";
  const std::size_t rows = std::max({vars.size(), groups.size(), seps.size(), ratios.size()});
  auto cell = [](const std::vector<Cell>& col, std::size_t i, std::size_t w1, std::size_t w2) {
    if (i >= col.size()) return pad("", w1 + w2);
    return pad(col[i].first, w1) + pad(col[i].second, w2);
  };
  for (std::size_t i = 0; i < rows; ++i) {
    std::string line = cell(vars, i, 10, 9) + "| " + cell(groups, i, 8, 10) + "| " +
                       cell(seps, i, 10, 10) + "| " + cell(ratios, i, 9, 16);
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

std::string format_intermediates(const RatioReport& r) {
  std::string out;
  for (const auto& [name, value] : r.named()) out += pad(name, 18) + num(value, "%.6f") + "\n";
  out += "branches: " + branch_names(r.branches) + "\n";
  return out;
}

std::string format_constraints(const ConstraintViolations& v) {
  std::string out;
  for (const auto& s : v.slacks) {
    out += pad(std::to_string(s.id), 4) + pad(std::string(s.label), 46) + num(s.slack, "%+.6e") +
           "\n";
  }
  out += std::string("feasible: ") + (v.feasible ? "yes" : "no") + "\n";
  return out;
}

std::string format_run(const OptimizerRun& run) {
  const OptimizerSettings& s = run.settings;
  int feasible = 0, converged = 0;
  for (const auto& r : run.restarts) {
    feasible += r.result.feasible;
    converged += r.result.converged;
  }
  std::string out;
  out += "pi = " + num(s.pi, "%g") + ", lambda = " + num(s.lambda, "%g") +
         ", restarts = " + std::to_string(s.restarts) + ", seed = " + std::to_string(s.seed) +
         ", fractions = " + std::to_string(s.fraction_vars) +
         ", ratios = " + std::to_string(s.ratio_count) + "\n";
  out += "feasible restarts: " + std::to_string(feasible) + ", converged: " +
         std::to_string(converged) + "\n";
  out += "best_value: " + num(run.best_value, "%.6f") + " (restart " +
         std::to_string(run.best_restart) + (run.best_feasible ? "" : ", INFEASIBLE") + ")\n\n";
  RatioOptions o;
  o.fractions = s.fractions;
  o.ratio_count = s.ratio_count;
  if (delta_quantities(run.best_config).opt > 0.0) {
    out += format_configuration_table(run.best_config, eval_ratios(run.best_config, o));
  }
  return out;
}

std::string format_sweep(const std::vector<SweepRow>& rows) {
  std::string out = pad("pi", 12) + pad("lambda", 12) + pad("ratio", 12) + "argbest\n";
  out += std::string(44, '-') + "\n";
  for (const auto& r : rows) {
    std::string line = r.ablation ? pad("-", 12) + pad("-", 12)
                                  : pad(num(r.pi, "%g"), 12) + pad(num(r.lambda, "%g"), 12);
    line += pad(num(r.best_value, "%.6f") + (r.feasible ? "" : "*"), 12) +
            std::to_string(r.argbest);
    out += line + "\n";
  }
  return out;
}

}  // namespace bkvc
