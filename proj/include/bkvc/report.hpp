#pragma once

#include <string>
#include <vector>

#include "bkvc/cutmodel.hpp"
#include "bkvc/optimizer.hpp"

namespace bkvc {

// Four column pairs: variables, delta groups, separation fractions, ratios.
std::string format_configuration_table(const Configuration& c, const RatioReport& r);

// Every intermediate of the report, one `name value` per line, plus branches.
std::string format_intermediates(const RatioReport& r);

std::string format_constraints(const ConstraintViolations& v);

// Summary of a multistart run followed by the table of its best point.
std::string format_run(const OptimizerRun& run);

struct SweepRow {
  bool ablation = false;  // r5 and r6 disabled; pi / lambda unused
  double pi = 0.0;
  double lambda = 0.0;
  double best_value = 0.0;
  bool feasible = false;
  int argbest = 0;
};

std::string format_sweep(const std::vector<SweepRow>& rows);

}  // namespace bkvc
