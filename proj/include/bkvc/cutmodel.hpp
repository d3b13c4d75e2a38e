#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bkvc/bigraph.hpp"
#include "bkvc/covers.hpp"
#include "bkvc/exact.hpp"

namespace bkvc {

// The 35 relevant cuts between the regions S∩O, S∖O, X∩O, X∖O, Ō = O∖(S∪X)
// and the rest R of each color class. Index order is the storage order.
enum class Cut : int {
  B, C, F1, F2, F3, H1, H2,
  I1, I2, I3, I4, I5, I6,
  J1, J2, J3,
  L1, L2, L3, L4, L5, L6, L7, L8, L9,
  N1, N2,
  P1, P2, P3, P4, P5,
  U1, U2, U3,
};

inline constexpr int kNumCuts = 35;

inline constexpr std::array<std::string_view, kNumCuts> kCutNames = {
    "B",  "C",  "F1", "F2", "F3", "H1", "H2", "I1", "I2", "I3", "I4", "I5",
    "I6", "J1", "J2", "J3", "L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8",
    "L9", "N1", "N2", "P1", "P2", "P3", "P4", "P5", "U1", "U2", "U3"};

// A point of the worst-case configuration space: cut magnitudes, the shape
// parameters mu = k1/k2, nu = k1'/k1, xi = k2'/k2, the separation parameters
// pi / lambda, and the per-group covered fractions of both separations.
struct Configuration {
  std::array<double, kNumCuts> cuts{};
  double mu = 1.0;
  double nu = 0.0;
  double xi = 0.0;
  double pi = 1e-5;
  double lambda = 1e-5;
  std::array<double, 6> pi_frac{};
  std::array<double, 6> lambda_frac{};

  double& operator[](Cut c) { return cuts[static_cast<int>(c)]; }
  double operator[](Cut c) const { return cuts[static_cast<int>(c)]; }

  // Copy with every cut multiplied by t; shape and fractions untouched.
  Configuration scaled(double t) const;
  // Copy with cuts divided by their maximum (unchanged if all are zero).
  Configuration normalized() const;
};

class DegenerateConfiguration : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct DeltaQuantities {
  double dS1 = 0, dS2 = 0, dX1 = 0, dX2 = 0, dO1 = 0, dO2 = 0, opt = 0;
};

DeltaQuantities delta_quantities(const Configuration& c);

// Edges between S1 ∪ X1 and each region of V2 (S∖O, S∩O, X∩O, X∖O, Ō, R).
std::array<double, 6> pi_groups(const Configuration& c);
// Edges between S2 ∪ X2 and each region of V1, same region order.
std::array<double, 6> lambda_groups(const Configuration& c);

struct ConstraintSlack {
  int id = 0;  // 1..10 degree/average inequalities, 11/12 separations, 13 lambda range
  std::string_view label;
  double slack = 0.0;  // lhs - rhs
};

struct ConstraintViolations {
  std::vector<ConstraintSlack> slacks;
  bool feasible = true;  // every slack >= -tol
  double worst = 0.0;    // most negative slack (0 if none negative)
};

inline constexpr int kNumConstraints = 13;

// Slack of every constraint in id order (index = id - 1). Inequalities whose
// coefficients divide by (1 - nu) or (1 - xi) switch to their multiplied-out
// limit form once the denominator drops below 1e-9.
std::array<double, kNumConstraints> constraint_slacks(const Configuration& c);
ConstraintViolations check_constraints(const Configuration& c, double tol);

enum class FractionMode {
  kCapped,   // every completion fraction is clamped to [0, 1] (default)
  kLiteral,  // fractions exactly as in the closed forms; only denominators guarded
};

struct RatioOptions {
  FractionMode fractions = FractionMode::kCapped;
  int ratio_count = 6;  // 4 drops the two vertical-separation ratios
};

// Branch bits: which case of a case-split ratio contributed.
enum BranchBits : unsigned {
  kR4Small = 1u << 0,      // mu <= 1 - xi
  kR4Large = 1u << 1,      // mu >= 1 - xi
  kR5Z = 1u << 2,
  kR5Theta = 1u << 3,
  kR5Phi = 1u << 4,
  kR6Upsilon = 1u << 5,
  kR6Psi = 1u << 6,
  kR6Omega = 1u << 7,
};

struct RatioReport {
  std::array<double, 6> r{};
  std::array<double, 6> numerator{};  // r[i] * opt
  double opt = 0.0;
  double best = 0.0;
  int argbest = 1;
  unsigned branches = 0;
  int ratio_count = 6;

  std::array<double, 3> a{}, b{}, c{};
  std::array<double, 5> m{};
  std::array<double, 6> pi_group{}, lambda_group{};
  double separation5 = 0.0, separation6 = 0.0;  // Σ πi Πi, Σ λi Λi
  std::array<double, 5> z{}, phi{}, upsilon{}, omega{};
  std::array<double, 3> theta{}, psi{};
  double z_star = 0, theta_star = 0, phi_star = 0;
  double upsilon_star = 0, psi_star = 0, omega_star = 0;

  // Flattened (name, value) view of every intermediate, for reports.
  std::vector<std::pair<std::string, double>> named() const;
};

// Evaluates r1..r6. Throws DegenerateConfiguration when opt <= 0 and
// std::invalid_argument for non-finite input or negative pi / lambda.
RatioReport eval_ratios(const Configuration& c, double pi, double lambda,
                        const RatioOptions& options = {});
inline RatioReport eval_ratios(const Configuration& c, const RatioOptions& options = {}) {
  return eval_ratios(c, c.pi, c.lambda, options);
}

// Cut counts of a concrete graph for the oracle's optimum.
struct ExtractedConfig {
  BipartiteGraph graph;      // oriented so that k1 <= k2 (transposed when swapped)
  bool swapped = false;
  PartitionLayout layout;    // with o1, o2 filled from the oracle
  std::array<std::int64_t, kNumCuts> counts{};
  Configuration raw;         // integer counts as doubles
  Configuration normalized;  // raw / max cut
};

// Throws DegenerateConfiguration when the optimum has no vertex in the
// larger part (k2 = 0).
ExtractedConfig extract_config(const BipartiteGraph& g, int k, const ExactResult& oracle);

// Fraction of each pi group (resp. lambda group) covered by `separation`,
// a subset of S1 ∪ X1 (resp. S2 ∪ X2) of the extracted layout. Empty groups
// report 0.
std::array<double, 6> realized_pi_fractions(const ExtractedConfig& e, const VertexSet& separation);
std::array<double, 6> realized_lambda_fractions(const ExtractedConfig& e,
                                                const VertexSet& separation);

}  // namespace bkvc
