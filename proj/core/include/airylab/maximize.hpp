#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "airylab/core.hpp"
#include "airylab/propagators.hpp"

namespace airylab {

enum class Objective { airy_critical, airy_subcritical, schrodinger };

std::string to_string(Objective o);
// Accepts "airy-critical", "airy-subcritical", "schrodinger".
Objective parse_objective(const std::string& s);

// Raised when the objective turns NaN or infinite mid-run.
struct NonFiniteObjective : NumericalFailure {
  using NumericalFailure::NumericalFailure;
};

struct AscentConfig {
  int max_iters = 400;
  double initial_step = 0.5;
  double backtrack = 0.5;
  double stall_tol = 1e-7;
  int stall_window = 20;
  int restarts = 3;
  bool real_constraint = false;
  Objective objective = Objective::airy_critical;
  // Only read for airy_subcritical; exponents come from the caller.
  double gamma = 0.0;
  std::uint64_t seed = 1;

  void validate() const;
};

// Kernel of the objective with unit samples: coeff holds the quadrature and
// multiplier weight of each node, node the node index.
ExtensionKernel unit_kernel(const FreqGrid& grid, Objective objective, const ExponentTriple& exps);

// Quotient ||F||^p / mass^{p/2} for the chosen objective.
double objective_quotient(const FreqProfile& u, Objective objective, const ExponentTriple& exps,
                          const SpaceTimeGrid& grid);

struct QuotientGradient {
  double quotient;
  // d(log quotient)/d Re u_j + i d(log quotient)/d Im u_j.
  FreqProfile gradient;
};

QuotientGradient quotient_gradient(const FreqProfile& u, Objective objective,
                                   const ExponentTriple& exps, const SpaceTimeGrid& grid);

struct AscentResult {
  FreqProfile best_profile;
  double best_quotient;
  std::vector<double> history;  // quotient after each iteration, history[0] at the start
  bool converged;
  int iterations;
};

AscentResult ascend(const FreqProfile& u0, const AscentConfig& cfg, const ExponentTriple& exps,
                    const SpaceTimeGrid& grid);

// Initialisation menu.
enum class InitKind { gaussian, two_bubble, random };
std::string to_string(InitKind k);
FreqProfile initial_profile(InitKind kind, const FreqGrid& grid, std::uint64_t seed);

struct GaussianTrial {
  double quotient;
  double width;
};

// Best schrodinger quotient over centred Gaussians exp(-xi^2/(2 s^2)) with s
// on a geometric ladder.
GaussianTrial gaussian_trial(const ExponentTriple& exps, const FreqGrid& fgrid,
                             const SpaceTimeGrid& grid, int widths = 25);

// Steps keep |F|^6 alias-free for |xi| <= 3.5: dx <= pi/(3 xi_max) and dt
// below the fastest temporal beat. The schrodinger window holds > 99% of the
// best Gaussian's norm.
struct ThresholdGrids {
  FreqGrid freq{-3.5, 3.5, 193};
  SpaceTimeGrid airy = SpaceTimeGrid::centered(4.0, 337, 70.0, 467);
  SpaceTimeGrid schrodinger = SpaceTimeGrid::centered(11.0, 385, 70.0, 467);
};

struct RunSummary {
  Objective objective;
  InitKind init;
  std::uint64_t seed;
  double quotient;
  bool converged;
  int iterations;
  std::vector<double> history;
};

struct ThresholdReport {
  double p;
  double q;
  double A_p_est;
  double S_p_est;
  double S_p_gaussian;
  double a_p_exact;
  double margin;
  bool airy_converged;
  bool schrodinger_converged;
  std::string verdict;
  std::string caveats;
  std::vector<RunSummary> runs;
};

ThresholdReport threshold_report(const ExponentTriple& exps, const AscentConfig& cfg,
                                 const ThresholdGrids& grids = {});

}  // namespace airylab
