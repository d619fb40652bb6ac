#pragma once

#include <span>
#include <string>
#include <vector>

#include "airylab/core.hpp"
#include "airylab/propagators.hpp"

namespace airylab {

inline constexpr int kHomogenizationThetaNodes = 256;

// chi^((xi - 1)/eps) + conj(chi^(-(xi + 1)/eps)) sampled on out_grid.
FreqProfile two_bubble(const FreqProfile& chi, double eps, const FreqGrid& out_grid);
// chi^((xi - 1)/eps) only.
FreqProfile single_bubble(const FreqProfile& chi, double eps, const FreqGrid& out_grid);

// ( sum_t w_t ( mean_theta sum_x w_x |2 Re(e^{i theta} F)|^q )^{p/q} )^{1/p}.
double homogenized_mixed_norm(const SpaceTimeField& f, const ExponentTriple& exps,
                              int theta_nodes = kHomogenizationThetaNodes);

// Mixed norm of |2 Re(e^{i(x/eps - 2t/eps^2)} F)| with F the kernel's field,
// evaluated on `grid` (which must resolve the modulation).
double oscillatory_mixed_norm(const ExtensionKernel& k, const ExponentTriple& exps,
                              const SpaceTimeGrid& grid, double eps);

// Same window as `base`, refined so that one modulation period in x
// (2 pi eps) and in t (pi eps^2) spans at least `points_per_period` steps.
SpaceTimeGrid modulation_grid(const SpaceTimeGrid& base, double eps, int points_per_period);

enum class BubblePath { substituted, direct };

struct BubbleSweepConfig {
  // Window in the rescaled variables (t eps^2 -> t, eps(x + 3t) -> x).
  SpaceTimeGrid window = SpaceTimeGrid::centered(1.0, 129, 24.0, 193);
  int points_per_period = 12;
  BubblePath path = BubblePath::substituted;
  // Direct path only: node counts of the original-variable grid, and the
  // frequency step of the bubble profile as a fraction of eps.
  std::size_t direct_nt = 513;
  std::size_t direct_nx = 2049;
  double direct_step_fraction = 1.0 / 32.0;
};

struct BubbleRow {
  double eps;
  double quotient_two;
  double quotient_one;
  double target_two;
  double target_one;
  double rel_err_two;
  double rel_err_one;
};

// Rescaled bubble quotients, normalised by the profile masses.
double substituted_two_bubble_quotient(const FreqProfile& chi, const ExponentTriple& exps,
                                       double eps, const BubbleSweepConfig& cfg);
double substituted_single_bubble_quotient(const FreqProfile& chi, const ExponentTriple& exps,
                                          double eps, const BubbleSweepConfig& cfg);

std::vector<BubbleRow> bubble_sweep(const FreqProfile& chi, const ExponentTriple& exps,
                                    std::span<const double> eps_list,
                                    const BubbleSweepConfig& cfg = {});

std::string bubble_sweep_csv(std::span<const BubbleRow> rows);

}  // namespace airylab
