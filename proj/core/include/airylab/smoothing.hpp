#pragma once

#include <functional>
#include <span>

#include "airylab/core.hpp"

namespace airylab {

struct SmoothingValue {
  double lhs;  // sum_t w_t sum_x w_x a(x) ||D_x| e^{-t d^3} u|^2
  double rhs;  // ||a||_1 * l2_mass(u) / 3
  [[nodiscard]] double ratio() const { return rhs == 0.0 ? 1.0 : lhs / rhs; }
};

// `a_weight` holds a(x) at the grid's x nodes.
SmoothingValue local_smoothing_value(const FreqProfile& u, std::span<const double> a_weight,
                                     const SpaceTimeGrid& grid);

struct AdaptiveSmoothing {
  SmoothingValue value;
  double t_half;
  int doublings;
  double last_shell_fraction;
  bool converged;
};

// Doubles the t-window (same step) until the newest shell adds less than
// `tol` of lhs.
AdaptiveSmoothing local_smoothing_adaptive(const FreqProfile& u,
                                           const std::function<double(double)>& a,
                                           const SpaceTimeGrid& start, double tol = 0.005,
                                           int max_doublings = 6);

// The root y != eta of 3y^2 + y^3 = 3 eta^2 + eta^3 with eta y < 0, for
// eta in [-1, sqrt(3) - 1] minus {0}.
double conjugate_root(double eta);

struct SchurSup {
  double numerical_sup;
  double argmax;
  double proven_bound;
  double max_residual;  // max |g(y) - g(eta)| over the scan
};

SchurSup schur_sup_bound(std::size_t points = 10000);

// |xi|^{1/2} / |1 + delta xi|^{1/p}.
double f_delta(double xi, double delta, double p);

}  // namespace airylab
