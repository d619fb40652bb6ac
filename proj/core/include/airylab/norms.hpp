#pragma once

#include <limits>
#include <span>
#include <vector>

#include "airylab/core.hpp"
#include "airylab/propagators.hpp"

namespace airylab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Streams rows of |F| and accumulates sum_t w_t (sum_x w_x |F|^q)^{p/q}.
// q may be +inf (max over x).
class MixedNormAccumulator {
 public:
  MixedNormAccumulator(const SpaceTimeGrid& grid, double p, double q);

  void add_row(std::size_t i, std::span<const double> modulus);
  void add_row(std::size_t i, std::span<const cplx> values);

  // mixed_norm^p.
  [[nodiscard]] double power() const;
  [[nodiscard]] double norm() const;
  // Inner x-integrals A_t (or max_x |F| when q is infinite).
  [[nodiscard]] std::span<const double> inner() const { return inner_; }

 private:
  double p_;
  double q_;
  std::vector<double> tw_;
  std::vector<double> xw_;
  std::vector<double> inner_;
  std::vector<double> scratch_;
};

double mixed_norm(const SpaceTimeField& f, double p, double q);
// mixed_norm^p, avoiding a root and a power round trip.
double mixed_norm_power(const SpaceTimeField& f, double p, double q);
// Norm^p of a kernel's field without materialising it.
double kernel_norm_power(const ExtensionKernel& k, const SpaceTimeGrid& grid, double p, double q);

double airy_quotient(const FreqProfile& u, const ExponentTriple& exps, const SpaceTimeGrid& grid);
double schrodinger_quotient(const FreqProfile& u, const ExponentTriple& exps,
                            const SpaceTimeGrid& grid);

struct TriangleCheck {
  double lhs;
  double rhs;
  double beta;
};

TriangleCheck mixed_triangle_check(const SpaceTimeField& f, const SpaceTimeField& g, double p,
                                   double q);

// Doubles [-T,T] x [-X,X] at fixed step until the newest shell adds less than
// `tol` of the norm^p.
struct AdaptiveResult {
  double power;
  SpaceTimeGrid grid;
  int doublings;
  double last_shell_fraction;
  bool converged;
};

AdaptiveResult adaptive_norm_power(const ExtensionKernel& k, const SpaceTimeGrid& start, double p,
                                   double q, double tol = 1e-4, int max_doublings = 4);

SpaceTimeGrid doubled(const SpaceTimeGrid& g);

}  // namespace airylab
