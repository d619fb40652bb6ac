#include "airylab/norms.hpp"

#include <algorithm>
#include <cmath>

namespace airylab {

namespace {

void check_exponents(double p, double q) {
  if (!(p > 0.0) || !std::isfinite(p) || !(q > 0.0)) {
    throw DomainError("mixed_norm: need finite p > 0 and q > 0");
  }
}

double positive_mass(const FreqProfile& u, const char* who) {
  const double m = l2_mass(u);
  if (!(m > 0.0)) throw DomainError(std::string(who) + ": zero profile");
  return m;
}

}  // namespace

MixedNormAccumulator::MixedNormAccumulator(const SpaceTimeGrid& grid, double p, double q)
    : p_(p), q_(q), tw_(grid.t_weights()), xw_(grid.x_weights()), inner_(grid.t().n, 0.0),
      scratch_(grid.x().n) {
  check_exponents(p, q);
}

void MixedNormAccumulator::add_row(std::size_t i, std::span<const double> modulus) {
  if (std::isinf(q_)) {
    double m = 0.0;
    for (double a : modulus) m = std::max(m, a);
    inner_[i] = m;
    return;
  }
  for (std::size_t k = 0; k < modulus.size(); ++k) {
    const double a = modulus[k];
    scratch_[k] = a == 0.0 ? 0.0 : xw_[k] * std::pow(a, q_);
  }
  inner_[i] = pairwise_sum(scratch_);
}

void MixedNormAccumulator::add_row(std::size_t i, std::span<const cplx> values) {
  std::vector<double> mod(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) mod[k] = std::abs(values[k]);
  add_row(i, mod);
}

double MixedNormAccumulator::power() const {
  std::vector<double> terms(inner_.size());
  const double e = std::isinf(q_) ? p_ : p_ / q_;
  for (std::size_t i = 0; i < inner_.size(); ++i) {
    terms[i] = inner_[i] == 0.0 ? 0.0 : tw_[i] * std::pow(inner_[i], e);
  }
  return pairwise_sum(terms);
}

double MixedNormAccumulator::norm() const { return std::pow(power(), 1.0 / p_); }

double mixed_norm_power(const SpaceTimeField& f, double p, double q) {
  MixedNormAccumulator acc(f.grid(), p, q);
  for (std::size_t i = 0; i < f.nt(); ++i) acc.add_row(i, f.row(i));
  return acc.power();
}

double mixed_norm(const SpaceTimeField& f, double p, double q) {
  return std::pow(mixed_norm_power(f, p, q), 1.0 / p);
}

double kernel_norm_power(const ExtensionKernel& k, const SpaceTimeGrid& grid, double p, double q) {
  MixedNormAccumulator acc(grid, p, q);
  stream_field(k, grid, [&](std::size_t i, std::span<const cplx> row) { acc.add_row(i, row); });
  return acc.power();
}

double airy_quotient(const FreqProfile& u, const ExponentTriple& exps, const SpaceTimeGrid& grid) {
  const double m = positive_mass(u, "airy_quotient");
  return kernel_norm_power(airy_kernel(u, exps.gamma), grid, exps.p, exps.q) /
         std::pow(m, exps.p / 2.0);
}

double schrodinger_quotient(const FreqProfile& u, const ExponentTriple& exps,
                            const SpaceTimeGrid& grid) {
  const double m = positive_mass(u, "schrodinger_quotient");
  return kernel_norm_power(schrodinger_kernel(u), grid, exps.p, exps.q) /
         std::pow(m, exps.p / 2.0);
}

TriangleCheck mixed_triangle_check(const SpaceTimeField& f, const SpaceTimeField& g, double p,
                                   double q) {
  if (!(f.grid() == g.grid())) throw GridMismatch("mixed_triangle_check: grids differ");
  check_exponents(p, q);
  const double beta = std::min({p, q, 1.0});
  const double lhs = std::pow(mixed_norm(f + g, p, q), beta);
  const double rhs = std::pow(mixed_norm(f, p, q), beta) + std::pow(mixed_norm(g, p, q), beta);
  return {lhs, rhs, beta};
}

SpaceTimeGrid doubled(const SpaceTimeGrid& g) {
  auto grow = [](const Axis& a) {
    const double c = 0.5 * (a.min + a.max);
    const double h = 0.5 * (a.max - a.min);
    return Axis{c - 2.0 * h, c + 2.0 * h, 2 * (a.n - 1) + 1};
  };
  return {grow(g.t()), grow(g.x()), g.rule()};
}

AdaptiveResult adaptive_norm_power(const ExtensionKernel& k, const SpaceTimeGrid& start, double p,
                                   double q, double tol, int max_doublings) {
  SpaceTimeGrid grid = start;
  double prev = kernel_norm_power(k, grid, p, q);
  double fraction = 1.0;
  for (int d = 1; d <= max_doublings; ++d) {
    SpaceTimeGrid next = doubled(grid);
    const double cur = kernel_norm_power(k, next, p, q);
    fraction = cur > 0.0 ? std::abs(cur - prev) / cur : 0.0;
    grid = next;
    prev = cur;
    if (fraction < tol) return {cur, grid, d, fraction, true};
  }
  return {prev, grid, max_doublings, fraction, max_doublings == 0 && prev == 0.0};
}

}  // namespace airylab
