#include "airylab/smoothing.hpp"

#include <cmath>
#include <vector>

#include "airylab/norms.hpp"
#include "airylab/propagators.hpp"

namespace airylab {

namespace {

double cubic_g(double x) { return x * x * (3.0 + x); }

const double kRootMax = std::sqrt(3.0) - 1.0;

}  // namespace

SmoothingValue local_smoothing_value(const FreqProfile& u, std::span<const double> a_weight,
                                     const SpaceTimeGrid& grid) {
  if (a_weight.size() != grid.x().n) throw GridMismatch("local_smoothing_value: weight size != nx");
  for (double a : a_weight) {
    if (!(a >= 0.0)) throw DomainError("local_smoothing_value: weight must be nonnegative");
  }
  const auto xw = grid.x_weights();
  const auto tw = grid.t_weights();
  std::vector<double> ax(xw.size());
  for (std::size_t k = 0; k < ax.size(); ++k) ax[k] = xw[k] * a_weight[k];
  const double a_l1 = pairwise_sum(ax);

  std::vector<double> rows(grid.t().n);
  std::vector<double> terms(xw.size());
  stream_field(airy_kernel(u, 1.0), grid, [&](std::size_t i, std::span<const cplx> row) {
    for (std::size_t k = 0; k < row.size(); ++k) terms[k] = ax[k] * std::norm(row[k]);
    rows[i] = tw[i] * pairwise_sum(terms);
  });
  return {pairwise_sum(rows), a_l1 * l2_mass(u) / 3.0};
}

AdaptiveSmoothing local_smoothing_adaptive(const FreqProfile& u,
                                           const std::function<double(double)>& a,
                                           const SpaceTimeGrid& start, double tol, int max_doublings) {
  std::vector<double> weight(start.x().n);
  for (std::size_t k = 0; k < weight.size(); ++k) weight[k] = a(start.x().node(k));

  SpaceTimeGrid grid = start;
  SmoothingValue prev = local_smoothing_value(u, weight, grid);
  double fraction = 1.0;
  for (int d = 1; d <= max_doublings; ++d) {
    const Axis& t = grid.t();
    const double c = 0.5 * (t.min + t.max);
    const double h = 0.5 * (t.max - t.min);
    grid = SpaceTimeGrid(Axis{c - 2.0 * h, c + 2.0 * h, 2 * (t.n - 1) + 1}, grid.x(), grid.rule());
    const SmoothingValue cur = local_smoothing_value(u, weight, grid);
    fraction = cur.lhs > 0.0 ? std::abs(cur.lhs - prev.lhs) / cur.lhs : 0.0;
    prev = cur;
    if (fraction < tol) return {cur, 0.5 * (grid.t().max - grid.t().min), d, fraction, true};
  }
  return {prev, 0.5 * (grid.t().max - grid.t().min), max_doublings, fraction, false};
}

double conjugate_root(double eta) {
  if (!(eta >= -1.0 && eta <= kRootMax) || eta == 0.0) {
    throw DomainError("conjugate_root: need eta in [-1, sqrt(3)-1] without 0");
  }
  const double target = cubic_g(eta);
  // g increases on [0, sqrt3-1] and decreases on [-1, 0].
  double lo = eta < 0.0 ? 0.0 : -1.0;
  double hi = eta < 0.0 ? kRootMax : 0.0;
  const bool increasing = eta < 0.0;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const bool below = cubic_g(mid) < target;
    if (below == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double y = 0.5 * (lo + hi);
  return y == 0.0 ? (eta < 0.0 ? hi : lo) : y;
}

SchurSup schur_sup_bound(std::size_t points) {
  if (points < 2) throw DomainError("schur_sup_bound: need at least 2 points");
  SchurSup s{0.0, 0.0, 2.0, 0.0};
  const double span = kRootMax + 1.0;
  for (std::size_t i = 0; i < points; ++i) {
    const double eta = i + 1 == points ? kRootMax : -1.0 + span * static_cast<double>(i) / (points - 1);
    if (eta == 0.0) continue;
    const double y = conjugate_root(eta);
    s.max_residual = std::max(s.max_residual, std::abs(cubic_g(y) - cubic_g(eta)));
    const double r = std::abs(eta) / std::abs(y);
    if (r > s.numerical_sup) {
      s.numerical_sup = r;
      s.argmax = eta;
    }
  }
  return s;
}

double f_delta(double xi, double delta, double p) {
  const double d = 1.0 + delta * xi;
  if (d == 0.0) throw SingularPoint("f_delta: 1 + delta*xi = 0");
  return std::sqrt(std::abs(xi)) / std::pow(std::abs(d), 1.0 / p);
}

}  // namespace airylab
