#include "airylab/propagators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

namespace airylab {

namespace {

using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

// |s|^gamma with 0^gamma = 0 (gamma > 0), 0^0 = 1. Returns false when the
// node must be dropped (s = 0 with gamma < 0).
bool power_weight(double s, double gamma, double& out) {
  if (s == 0.0) {
    if (gamma < 0.0) return false;
    out = gamma == 0.0 ? 1.0 : 0.0;
    return true;
  }
  out = gamma == 0.0 ? 1.0 : std::pow(std::abs(s), gamma);
  return true;
}

template <class Weight, class Phase>
ExtensionKernel build_kernel(const FreqProfile& u, Weight&& weight, Phase&& phase) {
  ExtensionKernel k;
  const auto& g = u.grid();
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] == cplx{}) continue;
    const double xi = g.node(j);
    double w = 0.0;
    if (!weight(xi, w)) continue;
    k.freq.push_back(xi);
    k.time_phase.push_back(phase(xi));
    k.coeff.push_back(kInvSqrt2Pi * g.weight(j) * w * u[j]);
    k.node.push_back(j);
  }
  return k;
}

Eigen::MatrixXcd space_phases(const ExtensionKernel& k, const Axis& x) {
  const std::size_t m = k.size();
  Eigen::MatrixXcd e(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(x.n));
  for (std::size_t c = 0; c < x.n; ++c) {
    const double xc = x.node(c);
    for (std::size_t j = 0; j < m; ++j) {
      e(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(c)) = std::polar(1.0, xc * k.freq[j]);
    }
  }
  return e;
}

std::size_t block_rows(const SpaceTimeGrid& grid) {
  const std::size_t budget = std::size_t{1} << 20;
  return std::clamp<std::size_t>(budget / grid.x().n, 1, grid.t().n);
}

}  // namespace

ExtensionKernel airy_kernel(const FreqProfile& u, double gamma) {
  if (!(gamma > -0.5)) throw DomainError("airy_extension: need gamma > -1/2");
  return build_kernel(
      u, [gamma](double xi, double& w) { return power_weight(xi, gamma, w); },
      [](double xi) { return xi * xi * xi; });
}

ExtensionKernel schrodinger_kernel(const FreqProfile& u) {
  return build_kernel(
      u,
      [](double, double& w) {
        w = 1.0;
        return true;
      },
      [](double xi) { return 3.0 * xi * xi; });
}

ExtensionKernel approx_kernel(const FreqProfile& u, double gamma, double delta) {
  std::vector<std::size_t> bad;
  const auto& g = u.grid();
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] != cplx{} && 1.0 + delta * g.node(j) < 0.0) bad.push_back(j);
  }
  if (!bad.empty()) {
    const std::string msg = "approx_extension: 1 + delta*xi < 0 at " + std::to_string(bad.size()) +
                            " nonzero node(s), first index " + std::to_string(bad.front());
    throw SupportViolation(msg, std::move(bad));
  }
  return build_kernel(
      u, [gamma, delta](double xi, double& w) { return power_weight(1.0 + delta * xi, gamma, w); },
      [delta](double xi) { return 3.0 * xi * xi + delta * xi * xi * xi; });
}

void stream_field(const ExtensionKernel& k, const SpaceTimeGrid& grid, const RowSink& sink) {
  const std::size_t nt = grid.t().n;
  const std::size_t nx = grid.x().n;
  const std::size_t m = k.size();
  if (m == 0) {
    const std::vector<cplx> zero(nx);
    for (std::size_t i = 0; i < nt; ++i) sink(i, zero);
    return;
  }
  const Eigen::MatrixXcd e = space_phases(k, grid.x());
  const std::size_t block = block_rows(grid);
  RowMat a;
  RowMat r;
  for (std::size_t i0 = 0; i0 < nt; i0 += block) {
    const std::size_t b = std::min(block, nt - i0);
    a.resize(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < b; ++i) {
      const double t = grid.t().node(i0 + i);
      for (std::size_t j = 0; j < m; ++j) {
        a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            k.coeff[j] * std::polar(1.0, t * k.time_phase[j]);
      }
    }
    r.noalias() = a * e;
    for (std::size_t i = 0; i < b; ++i) {
      sink(i0 + i, std::span<const cplx>(r.data() + i * nx, nx));
    }
  }
}

SpaceTimeField evaluate(const ExtensionKernel& k, const SpaceTimeGrid& grid) {
  const std::size_t nx = grid.x().n;
  std::vector<cplx> values(grid.t().n * nx);
  stream_field(k, grid, [&](std::size_t i, std::span<const cplx> row) {
    std::copy(row.begin(), row.end(), values.begin() + static_cast<std::ptrdiff_t>(i * nx));
  });
  return {grid, std::move(values)};
}

std::vector<cplx> adjoint_phase_sum(const ExtensionKernel& k, const SpaceTimeGrid& grid,
                                    std::span<const cplx> h) {
  const std::size_t nt = grid.t().n;
  const std::size_t nx = grid.x().n;
  const std::size_t m = k.size();
  if (h.size() != nt * nx) throw GridMismatch("adjoint_phase_sum: array size != nt * nx");
  std::vector<cplx> out(m);
  if (m == 0) return out;
  const Eigen::MatrixXcd e = space_phases(k, grid.x());
  const std::size_t block = block_rows(grid);
  RowMat m1;
  for (std::size_t i0 = 0; i0 < nt; i0 += block) {
    const std::size_t b = std::min(block, nt - i0);
    Eigen::Map<const RowMat> hb(h.data() + i0 * nx, static_cast<Eigen::Index>(b),
                                static_cast<Eigen::Index>(nx));
    m1.noalias() = hb * e.adjoint();
    for (std::size_t i = 0; i < b; ++i) {
      const double t = grid.t().node(i0 + i);
      for (std::size_t j = 0; j < m; ++j) {
        out[j] += std::polar(1.0, -t * k.time_phase[j]) *
                  m1(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  return out;
}

SpaceTimeField airy_extension(const FreqProfile& u, double gamma, const SpaceTimeGrid& grid) {
  return evaluate(airy_kernel(u, gamma), grid);
}

SpaceTimeField schrodinger_extension(const FreqProfile& u, const SpaceTimeGrid& grid) {
  return evaluate(schrodinger_kernel(u), grid);
}

SpaceTimeField approx_extension(const FreqProfile& u, double gamma, double delta,
                                const SpaceTimeGrid& grid) {
  return evaluate(approx_kernel(u, gamma, delta), grid);
}

FreqProfile restrict_frequency(const FreqProfile& u, Interval I) {
  std::vector<cplx> s(u.samples().begin(), u.samples().end());
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double xi = u.grid().node(j);
    if (!(xi >= I.lo && xi < I.hi)) s[j] = 0.0;
  }
  return {u.grid(), std::move(s)};
}

namespace {

void check_lambda(const SymmetryElement& g) {
  if (!(g.lambda0 > 0.0) || !std::isfinite(g.lambda0)) {
    throw DomainError("apply_symmetry: lambda0 must be positive");
  }
}

cplx symmetry_factor(const SymmetryElement& g, double xi_pre) {
  return std::polar(1.0 / std::sqrt(g.lambda0), g.x0 * xi_pre + g.t0 * xi_pre * xi_pre * xi_pre);
}

}  // namespace

FreqProfile apply_symmetry(const SymmetryElement& g, const FreqProfile& u) {
  check_lambda(g);
  const auto& in = u.grid();
  FreqGrid out(g.lambda0 * in.xi_min(), g.lambda0 * in.xi_max(), in.size());
  std::vector<cplx> s(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) s[j] = symmetry_factor(g, in.node(j)) * u[j];
  return {out, std::move(s)};
}

FreqProfile apply_symmetry(const SymmetryElement& g, const FreqProfile& u, const FreqGrid& out_grid) {
  check_lambda(g);
  const auto& in = u.grid();
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] == cplx{}) continue;
    const double image = g.lambda0 * in.node(j);
    const double slack = 1e-12 * std::max(1.0, std::abs(image));
    if (image < out_grid.xi_min() - slack || image > out_grid.xi_max() + slack) {
      throw WindowOverflow("apply_symmetry: dilated support leaves the output window");
    }
  }
  std::vector<cplx> s(out_grid.size());
  for (std::size_t j = 0; j < out_grid.size(); ++j) {
    const double pre = out_grid.node(j) / g.lambda0;
    const double r = (pre - in.xi_min()) / in.step();
    if (r < -1e-9 || r > static_cast<double>(in.size() - 1) + 1e-9) continue;
    const double rr = std::round(r);
    cplx v;
    if (std::abs(r - rr) <= 1e-9) {
      v = u[static_cast<std::size_t>(rr)];
    } else {
      const auto lo = static_cast<std::size_t>(std::floor(r));
      const double f = r - static_cast<double>(lo);
      v = (1.0 - f) * u[lo] + f * u[lo + 1];
    }
    s[j] = symmetry_factor(g, pre) * v;
  }
  return {out_grid, std::move(s)};
}

SpaceTimeGrid pullback(const SpaceTimeGrid& grid, const SymmetryElement& g) {
  check_lambda(g);
  const double l3 = g.lambda0 * g.lambda0 * g.lambda0;
  const Axis& t = grid.t();
  const Axis& x = grid.x();
  return {Axis{(t.min - g.t0) / l3, (t.max - g.t0) / l3, t.n},
          Axis{(x.min - g.x0) / g.lambda0, (x.max - g.x0) / g.lambda0, x.n}, grid.rule()};
}

std::pair<FreqProfile, FreqProfile> symmetrize_real(const FreqProfile& u) {
  if (!u.grid().symmetric()) throw GridAsymmetry("symmetrize_real: grid must be symmetric with odd n");
  const std::size_t n = u.size();
  std::vector<cplx> f1(n);
  std::vector<cplx> f2(n);
  const cplx two_i(0.0, 2.0);
  for (std::size_t j = 0; j < n; ++j) {
    const cplx mirror = std::conj(u[n - 1 - j]);
    f1[j] = 0.5 * (u[j] + mirror);
    f2[j] = (u[j] - mirror) / two_i;
  }
  return {FreqProfile(u.grid(), std::move(f1)), FreqProfile(u.grid(), std::move(f2))};
}

}  // namespace airylab
