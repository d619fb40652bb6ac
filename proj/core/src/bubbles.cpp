#include "airylab/bubbles.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "airylab/constants.hpp"
#include "airylab/io.hpp"
#include "airylab/norms.hpp"

namespace airylab {

namespace {

// Linear interpolation of the samples; zero outside the profile window.
cplx interpolate(const FreqProfile& chi, double eta) {
  const auto& g = chi.grid();
  const double r = (eta - g.xi_min()) / g.step();
  const double last = static_cast<double>(g.size() - 1);
  if (r < -1e-9 || r > last + 1e-9) return {};
  const double rr = std::round(r);
  if (std::abs(r - rr) <= 1e-9) return chi[static_cast<std::size_t>(rr)];
  const auto lo = static_cast<std::size_t>(std::floor(r));
  const double f = r - static_cast<double>(lo);
  return (1.0 - f) * chi[lo] + f * chi[lo + 1];
}

struct Support {
  double lo;
  double hi;
};

Support support_of(const FreqProfile& chi) {
  std::size_t first = chi.size();
  std::size_t last = 0;
  for (std::size_t j = 0; j < chi.size(); ++j) {
    if (chi[j] != cplx{}) {
      first = std::min(first, j);
      last = j;
    }
  }
  if (first == chi.size()) throw DomainError("bubble: zero profile");
  return {chi.grid().node(first), chi.grid().node(last)};
}

void check_bubble(const FreqProfile& chi, double eps, const FreqGrid& out, bool two) {
  if (!(eps > 0.0)) throw DomainError("bubble: need eps > 0");
  const Support s = support_of(chi);
  const double lo = 1.0 + eps * s.lo;
  const double hi = 1.0 + eps * s.hi;
  if (two && !(lo > 0.0)) throw SupportOverlap("two_bubble: rescaled supports around +1 and -1 overlap");
  const double slack = 1e-12;
  const double need_lo = two ? -hi : lo;
  if (need_lo < out.xi_min() - slack || hi > out.xi_max() + slack) {
    throw WindowOverflow("bubble: rescaled support leaves the output window");
  }
}

FreqProfile bubble(const FreqProfile& chi, double eps, const FreqGrid& out, bool two) {
  check_bubble(chi, eps, out, two);
  std::vector<cplx> s(out.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double xi = out.node(j);
    s[j] = interpolate(chi, (xi - 1.0) / eps);
    if (two) s[j] += std::conj(interpolate(chi, -(xi + 1.0) / eps));
  }
  return {out, std::move(s)};
}

void require_critical(const ExponentTriple& e, const char* who) {
  if (!e.critical()) throw DomainError(std::string(who) + ": exponent triple is not critical");
}

std::size_t refined_count(const Axis& a, double period, int ppp) {
  const double need = (a.max - a.min) / (period / ppp);
  return std::max<std::size_t>(a.n, static_cast<std::size_t>(std::ceil(need)) + 1);
}

double relative_error(double value, double target) { return std::abs(value - target) / std::abs(target); }

}  // namespace

FreqProfile two_bubble(const FreqProfile& chi, double eps, const FreqGrid& out_grid) {
  return bubble(chi, eps, out_grid, true);
}

FreqProfile single_bubble(const FreqProfile& chi, double eps, const FreqGrid& out_grid) {
  return bubble(chi, eps, out_grid, false);
}

double homogenized_mixed_norm(const SpaceTimeField& f, const ExponentTriple& exps, int theta_nodes) {
  require_critical(exps, "homogenized_mixed_norm");
  if (theta_nodes < 1) throw DomainError("homogenized_mixed_norm: need theta_nodes >= 1");
  const auto xw = f.grid().x_weights();
  const auto tw = f.grid().t_weights();
  const double q = exps.q;
  std::vector<cplx> rot(static_cast<std::size_t>(theta_nodes));
  for (int k = 0; k < theta_nodes; ++k) {
    rot[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / theta_nodes);
  }
  std::vector<double> outer(f.nt());
  std::vector<double> per_theta(rot.size());
  std::vector<double> terms(f.nx());
  for (std::size_t i = 0; i < f.nt(); ++i) {
    const auto row = f.row(i);
    for (std::size_t k = 0; k < rot.size(); ++k) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        const double v = std::abs(2.0 * (rot[k] * row[c]).real());
        terms[c] = v == 0.0 ? 0.0 : xw[c] * std::pow(v, q);
      }
      per_theta[k] = pairwise_sum(terms);
    }
    const double inner = pairwise_sum(per_theta) / static_cast<double>(rot.size());
    outer[i] = inner == 0.0 ? 0.0 : tw[i] * std::pow(inner, exps.p / q);
  }
  return std::pow(pairwise_sum(outer), 1.0 / exps.p);
}

double oscillatory_mixed_norm(const ExtensionKernel& k, const ExponentTriple& exps,
                              const SpaceTimeGrid& grid, double eps) {
  if (!(eps > 0.0)) throw DomainError("oscillatory_mixed_norm: need eps > 0");
  MixedNormAccumulator acc(grid, exps.p, exps.q);
  const auto xs = grid.x().nodes();
  std::vector<double> mod(xs.size());
  stream_field(k, grid, [&](std::size_t i, std::span<const cplx> row) {
    const double t = grid.t().node(i);
    const double tphase = std::fmod(-2.0 * t / (eps * eps), 2.0 * std::numbers::pi);
    for (std::size_t c = 0; c < row.size(); ++c) {
      const double phase = tphase + std::fmod(xs[c] / eps, 2.0 * std::numbers::pi);
      mod[c] = std::abs(2.0 * (std::polar(1.0, phase) * row[c]).real());
    }
    acc.add_row(i, mod);
  });
  return acc.norm();
}

SpaceTimeGrid modulation_grid(const SpaceTimeGrid& base, double eps, int points_per_period) {
  if (!(eps > 0.0) || points_per_period < 2) throw DomainError("modulation_grid: bad parameters");
  std::size_t nt = refined_count(base.t(), std::numbers::pi * eps * eps, points_per_period);
  std::size_t nx = refined_count(base.x(), 2.0 * std::numbers::pi * eps, points_per_period);
  if (base.rule() == Quadrature::simpson) {
    nt += (nt % 2 == 0);
    nx += (nx % 2 == 0);
  }
  return {Axis{base.t().min, base.t().max, nt}, Axis{base.x().min, base.x().max, nx}, base.rule()};
}

double substituted_two_bubble_quotient(const FreqProfile& chi, const ExponentTriple& exps,
                                       double eps, const BubbleSweepConfig& cfg) {
  require_critical(exps, "two_bubble quotient");
  const Support s = support_of(chi);
  if (!(1.0 + eps * s.lo > 0.0)) throw SupportOverlap("two_bubble: rescaled supports overlap");
  const double mass = l2_mass(chi);
  const auto k = approx_kernel(chi, exps.gamma, eps);
  const auto grid = modulation_grid(cfg.window, eps, cfg.points_per_period);
  const double n = oscillatory_mixed_norm(k, exps, grid, eps);
  return std::pow(n, exps.p) / std::pow(2.0 * mass, exps.p / 2.0);
}

double substituted_single_bubble_quotient(const FreqProfile& chi, const ExponentTriple& exps,
                                          double eps, const BubbleSweepConfig& cfg) {
  require_critical(exps, "single_bubble quotient");
  const double mass = l2_mass(chi);
  const auto k = approx_kernel(chi, exps.gamma, eps);
  return kernel_norm_power(k, cfg.window, exps.p, exps.q) / std::pow(mass, exps.p / 2.0);
}

namespace {

struct DirectSetup {
  FreqGrid freq;
  SpaceTimeGrid grid;
};

DirectSetup direct_setup(const FreqProfile& chi, double eps, const BubbleSweepConfig& cfg) {
  const Support s = support_of(chi);
  const double reach = 1.0 + eps * std::max(std::abs(s.lo), std::abs(s.hi));
  const double h = eps * cfg.direct_step_fraction;
  const auto half = static_cast<std::size_t>(std::ceil(reach / h));
  FreqGrid freq(-static_cast<double>(half) * h, static_cast<double>(half) * h, 2 * half + 1);
  const Axis& st = cfg.window.t();
  const Axis& sx = cfg.window.x();
  const double e2 = eps * eps;
  const double t_lo = st.min / e2;
  const double t_hi = st.max / e2;
  const double x_lo = sx.min / eps - 3.0 * std::max(t_hi, -t_lo);
  const double x_hi = sx.max / eps + 3.0 * std::max(t_hi, -t_lo);
  return {freq, SpaceTimeGrid(Axis{t_lo, t_hi, cfg.direct_nt}, Axis{x_lo, x_hi, cfg.direct_nx},
                              cfg.window.rule())};
}

}  // namespace

std::vector<BubbleRow> bubble_sweep(const FreqProfile& chi, const ExponentTriple& exps,
                                    std::span<const double> eps_list, const BubbleSweepConfig& cfg) {
  require_critical(exps, "bubble_sweep");
  for (std::size_t i = 1; i < eps_list.size(); ++i) {
    if (!(eps_list[i] < eps_list[i - 1])) throw DomainError("bubble_sweep: eps_list must decrease strictly");
  }
  std::vector<BubbleRow> rows;
  if (eps_list.empty()) return rows;
  const double target_one = schrodinger_quotient(chi, exps, cfg.window);
  const double target_two = a_p_closed_form(exps) * target_one;
  for (double eps : eps_list) {
    double two = 0.0;
    double one = 0.0;
    if (cfg.path == BubblePath::substituted) {
      two = substituted_two_bubble_quotient(chi, exps, eps, cfg);
      one = substituted_single_bubble_quotient(chi, exps, eps, cfg);
    } else {
      const DirectSetup d = direct_setup(chi, eps, cfg);
      two = airy_quotient(two_bubble(chi, eps, d.freq), exps, d.grid);
      one = airy_quotient(single_bubble(chi, eps, d.freq), exps, d.grid);
    }
    rows.push_back({eps, two, one, target_two, target_one, relative_error(two, target_two),
                    relative_error(one, target_one)});
  }
  return rows;
}

std::string bubble_sweep_csv(std::span<const BubbleRow> rows) {
  std::ostringstream out;
  out << "eps,quotient_two,quotient_one,target_two,target_one,rel_err_two,rel_err_one\n";
  for (const auto& r : rows) {
    out << format_real(r.eps) << ',' << format_real(r.quotient_two) << ','
        << format_real(r.quotient_one) << ',' << format_real(r.target_two) << ','
        << format_real(r.target_one) << ',' << format_real(r.rel_err_two) << ','
        << format_real(r.rel_err_one) << '\n';
  }
  return out.str();
}

}  // namespace airylab
