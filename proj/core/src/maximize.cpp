#include "airylab/maximize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "airylab/bubbles.hpp"
#include "airylab/constants.hpp"
#include "airylab/norms.hpp"
#include "airylab/rng.hpp"

namespace airylab {

namespace {

std::vector<cplx> field_coeffs(const ExtensionKernel& unit, const FreqProfile& u) {
  std::vector<cplx> c(unit.size());
  for (std::size_t m = 0; m < unit.size(); ++m) c[m] = unit.coeff[m] * u[unit.node[m]];
  return c;
}

ExtensionKernel with_profile(const ExtensionKernel& unit, const FreqProfile& u) {
  ExtensionKernel k = unit;
  k.coeff = field_coeffs(unit, u);
  return k;
}

double positive_mass(const FreqProfile& u, const char* who) {
  const double m = l2_mass(u);
  if (!(m > 0.0)) throw DomainError(std::string(who) + ": zero profile");
  return m;
}

FreqProfile normalized(const FreqProfile& u) { return u.scaled(1.0 / std::sqrt(l2_mass(u))); }

FreqProfile real_part_projection(const FreqProfile& u) { return symmetrize_real(u).first; }

struct Evaluator {
  ExtensionKernel unit;
  const ExponentTriple& exps;
  const SpaceTimeGrid& grid;

  double quotient(const FreqProfile& u) const {
    const double m = positive_mass(u, "objective_quotient");
    return kernel_norm_power(with_profile(unit, u), grid, exps.p, exps.q) /
           std::pow(m, exps.p / 2.0);
  }
};

void check_finite(double v, int iter, double step) {
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "ascend: non-finite objective at iteration " << iter << " (step " << step << ")";
    throw NonFiniteObjective(os.str());
  }
}

}  // namespace

std::string to_string(Objective o) {
  switch (o) {
    case Objective::airy_critical:
      return "airy-critical";
    case Objective::airy_subcritical:
      return "airy-subcritical";
    case Objective::schrodinger:
      return "schrodinger";
  }
  return "?";
}

Objective parse_objective(const std::string& s) {
  if (s == "airy-critical" || s == "airy") return Objective::airy_critical;
  if (s == "airy-subcritical") return Objective::airy_subcritical;
  if (s == "schrodinger") return Objective::schrodinger;
  throw DomainError("unknown objective '" + s + "'");
}

std::string to_string(InitKind k) {
  switch (k) {
    case InitKind::gaussian:
      return "gaussian";
    case InitKind::two_bubble:
      return "two-bubble";
    case InitKind::random:
      return "random";
  }
  return "?";
}

void AscentConfig::validate() const {
  if (max_iters < 1) throw DomainError("AscentConfig: max_iters must be >= 1");
  if (!(initial_step > 0.0)) throw DomainError("AscentConfig: step must be positive");
  if (!(backtrack > 0.0 && backtrack < 1.0)) throw DomainError("AscentConfig: backtrack in (0,1)");
  if (!(stall_tol >= 0.0)) throw DomainError("AscentConfig: stall_tol must be >= 0");
  if (stall_window < 1) throw DomainError("AscentConfig: stall_window must be >= 1");
  if (restarts < 0) throw DomainError("AscentConfig: restarts must be >= 0");
}

ExtensionKernel unit_kernel(const FreqGrid& grid, Objective objective, const ExponentTriple& exps) {
  const FreqProfile ones(grid, std::vector<cplx>(grid.size(), cplx{1.0, 0.0}));
  switch (objective) {
    case Objective::schrodinger:
      return schrodinger_kernel(ones);
    case Objective::airy_critical:
    case Objective::airy_subcritical:
      return airy_kernel(ones, exps.gamma);
  }
  throw DomainError("unit_kernel: bad objective");
}

double objective_quotient(const FreqProfile& u, Objective objective, const ExponentTriple& exps,
                          const SpaceTimeGrid& grid) {
  return Evaluator{unit_kernel(u.grid(), objective, exps), exps, grid}.quotient(u);
}

QuotientGradient quotient_gradient(const FreqProfile& u, Objective objective,
                                   const ExponentTriple& exps, const SpaceTimeGrid& grid) {
  const double p = exps.p;
  const double q = exps.q;
  if (!(p > 2.0 && q > 2.0) || std::isinf(q)) {
    throw DomainError("quotient_gradient: need finite p, q > 2");
  }
  const double mass = positive_mass(u, "quotient_gradient");
  const ExtensionKernel unit = unit_kernel(u.grid(), objective, exps);
  const SpaceTimeField f = evaluate(with_profile(unit, u), grid);

  MixedNormAccumulator acc(grid, p, q);
  for (std::size_t i = 0; i < f.nt(); ++i) acc.add_row(i, f.row(i));
  const double norm_p = acc.power();
  if (!(norm_p > 0.0)) throw DomainError("quotient_gradient: field vanishes on the grid");

  const auto tw = grid.t_weights();
  const auto xw = grid.x_weights();
  const auto inner = acc.inner();
  std::vector<cplx> h(f.values().size());
  for (std::size_t i = 0; i < f.nt(); ++i) {
    if (inner[i] == 0.0) continue;
    const double row_factor = p * tw[i] * std::pow(inner[i], p / q - 1.0);
    for (std::size_t k = 0; k < f.nx(); ++k) {
      const cplx v = f(i, k);
      const double a = std::abs(v);
      if (a == 0.0) continue;
      h[i * f.nx() + k] = row_factor * xw[k] * std::pow(a, q - 2.0) * v;
    }
  }
  const std::vector<cplx> adj = adjoint_phase_sum(unit, grid, h);

  const FreqGrid& g = u.grid();
  std::vector<cplx> grad(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) grad[j] = -p * g.weight(j) * u[j] / mass;
  for (std::size_t m = 0; m < unit.size(); ++m) {
    grad[unit.node[m]] += std::conj(unit.coeff[m]) * adj[m] / norm_p;
  }
  return {norm_p / std::pow(mass, p / 2.0), FreqProfile(g, std::move(grad))};
}

AscentResult ascend(const FreqProfile& u0, const AscentConfig& cfg, const ExponentTriple& exps,
                    const SpaceTimeGrid& grid) {
  cfg.validate();
  positive_mass(u0, "ascend");
  const FreqGrid& g = u0.grid();
  const Evaluator eval{unit_kernel(g, cfg.objective, exps), exps, grid};

  FreqProfile u = normalized(cfg.real_constraint ? real_part_projection(u0) : u0);
  double value = eval.quotient(u);
  check_finite(value, 0, 0.0);

  AscentResult res{u, value, {value}, false, 0};
  double step = cfg.initial_step;
  const double min_step = cfg.initial_step * 1e-12;

  for (int it = 1; it <= cfg.max_iters; ++it) {
    res.iterations = it;
    const QuotientGradient qg = quotient_gradient(u, cfg.objective, exps, grid);
    // L2-metric gradient, then tangent projection at the unit sphere.
    std::vector<cplx> d(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) d[j] = qg.gradient[j] / g.weight(j);
    FreqProfile dir(g, d);
    if (cfg.real_constraint) dir = real_part_projection(dir);
    {
      std::vector<double> terms(g.size());
      for (std::size_t j = 0; j < g.size(); ++j) {
        terms[j] = g.weight(j) * std::real(std::conj(u[j]) * dir[j]);
      }
      const double radial = pairwise_sum(terms);
      std::vector<cplx> t(g.size());
      for (std::size_t j = 0; j < g.size(); ++j) t[j] = dir[j] - radial * u[j];
      dir = FreqProfile(g, std::move(t));
    }

    bool accepted = false;
    while (step >= min_step) {
      std::vector<cplx> trial(g.size());
      for (std::size_t j = 0; j < g.size(); ++j) trial[j] = u[j] + step * dir[j];
      FreqProfile cand(g, std::move(trial));
      if (cfg.real_constraint) cand = real_part_projection(cand);
      if (l2_mass(cand) > 0.0) {
        cand = normalized(cand);
        const double v = eval.quotient(cand);
        check_finite(v, it, step);
        if (v > value) {
          u = std::move(cand);
          value = v;
          accepted = true;
          break;
        }
      }
      step *= cfg.backtrack;
    }
    res.history.push_back(value);
    if (!accepted) {
      // No ascent direction left at machine resolution.
      res.converged = true;
      break;
    }
    step /= cfg.backtrack;
    const std::size_t k = res.history.size() - 1;
    const auto w = static_cast<std::size_t>(cfg.stall_window);
    if (k >= w && res.history[k] - res.history[k - w] <= cfg.stall_tol * res.history[k]) {
      res.converged = true;
      break;
    }
  }
  res.best_profile = u;
  res.best_quotient = value;
  return res;
}

FreqProfile initial_profile(InitKind kind, const FreqGrid& grid, std::uint64_t seed) {
  switch (kind) {
    case InitKind::gaussian:
      return FreqProfile::sample(grid, [](double xi) {
        return cplx{std::exp(-0.5 * (xi - 1.0) * (xi - 1.0)), 0.0};
      });
    case InitKind::two_bubble: {
      const FreqGrid cg(-4.0, 4.0, 257);
      const FreqProfile chi =
          FreqProfile::sample(cg, [](double s) { return cplx{std::exp(-0.5 * s * s), 0.0}; });
      return two_bubble(chi, 0.1, grid);
    }
    case InitKind::random: {
      CounterRng rng(seed);
      const double lo = grid.xi_min();
      const double hi = grid.xi_max();
      const double span = hi - lo;
      std::vector<cplx> s(grid.size());
      for (int b = 0; b < 4; ++b) {
        const double c = rng.uniform(lo + 0.25 * span, hi - 0.25 * span);
        const double w = rng.uniform(0.05, 0.2) * span;
        const cplx amp{rng.normal(), rng.normal()};
        for (std::size_t j = 0; j < grid.size(); ++j) {
          const double z = (grid.node(j) - c) / w;
          s[j] += amp * std::exp(-0.5 * z * z);
        }
      }
      return {grid, std::move(s)};
    }
  }
  throw DomainError("initial_profile: bad kind");
}

GaussianTrial gaussian_trial(const ExponentTriple& exps, const FreqGrid& fgrid,
                             const SpaceTimeGrid& grid, int widths) {
  if (widths < 3) throw DomainError("gaussian_trial: need at least 3 widths");
  const auto value = [&](double s) {
    const FreqProfile u =
        FreqProfile::sample(fgrid, [s](double xi) { return cplx{std::exp(-0.5 * xi * xi / (s * s)), 0.0}; });
    return schrodinger_quotient(u, exps, grid);
  };
  const double s_lo = 2.0 * fgrid.step();
  const double s_hi = (fgrid.xi_max() - fgrid.xi_min()) / 5.0;
  const double ratio = std::pow(s_hi / s_lo, 1.0 / (widths - 1));
  std::vector<double> ladder(static_cast<std::size_t>(widths));
  std::vector<double> vals(ladder.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    ladder[i] = s_lo * std::pow(ratio, static_cast<double>(i));
    vals[i] = value(ladder[i]);
    if (vals[i] > vals[best]) best = i;
  }
  // Golden-section refinement on log width inside the neighbouring bracket.
  double a = std::log(ladder[best == 0 ? 0 : best - 1]);
  double b = std::log(ladder[std::min(best + 1, ladder.size() - 1)]);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = value(std::exp(c));
  double fd = value(std::exp(d));
  for (int it = 0; it < 40; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = value(std::exp(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = value(std::exp(d));
    }
  }
  GaussianTrial out{vals[best], ladder[best]};
  if (fc > out.quotient) out = {fc, std::exp(c)};
  if (fd > out.quotient) out = {fd, std::exp(d)};
  return out;
}

namespace {

// Larger quotient wins, then lower seed.
bool better(const RunSummary& a, const RunSummary& b) {
  if (a.quotient != b.quotient) return a.quotient > b.quotient;
  return a.seed < b.seed;
}

std::vector<RunSummary> restart_runs(Objective objective, const ExponentTriple& exps,
                                     const AscentConfig& cfg, const FreqGrid& fgrid,
                                     const SpaceTimeGrid& grid) {
  AscentConfig c = cfg;
  c.objective = objective;
  std::vector<std::pair<InitKind, std::uint64_t>> starts{{InitKind::gaussian, cfg.seed},
                                                         {InitKind::two_bubble, cfg.seed}};
  for (int r = 0; r < cfg.restarts; ++r) {
    starts.emplace_back(InitKind::random, cfg.seed + static_cast<std::uint64_t>(r));
  }
  std::vector<RunSummary> runs;
  for (const auto& [kind, seed] : starts) {
    const AscentResult a = ascend(initial_profile(kind, fgrid, seed), c, exps, grid);
    runs.push_back({objective, kind, seed, a.best_quotient, a.converged, a.iterations, a.history});
  }
  return runs;
}

}  // namespace

ThresholdReport threshold_report(const ExponentTriple& exps, const AscentConfig& cfg,
                                 const ThresholdGrids& grids) {
  if (!exps.critical()) throw DomainError("threshold_report: needs a critical triple");
  cfg.validate();
  ThresholdReport r{};
  r.p = exps.p;
  r.q = exps.q;
  r.a_p_exact = a_p_closed_form(exps);

  auto airy = restart_runs(Objective::airy_critical, exps, cfg, grids.freq, grids.airy);
  auto schr = restart_runs(Objective::schrodinger, exps, cfg, grids.freq, grids.schrodinger);
  const auto best_of = [](const std::vector<RunSummary>& v) {
    return *std::min_element(v.begin(), v.end(), better);
  };
  const RunSummary ba = best_of(airy);
  const RunSummary bs = best_of(schr);
  r.A_p_est = ba.quotient;
  r.S_p_est = bs.quotient;
  r.airy_converged = ba.converged;
  r.schrodinger_converged = bs.converged;
  r.S_p_gaussian = gaussian_trial(exps, grids.freq, grids.schrodinger).quotient;
  r.margin = r.A_p_est - r.a_p_exact * r.S_p_est;

  const bool sane = r.S_p_est >= r.S_p_gaussian;
  const bool holds = r.margin > 0.0 && r.airy_converged && r.schrodinger_converged && sane;
  r.verdict = holds ? "condition-holds-empirically" : "inconclusive";

  std::ostringstream cav;
  cav << "A_p_est and S_p_est are lower-bound estimates from finite grids and local ascent; "
         "a rigorous test of A_p > a_p S_p needs an upper bound on S_p, which is known only if "
         "Gaussians maximize S_p.";
  if (!sane) cav << " S_p_est fell below the Gaussian trial value.";
  if (!r.airy_converged) cav << " Airy ascent did not meet the stall criterion.";
  if (!r.schrodinger_converged) cav << " Schrodinger ascent did not meet the stall criterion.";
  r.caveats = cav.str();

  r.runs = std::move(airy);
  r.runs.insert(r.runs.end(), schr.begin(), schr.end());
  return r;
}

}  // namespace airylab
