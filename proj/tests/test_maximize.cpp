#include <doctest.h>

#include <cmath>

#include "airylab/constants.hpp"
#include "airylab/maximize.hpp"
#include "airylab/norms.hpp"
#include "airylab/rng.hpp"

using namespace airylab;

namespace {

FreqProfile random_profile(const FreqGrid& g, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<cplx> s(g.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double xi = g.node(j);
    s[j] = cplx{rng.normal(), rng.normal()} * std::exp(-0.5 * xi * xi);
  }
  return {g, std::move(s)};
}

FreqProfile perturbed(const FreqProfile& u, std::size_t j, cplx d) {
  std::vector<cplx> s(u.samples().begin(), u.samples().end());
  s[j] += d;
  return {u.grid(), std::move(s)};
}

// Norm of the tangential part of the L2-metric gradient on the unit sphere.
double tangent_norm(const FreqProfile& u, const FreqProfile& grad) {
  const auto& g = u.grid();
  const double m = l2_mass(u);
  double ip = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) ip += std::real(std::conj(grad[j]) * u[j]);
  double n = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) n += g.weight(j) * std::norm(grad[j] / g.weight(j) - ip / m * u[j]);
  return std::sqrt(n * m);
}

const FreqGrid kSmallFreq(-3.0, 3.0, 97);
const SpaceTimeGrid kSmallGrid = SpaceTimeGrid::centered(1.0, 129, 20.0, 161);

}  // namespace

TEST_CASE("objective names") {
  CHECK(parse_objective("airy-critical") == Objective::airy_critical);
  CHECK(parse_objective("airy") == Objective::airy_critical);
  CHECK(parse_objective("airy-subcritical") == Objective::airy_subcritical);
  CHECK(parse_objective("schrodinger") == Objective::schrodinger);
  CHECK_THROWS_AS(parse_objective("kdv"), DomainError);
  for (Objective o : {Objective::airy_critical, Objective::airy_subcritical, Objective::schrodinger}) {
    CHECK(parse_objective(to_string(o)) == o);
  }
}

TEST_CASE("config validation") {
  AscentConfig c;
  CHECK_NOTHROW(c.validate());
  c.max_iters = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = {};
  c.backtrack = 1.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = {};
  c.initial_step = 0.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("objective quotient agrees with the norms module") {
  const ExponentTriple e = critical_exponents(6.0);
  const FreqProfile u = random_profile(kSmallFreq, 3);
  const SpaceTimeGrid g = SpaceTimeGrid::centered(1.0, 21, 10.0, 41);
  CHECK(objective_quotient(u, Objective::airy_critical, e, g) == doctest::Approx(airy_quotient(u, e, g)).epsilon(1e-12));
  CHECK(objective_quotient(u, Objective::schrodinger, e, g) ==
        doctest::Approx(schrodinger_quotient(u, e, g)).epsilon(1e-12));
}

TEST_CASE("gradient matches central finite differences") {
  const SpaceTimeGrid g = SpaceTimeGrid::centered(1.0, 41, 10.0, 61);
  const FreqGrid fg(-3.0, 3.0, 49);
  struct Case {
    Objective o;
    ExponentTriple e;
  };
  const Case cases[] = {{Objective::airy_critical, critical_exponents(6.0)},
                        {Objective::airy_critical, critical_exponents(8.0)},
                        {Objective::airy_subcritical, make_exponents(6.0, 0.05)},
                        {Objective::schrodinger, critical_exponents(6.0)}};
  CounterRng pick(77);
  for (const auto& c : cases) {
    const FreqProfile u = random_profile(fg, 5);
    const QuotientGradient qg = quotient_gradient(u, c.o, c.e, g);
    CHECK(qg.quotient == doctest::Approx(objective_quotient(u, c.o, c.e, g)).epsilon(1e-12));
    auto logq = [&](const FreqProfile& v) { return std::log(objective_quotient(v, c.o, c.e, g)); };
    double gmax = 0.0;
    for (std::size_t j = 0; j < fg.size(); ++j) gmax = std::max(gmax, std::abs(qg.gradient[j]));
    const double h = 1e-5;
    for (int n = 0; n < 20; ++n) {
      const auto j = static_cast<std::size_t>(pick.uniform() * static_cast<double>(fg.size()));
      const double dre = (logq(perturbed(u, j, {h, 0.0})) - logq(perturbed(u, j, {-h, 0.0}))) / (2.0 * h);
      const double dim = (logq(perturbed(u, j, {0.0, h})) - logq(perturbed(u, j, {0.0, -h}))) / (2.0 * h);
      const double scale = std::max(std::abs(qg.gradient[j]), 1e-3 * gmax);
      CHECK(std::abs(dre - qg.gradient[j].real()) <= 1e-5 * scale);
      CHECK(std::abs(dim - qg.gradient[j].imag()) <= 1e-5 * scale);
    }
  }
}

TEST_CASE("phase rotation is a null direction") {
  const SpaceTimeGrid g = SpaceTimeGrid::centered(1.0, 41, 10.0, 61);
  for (std::uint64_t seed : {1, 2, 3}) {
    const FreqProfile u = random_profile(kSmallFreq, seed);
    const QuotientGradient qg = quotient_gradient(u, Objective::airy_critical, critical_exponents(6.0), g);
    double dir = 0.0;
    double gn = 0.0;
    double un = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
      dir += std::real(std::conj(qg.gradient[j]) * (cplx(0.0, 1.0) * u[j]));
      gn += std::norm(qg.gradient[j]);
      un += std::norm(u[j]);
    }
    CHECK(std::abs(dir) <= 1e-10 * std::sqrt(gn * un));
  }
}

TEST_CASE("gradient preconditions") {
  const SpaceTimeGrid g = SpaceTimeGrid::centered(1.0, 5, 1.0, 5);
  CHECK_THROWS_AS(quotient_gradient(FreqProfile::zeros(kSmallFreq), Objective::airy_critical,
                                    critical_exponents(6.0), g),
                  DomainError);
  CHECK_THROWS_AS(ascend(FreqProfile::zeros(kSmallFreq), AscentConfig{}, critical_exponents(6.0), g), DomainError);
}

TEST_CASE("initial profiles") {
  const FreqProfile a = initial_profile(InitKind::random, kSmallFreq, 9);
  const FreqProfile b = initial_profile(InitKind::random, kSmallFreq, 9);
  const FreqProfile c = initial_profile(InitKind::random, kSmallFreq, 10);
  bool same = true;
  bool differ = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    same = same && a[j] == b[j];
    differ = differ || a[j] != c[j];
  }
  CHECK(same);
  CHECK(differ);
  CHECK(conjugate_symmetric(initial_profile(InitKind::two_bubble, kSmallFreq, 1)));
  const FreqProfile gsn = initial_profile(InitKind::gaussian, kSmallFreq, 1);
  std::size_t peak = 0;
  for (std::size_t j = 0; j < gsn.size(); ++j) {
    if (std::abs(gsn[j]) > std::abs(gsn[peak])) peak = j;
  }
  CHECK(kSmallFreq.node(peak) == doctest::Approx(1.0));
}

TEST_CASE("ascent histories are monotone and the real constraint holds") {
  const ExponentTriple e = critical_exponents(6.0);
  for (bool real : {false, true}) {
    for (std::uint64_t seed : {1, 2, 3}) {
      AscentConfig cfg;
      cfg.max_iters = 40;
      cfg.real_constraint = real;
      const AscentResult r = ascend(initial_profile(InitKind::random, kSmallFreq, seed), cfg, e, kSmallGrid);
      REQUIRE(r.history.size() >= 2);
      for (std::size_t k = 1; k < r.history.size(); ++k) CHECK(r.history[k] >= r.history[k - 1] - 1e-12);
      CHECK(r.best_quotient == r.history.back());
      CHECK(std::abs(l2_mass(r.best_profile) - 1.0) <= 1e-12);
      if (real) CHECK(conjugate_symmetric(r.best_profile, 1e-12));
    }
  }
}

TEST_CASE("real-constrained and unconstrained airy ascent agree") {
  const ExponentTriple e = critical_exponents(6.0);
  AscentConfig cfg;
  cfg.max_iters = 600;
  const FreqProfile u0 = initial_profile(InitKind::random, kSmallFreq, 1);
  const AscentResult complex_run = ascend(u0, cfg, e, kSmallGrid);
  cfg.real_constraint = true;
  const AscentResult real_run = ascend(u0, cfg, e, kSmallGrid);
  CHECK(complex_run.converged);
  CHECK(real_run.converged);
  CHECK(std::abs(real_run.best_quotient / complex_run.best_quotient - 1.0) <= 0.01);

  // The converged profile's quotient is invariant under a node-preserving
  // symmetry on the transported window.
  const SymmetryElement s{0.2, -1.5, 2.0};
  const double moved = airy_quotient(apply_symmetry(s, complex_run.best_profile), e, pullback(kSmallGrid, s));
  CHECK(std::abs(moved / complex_run.best_quotient - 1.0) <= 1e-5);

  // First-order condition: the tangential log-gradient collapses at the stall.
  const double g0 = tangent_norm(u0, quotient_gradient(u0, Objective::airy_critical, e, kSmallGrid).gradient);
  const double g1 = tangent_norm(complex_run.best_profile,
                                 quotient_gradient(complex_run.best_profile, Objective::airy_critical, e, kSmallGrid)
                                     .gradient);
  CHECK(g1 <= 1e-3 * g0);
}

TEST_CASE("schrodinger ascent from a Gaussian stays at the Gaussian trial value") {
  const ExponentTriple e = critical_exponents(6.0);
  const ThresholdGrids tg;
  const GaussianTrial trial = gaussian_trial(e, tg.freq, tg.schrodinger);
  CHECK(trial.quotient > 0.0);
  AscentConfig cfg;
  cfg.objective = Objective::schrodinger;
  const FreqProfile u0 = FreqProfile::sample(tg.freq, [](double xi) { return cplx{std::exp(-0.5 * xi * xi), 0.0}; });
  const AscentResult r = ascend(u0, cfg, e, tg.schrodinger);
  CHECK(r.converged);
  CHECK(std::abs(r.best_quotient / trial.quotient - 1.0) <= 0.005);
}

TEST_CASE("two-bubble start reaches a_p times the Gaussian trial") {
  const ExponentTriple e = critical_exponents(6.0);
  const ThresholdGrids tg;
  const GaussianTrial trial = gaussian_trial(e, tg.freq, tg.schrodinger);
  const AscentResult r = ascend(initial_profile(InitKind::two_bubble, tg.freq, 1), AscentConfig{}, e, tg.airy);
  CHECK(r.best_quotient >= 0.95 * 2.5 * trial.quotient);
}

TEST_CASE("threshold report with a degenerate budget") {
  ThresholdGrids light;
  light.freq = FreqGrid(-3.0, 3.0, 65);
  light.airy = SpaceTimeGrid::centered(1.0, 65, 20.0, 81);
  light.schrodinger = SpaceTimeGrid::centered(1.0, 65, 20.0, 81);
  AscentConfig cfg;
  cfg.max_iters = 1;
  cfg.restarts = 1;
  const ThresholdReport r = threshold_report(critical_exponents(6.0), cfg, light);
  CHECK(r.verdict == "inconclusive");
  CHECK(r.a_p_exact == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(r.p == 6.0);
  CHECK(r.q == 6.0);
  CHECK(r.margin == doctest::Approx(r.A_p_est - r.a_p_exact * r.S_p_est));
  CHECK(r.A_p_est >= 0.0);
  CHECK(r.S_p_est >= 0.0);
  CHECK(r.caveats.find("lower") != std::string::npos);
  // Gaussian, two-bubble and one random start per objective.
  CHECK(r.runs.size() == 6);
  CHECK_THROWS_AS(threshold_report(make_exponents(6.0, 0.05), cfg, light), DomainError);
}
