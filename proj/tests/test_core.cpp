#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "airylab/core.hpp"
#include "airylab/rng.hpp"

using namespace airylab;

TEST_CASE("make_exponents solves the scaling relation") {
  CHECK(make_exponents(6.0, 1.0 / 6.0).q == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(make_exponents(8.0, 1.0 / 8.0).q == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(make_exponents(5.0, 1.0 / 5.0).q == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(make_exponents(6.0, 1.0 / 6.0).critical());
  CHECK_FALSE(make_exponents(6.0, 0.05).critical());
  CHECK(critical_exponents(6.0).q == 6.0);
}

TEST_CASE("make_exponents rejects out-of-range input") {
  CHECK_THROWS_AS(make_exponents(4.0, 0.25), DomainError);
  CHECK_THROWS_AS(make_exponents(3.0, 0.0), DomainError);
  CHECK_THROWS_AS(make_exponents(6.0, 0.5), DomainError);
  CHECK_THROWS_AS(make_exponents(6.0, -0.5), DomainError);
  CHECK_THROWS_AS(make_exponents(std::numeric_limits<double>::infinity(), 0.0), DomainError);
  // gamma = 0 at p = 6 would need q = infinity.
  CHECK_THROWS_AS(make_exponents(6.0, 0.0), DomainError);
}

TEST_CASE("critical relation holds for seeded p") {
  CounterRng rng(11);
  for (int i = 0; i < 200; ++i) {
    const double p = rng.uniform(4.05, 40.0);
    const ExponentTriple e = critical_exponents(p);
    CHECK(std::abs(2.0 / p + 1.0 / e.q - 0.5) <= 1e-12);
    CHECK(std::abs(-e.gamma + 3.0 / p + 1.0 / e.q - 0.5) <= 1e-12);
  }
}

TEST_CASE("FreqGrid geometry") {
  const FreqGrid g(-2.0, 2.0, 9);
  CHECK(g.step() == 0.5);
  CHECK(g.node(0) == -2.0);
  CHECK(g.node(8) == 2.0);
  CHECK(g.symmetric());
  CHECK_FALSE(FreqGrid(-2.0, 2.0, 8).symmetric());
  CHECK_FALSE(FreqGrid(-1.0, 2.0, 9).symmetric());
  CHECK(g.index_of(0.5) == 5);
  CHECK(g.index_of(0.25) == FreqGrid::npos);
  CHECK(g.index_of(3.0) == FreqGrid::npos);
  double total = 0.0;
  for (double w : g.weights()) total += w;
  CHECK(total == doctest::Approx(4.0).epsilon(1e-15));
  CHECK_THROWS_AS(FreqGrid(1.0, 1.0, 5), DomainError);
  CHECK_THROWS_AS(FreqGrid(0.0, 1.0, 1), DomainError);
}

TEST_CASE("FreqProfile validates samples") {
  const FreqGrid g(0.0, 1.0, 3);
  CHECK_THROWS_AS(FreqProfile(g, {1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(FreqProfile(g, {1.0, std::numeric_limits<double>::quiet_NaN(), 0.0}), DomainError);
  CHECK_THROWS_AS(FreqProfile(g, {1.0, cplx(0.0, std::numeric_limits<double>::infinity()), 0.0}),
                  DomainError);
}

TEST_CASE("l2_mass examples") {
  CHECK(l2_mass(FreqProfile::zeros(FreqGrid(-1.0, 1.0, 17))) == 0.0);

  const FreqProfile gauss = FreqProfile::sample(FreqGrid(-8.0, 8.0, 1025), [](double xi) {
    return cplx{std::exp(-0.5 * xi * xi), 0.0};
  });
  CHECK(std::abs(l2_mass(gauss) - std::sqrt(std::numbers::pi)) <= 1e-6);

  const FreqGrid g(-1.0, 2.0, 301);
  const FreqProfile box = FreqProfile::sample(g, [](double xi) {
    return xi >= 0.0 && xi <= 1.0 ? cplx{1.0, 0.0} : cplx{};
  });
  CHECK(std::abs(l2_mass(box) - 1.0) <= g.step() + 1e-12);
}

TEST_CASE("l2_mass ignores unimodular phases") {
  CounterRng rng(3);
  const FreqGrid g(-3.0, 3.0, 121);
  std::vector<cplx> s(g.size());
  std::vector<cplx> r(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    s[j] = {rng.normal(), rng.normal()};
    r[j] = s[j] * std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
  }
  const double a = l2_mass(FreqProfile(g, s));
  const double b = l2_mass(FreqProfile(g, r));
  CHECK(std::abs(a - b) <= 1e-12 * a);
}

TEST_CASE("grid refinement reduces the Gaussian mass error") {
  double prev = 1.0;
  for (std::size_t n : {9, 17, 33, 65}) {
    const FreqProfile u = FreqProfile::sample(FreqGrid(-8.0, 8.0, n), [](double xi) {
      return cplx{std::exp(-0.5 * xi * xi), 0.0};
    });
    const double err = std::abs(l2_mass(u) - std::sqrt(std::numbers::pi));
    CHECK(err <= prev + 1e-15);
    prev = err;
  }
}

TEST_CASE("conjugate symmetry flag") {
  const FreqGrid g(-1.0, 1.0, 5);
  CHECK(conjugate_symmetric(FreqProfile(g, {cplx(1, 2), cplx(0, 1), 3.0, cplx(0, -1), cplx(1, -2)})));
  CHECK_FALSE(conjugate_symmetric(FreqProfile(g, {cplx(1, 2), cplx(0, 1), 3.0, cplx(0, 1), cplx(1, -2)})));
  CHECK_FALSE(conjugate_symmetric(FreqProfile(g, {1.0, 1.0, cplx(0, 1), 1.0, 1.0})));
}

TEST_CASE("quadrature rules") {
  const Axis a{0.0, 2.0, 9};
  double trap = 0.0;
  double simp = 0.0;
  const auto wt = quadrature_weights(a, Quadrature::trapezoid);
  const auto ws = quadrature_weights(a, Quadrature::simpson);
  for (std::size_t i = 0; i < a.n; ++i) {
    const double x = a.node(i);
    trap += wt[i] * x;
    simp += ws[i] * x * x * x;
  }
  CHECK(trap == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(simp == doctest::Approx(4.0).epsilon(1e-14));
  CHECK_THROWS_AS(SpaceTimeGrid(Axis{0, 1, 4}, Axis{0, 1, 5}, Quadrature::simpson), DomainError);
  CHECK_THROWS_AS(SpaceTimeGrid(Axis{1, 1, 4}, Axis{0, 1, 5}), DomainError);
}

TEST_CASE("SpaceTimeField validation and arithmetic") {
  const SpaceTimeGrid g = SpaceTimeGrid::centered(1.0, 3, 1.0, 2);
  CHECK_THROWS_AS(SpaceTimeField(g, std::vector<cplx>(5)), DomainError);
  std::vector<cplx> bad(6);
  bad[2] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(SpaceTimeField(g, bad), DomainError);

  const SpaceTimeField f(g, {1, 2, 3, 4, 5, 6});
  const SpaceTimeField h = f + f.scaled(2.0);
  CHECK(h(2, 1) == cplx(18.0));
  CHECK((h - f)(1, 0) == cplx(6.0));
  CHECK(f.row(1)[1] == cplx(4.0));
  const SpaceTimeField other(SpaceTimeGrid::centered(2.0, 3, 1.0, 2), std::vector<cplx>(6));
  CHECK_THROWS_AS(f + other, GridMismatch);
}

TEST_CASE("pairwise_sum matches an extended-precision sum") {
  CounterRng rng(5);
  std::vector<double> v(10007);
  long double ref = 0.0L;
  for (auto& x : v) {
    x = rng.uniform(-1.0, 1.0) * std::pow(10.0, rng.uniform(-3.0, 3.0));
    ref += x;
  }
  CHECK(std::abs(pairwise_sum(v) - static_cast<double>(ref)) <= 1e-11);
  CHECK(pairwise_sum({}) == 0.0);
}
