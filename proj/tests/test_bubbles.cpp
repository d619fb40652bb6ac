#include <doctest.h>

#include <cmath>

#include "airylab/bubbles.hpp"
#include "airylab/constants.hpp"
#include "airylab/norms.hpp"
#include "airylab/rng.hpp"

using namespace airylab;

namespace {

FreqProfile bump_chi() {
  return FreqProfile::sample(FreqGrid(-1.0, 1.0, 65), [](double s) {
    return cplx{std::pow(1.0 - s * s, 2.0), 0.5 * s * (1.0 - s * s)};
  });
}

FreqProfile gaussian_chi() {
  return FreqProfile::sample(FreqGrid(-4.0, 4.0, 257), [](double s) { return cplx{std::exp(-0.5 * s * s), 0.0}; });
}

SpaceTimeField random_field(CounterRng& rng) {
  const SpaceTimeGrid g = SpaceTimeGrid::centered(1.0, 7, 2.0, 9);
  std::vector<cplx> v(63);
  for (auto& z : v) z = {rng.normal(), rng.normal()};
  return {g, std::move(v)};
}

}  // namespace

TEST_CASE("bubble profiles: symmetry and mass") {
  const FreqProfile chi = bump_chi();
  const double eps = 0.1;
  // Step eps/32 so every output node maps onto a node of chi.
  const FreqGrid out(-1.2, 1.2, 769);
  const FreqProfile two = two_bubble(chi, eps, out);
  const FreqProfile one = single_bubble(chi, eps, out);
  CHECK(conjugate_symmetric(two));
  CHECK(std::abs(l2_mass(two) - 2.0 * eps * l2_mass(chi)) <= 1e-10);
  CHECK(std::abs(l2_mass(one) - eps * l2_mass(chi)) <= 1e-10);
}

TEST_CASE("bubble preconditions") {
  const FreqProfile chi = bump_chi();
  CHECK_THROWS_AS(two_bubble(chi, 0.1, FreqGrid(-1.05, 1.05, 101)), WindowOverflow);
  CHECK_THROWS_AS(single_bubble(chi, 0.1, FreqGrid(0.95, 1.05, 101)), WindowOverflow);
  CHECK_NOTHROW(single_bubble(chi, 0.1, FreqGrid(0.9, 1.1, 101)));
  const FreqProfile wide = FreqProfile::sample(FreqGrid(-12.0, 12.0, 49), [](double) { return cplx{1.0, 0.0}; });
  CHECK_THROWS_AS(two_bubble(wide, 0.1, FreqGrid(-3.0, 3.0, 301)), SupportOverlap);
  CHECK_THROWS_AS(two_bubble(chi, 0.0, FreqGrid(-3.0, 3.0, 301)), DomainError);
}

TEST_CASE("homogenized norm of the zero field") {
  const SpaceTimeField z(SpaceTimeGrid::centered(1.0, 3, 1.0, 3), std::vector<cplx>(9));
  CHECK(homogenized_mixed_norm(z, critical_exponents(6.0)) == 0.0);
  CHECK_THROWS_AS(homogenized_mixed_norm(z, make_exponents(6.0, 0.05)), DomainError);
}

TEST_CASE("homogenized norm identity at q = 6 and q = 4") {
  CounterRng rng(101);
  const ExponentTriple e6 = critical_exponents(6.0);
  const ExponentTriple e8 = critical_exponents(8.0);
  const double c6 = std::pow(20.0, 1.0 / 6.0);
  const double c4 = std::pow(4.0 * 1.5, 1.0 / 4.0);
  for (int i = 0; i < 100; ++i) {
    const SpaceTimeField f = random_field(rng);
    const double n6 = mixed_norm(f, 6.0, 6.0);
    CHECK(std::abs(homogenized_mixed_norm(f, e6) - c6 * n6) <= 1e-8 * c6 * n6);
    const double n84 = mixed_norm(f, 8.0, 4.0);
    CHECK(std::abs(homogenized_mixed_norm(f, e8) - c4 * n84) <= 1e-8 * c4 * n84);
  }
}

TEST_CASE("oscillatory evaluation approaches the homogenized norm") {
  const ExponentTriple e = critical_exponents(6.0);
  const ExtensionKernel k = schrodinger_kernel(gaussian_chi());
  const SpaceTimeGrid window = SpaceTimeGrid::centered(1.0, 65, 12.0, 97);
  double prev = 1e300;
  for (double eps : {0.2, 0.1, 0.05}) {
    // Same grid on both sides so only the modulation differs.
    const SpaceTimeGrid g = modulation_grid(window, eps, 12);
    const double target = homogenized_mixed_norm(evaluate(k, g), e);
    const double v = oscillatory_mixed_norm(k, e, g, eps);
    const double err = std::abs(v - target) / target;
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 0.01);
}

TEST_CASE("empty sweep gives a header-only table") {
  const auto rows = bubble_sweep(gaussian_chi(), critical_exponents(6.0), {});
  CHECK(rows.empty());
  CHECK(bubble_sweep_csv(rows) == "eps,quotient_two,quotient_one,target_two,target_one,rel_err_two,rel_err_one\n");
  const std::vector<double> up{0.1, 0.2};
  CHECK_THROWS_AS(bubble_sweep(gaussian_chi(), critical_exponents(6.0), up), DomainError);
}

TEST_CASE("bubble sweep at p = 6") {
  const std::vector<double> eps{0.2, 0.1, 0.05};
  const auto rows = bubble_sweep(gaussian_chi(), critical_exponents(6.0), eps);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].rel_err_two < rows[i - 1].rel_err_two);
    CHECK(rows[i].rel_err_one < rows[i - 1].rel_err_one);
  }
  CHECK(rows.back().rel_err_two < 0.05);
  CHECK(rows.back().rel_err_one < 0.05);
  for (const auto& r : rows) {
    CHECK(r.target_two == doctest::Approx(2.5 * r.target_one).epsilon(1e-12));
    if (r.eps <= 0.1) CHECK(r.quotient_two > r.quotient_one * (1.0 - 1e-3));
  }
  CHECK(std::abs(rows.back().quotient_two / rows.back().quotient_one / 2.5 - 1.0) < 0.03);
}

TEST_CASE("bubble sweep at p = 8") {
  const std::vector<double> eps{0.2, 0.1, 0.05};
  const auto rows = bubble_sweep(gaussian_chi(), critical_exponents(8.0), eps);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].rel_err_two < rows[i - 1].rel_err_two);
    CHECK(rows[i].rel_err_one < rows[i - 1].rel_err_one);
  }
  CHECK(rows[0].target_two / rows[0].target_one == doctest::Approx(2.25).epsilon(1e-12));
}

TEST_CASE("direct path agrees with the substituted path") {
  const ExponentTriple e = critical_exponents(6.0);
  const std::vector<double> eps{0.2};
  BubbleSweepConfig cfg;
  const auto sub = bubble_sweep(gaussian_chi(), e, eps, cfg);
  cfg.path = BubblePath::direct;
  const auto dir = bubble_sweep(gaussian_chi(), e, eps, cfg);
  CHECK(std::abs(dir[0].quotient_two / sub[0].quotient_two - 1.0) < 0.02);
  CHECK(std::abs(dir[0].quotient_one / sub[0].quotient_one - 1.0) < 0.02);
}
