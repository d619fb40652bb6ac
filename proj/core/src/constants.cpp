#include "airylab/constants.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace airylab {

namespace {

void require_critical(const ExponentTriple& e, const char* who) {
  if (!e.critical()) throw DomainError(std::string(who) + ": exponent triple is not critical");
}

void require_nodes(int nodes) {
  if (nodes < 16) throw DomainError("theta quadrature: need at least 16 nodes");
}

template <class F>
double periodic_mean(int nodes, F&& f) {
  std::vector<double> v(static_cast<std::size_t>(nodes));
  const double h = 2.0 * std::numbers::pi / nodes;
  for (int k = 0; k < nodes; ++k) v[static_cast<std::size_t>(k)] = f(h * k);
  return pairwise_sum(v) / nodes;
}

}  // namespace

double lanczos_gamma(double x) {
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (!(x > 0.0)) throw DomainError("lanczos_gamma: need x > 0");
  if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));
  const double z = x - 1.0;
  double a = c[0];
  const double t = z + 7.5;
  for (std::size_t i = 1; i < c.size(); ++i) a += c[i] / (z + static_cast<double>(i));
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

double a_p_closed_form(const ExponentTriple& e) {
  require_critical(e, "a_p_closed_form");
  const double ratio = lanczos_gamma((e.q + 1.0) / 2.0) / lanczos_gamma((e.q + 2.0) / 2.0);
  return std::pow(2.0, e.p / 2.0) / std::pow(std::numbers::pi, e.p / (2.0 * e.q)) *
         std::pow(ratio, e.p / e.q);
}

double a_p_quadrature(const ExponentTriple& e, int nodes) {
  require_critical(e, "a_p_quadrature");
  return std::pow(phi_q(1.0, e.q, nodes), e.p / e.q);
}

double APValue::relative_gap() const { return std::abs(gamma_form - quad_form) / std::abs(gamma_form); }

APValue a_p_value(const ExponentTriple& e, int nodes) {
  return {e.p, e.q, a_p_closed_form(e), a_p_quadrature(e, nodes)};
}

double phi_q(double a, double q, int nodes) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("phi_q: need 0 <= a <= 1");
  require_nodes(nodes);
  const double half = q / 2.0;
  return periodic_mean(nodes, [&](double th) {
    const double base = 1.0 + a * std::cos(th);
    return base <= 0.0 ? 0.0 : std::pow(base, half);
  });
}

double cosine_average(cplx z1, cplx z2, double q, int nodes) {
  require_nodes(nodes);
  return periodic_mean(nodes, [&](double th) {
    const cplx w = std::polar(1.0, th);
    return std::pow(std::abs(w * z1 + std::conj(w) * z2), q);
  });
}

double cosine_average_reduced(cplx z1, cplx z2, double q, int nodes) {
  const double s = std::norm(z1) + std::norm(z2);
  if (s == 0.0) return 0.0;
  const double a = std::min(1.0, 2.0 * std::abs(z1) * std::abs(z2) / s);
  return std::pow(s, q / 2.0) * phi_q(a, q, nodes);
}

}  // namespace airylab
