#pragma once

#include "airylab/core.hpp"

namespace airylab {

inline constexpr int kDefaultThetaNodes = 2048;

// Lanczos approximation (g = 7, nine terms), x > 0.
double lanczos_gamma(double x);

double a_p_closed_form(const ExponentTriple& exps);
double a_p_quadrature(const ExponentTriple& exps, int nodes = kDefaultThetaNodes);

struct APValue {
  double p;
  double q;
  double gamma_form;
  double quad_form;

  [[nodiscard]] double relative_gap() const;
};

APValue a_p_value(const ExponentTriple& exps, int nodes = kDefaultThetaNodes);

// (1/2pi) int_0^{2pi} (1 + a cos t)^{q/2} dt, 0 <= a <= 1.
double phi_q(double a, double q, int nodes = kDefaultThetaNodes);

// (1/2pi) int_0^{2pi} |e^{it} z1 + e^{-it} z2|^q dt.
double cosine_average(cplx z1, cplx z2, double q, int nodes = kDefaultThetaNodes);
// Same value through (|z1|^2+|z2|^2)^{q/2} phi_q(2|z1||z2|/(|z1|^2+|z2|^2)).
double cosine_average_reduced(cplx z1, cplx z2, double q, int nodes = kDefaultThetaNodes);

}  // namespace airylab
