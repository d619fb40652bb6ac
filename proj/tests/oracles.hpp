#pragma once

// Reference computations for the tests. Nothing here calls into the library's
// evaluation code: sums are naive long-double loops.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cld = std::complex<long double>;

// Composite Simpson on [a, b] with n (even) panels.
inline long double simpson(const std::function<long double(long double)>& f, long double a,
                           long double b, int n) {
  const long double h = (b - a) / n;
  long double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0L : 2.0L) * f(a + i * h);
  return s * h / 3.0L;
}

inline cld simpson_c(const std::function<cld(long double)>& f, long double a, long double b, int n) {
  const long double h = (b - a) / n;
  cld s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0L : 2.0L) * f(a + i * h);
  return s * (h / 3.0L);
}

// (2 pi)^{-1/2} int |xi|^gamma e^{i(t xi^3 + x xi)} uhat(xi) dxi on [a, b].
inline cld airy_point(const std::function<cld(long double)>& uhat, long double gamma, long double t,
                      long double x, long double a, long double b, int panels) {
  auto f = [&](long double xi) {
    const long double w = xi == 0.0L ? (gamma == 0.0L ? 1.0L : 0.0L) : std::pow(std::fabs(xi), gamma);
    return w * std::polar(1.0L, t * xi * xi * xi + x * xi) * uhat(xi);
  };
  return simpson_c(f, a, b, panels) / std::sqrt(2.0L * std::numbers::pi_v<long double>);
}

// Closed-form Schrodinger field of uhat = exp(-xi^2/2).
inline std::complex<double> gaussian_schrodinger(double t, double x) {
  const std::complex<double> d(1.0, -6.0 * t);
  return std::exp(-x * x / (2.0 * d)) / std::sqrt(d);
}

// Naive trapezoid weights.
inline std::vector<long double> trapezoid(long double a, long double b, int n) {
  std::vector<long double> w(n, (b - a) / (n - 1));
  w.front() *= 0.5L;
  w.back() *= 0.5L;
  return w;
}

}  // namespace oracle
