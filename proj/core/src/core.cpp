#include "airylab/core.hpp"

#include <cmath>
#include <string>

namespace airylab {

namespace {

constexpr double kExponentTol = 1e-12;

void require_finite(std::span<const cplx> v, const char* what) {
  for (const cplx& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError(std::string(what) + ": non-finite sample");
    }
  }
}

}  // namespace

bool ExponentTriple::critical() const { return std::abs(gamma - 1.0 / p) <= kExponentTol; }

ExponentTriple make_exponents(double p, double gamma) {
  if (!(p > 4.0) || !std::isfinite(p)) throw DomainError("make_exponents: need 4 < p < inf");
  if (!(gamma > -0.5) || gamma > 1.0 / p + kExponentTol) {
    throw DomainError("make_exponents: need -1/2 < gamma <= 1/p");
  }
  const double inv_q = 0.5 + gamma - 3.0 / p;
  if (!(inv_q > 0.0)) throw DomainError("make_exponents: resulting q is infinite");
  const double q = 1.0 / inv_q;
  if (q < 2.0 - kExponentTol) throw DomainError("make_exponents: resulting q < 2");
  return {gamma, p, q};
}

ExponentTriple critical_exponents(double p) {
  ExponentTriple e = make_exponents(p, 1.0 / p);
  e.q = 2.0 * p / (p - 4.0);
  return e;
}

FreqGrid::FreqGrid(double xi_min, double xi_max, std::size_t n)
    : xi_min_(xi_min), xi_max_(xi_max), n_(n), step_(0.0) {
  if (!(xi_min < xi_max)) throw DomainError("FreqGrid: need xi_min < xi_max");
  if (n < 2) throw DomainError("FreqGrid: need n >= 2");
  step_ = (xi_max - xi_min) / static_cast<double>(n - 1);
}

double FreqGrid::node(std::size_t j) const {
  if (j + 1 == n_) return xi_max_;
  return xi_min_ + static_cast<double>(j) * step_;
}

double FreqGrid::weight(std::size_t j) const {
  return (j == 0 || j + 1 == n_) ? 0.5 * step_ : step_;
}

std::vector<double> FreqGrid::nodes() const {
  std::vector<double> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = node(j);
  return out;
}

std::vector<double> FreqGrid::weights() const {
  std::vector<double> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = weight(j);
  return out;
}

bool FreqGrid::symmetric() const {
  return n_ % 2 == 1 && std::abs(xi_min_ + xi_max_) <= 1e-12 * std::abs(xi_max_);
}

std::size_t FreqGrid::index_of(double x) const {
  const double r = (x - xi_min_) / step_;
  const double k = std::round(r);
  if (k < 0.0 || k > static_cast<double>(n_ - 1) || std::abs(r - k) > 1e-9) return npos;
  return static_cast<std::size_t>(k);
}

FreqProfile::FreqProfile(FreqGrid grid, std::vector<cplx> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) throw DomainError("FreqProfile: sample count != grid size");
  require_finite(samples_, "FreqProfile");
}

FreqProfile FreqProfile::zeros(const FreqGrid& grid) {
  return {grid, std::vector<cplx>(grid.size())};
}

FreqProfile FreqProfile::scaled(cplx c) const {
  std::vector<cplx> s(samples_);
  for (auto& z : s) z *= c;
  return {grid_, std::move(s)};
}

double l2_mass(const FreqProfile& u) {
  std::vector<double> terms(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) terms[j] = u.grid().weight(j) * std::norm(u[j]);
  return pairwise_sum(terms);
}

bool conjugate_symmetric(const FreqProfile& u, double tol) {
  const auto& g = u.grid();
  if (!g.symmetric()) return false;
  const std::size_t n = g.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(u[j] - std::conj(u[n - 1 - j])) > tol) return false;
  }
  return true;
}

double Axis::node(std::size_t i) const {
  if (i + 1 == n) return max;
  return min + static_cast<double>(i) * step();
}

std::vector<double> Axis::nodes() const {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = node(i);
  return out;
}

std::vector<double> quadrature_weights(const Axis& axis, Quadrature rule) {
  const std::size_t n = axis.n;
  const double h = axis.step();
  std::vector<double> w(n, h);
  if (rule == Quadrature::trapezoid) {
    w.front() = w.back() = 0.5 * h;
    return w;
  }
  for (std::size_t i = 0; i < n; ++i) w[i] = (i % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
  w.front() = w.back() = h / 3.0;
  return w;
}

SpaceTimeGrid::SpaceTimeGrid(Axis t, Axis x, Quadrature rule) : t_(t), x_(x), rule_(rule) {
  for (const Axis* a : {&t_, &x_}) {
    if (!(a->min < a->max)) throw DomainError("SpaceTimeGrid: empty window");
    if (a->n < 2) throw DomainError("SpaceTimeGrid: need at least 2 nodes per axis");
    if (rule == Quadrature::simpson && a->n % 2 == 0) {
      throw DomainError("SpaceTimeGrid: Simpson rule needs odd node counts");
    }
  }
}

SpaceTimeGrid SpaceTimeGrid::centered(double t_half, std::size_t nt, double x_half, std::size_t nx,
                                      Quadrature rule) {
  return {Axis{-t_half, t_half, nt}, Axis{-x_half, x_half, nx}, rule};
}

SpaceTimeField::SpaceTimeField(SpaceTimeGrid grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.t().n * grid_.x().n) {
    throw DomainError("SpaceTimeField: value count != nt * nx");
  }
  require_finite(values_, "SpaceTimeField");
}

SpaceTimeField SpaceTimeField::operator+(const SpaceTimeField& other) const {
  if (!(grid_ == other.grid_)) throw GridMismatch("SpaceTimeField: grids differ");
  std::vector<cplx> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.values_[i];
  return {grid_, std::move(v)};
}

SpaceTimeField SpaceTimeField::operator-(const SpaceTimeField& other) const {
  return *this + other.scaled(-1.0);
}

SpaceTimeField SpaceTimeField::scaled(cplx c) const {
  std::vector<cplx> v(values_);
  for (auto& z : v) z *= c;
  return {grid_, std::move(v)};
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 16) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace airylab
