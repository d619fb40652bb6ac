#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace airylab {

using cplx = std::complex<double>;

// Error taxonomy. DomainError and its subclasses map to CLI exit code 2,
// NumericalFailure to exit code 3.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct SupportViolation : DomainError {
  SupportViolation(const std::string& what, std::vector<std::size_t> nodes)
      : DomainError(what), offending_nodes(std::move(nodes)) {}
  std::vector<std::size_t> offending_nodes;
};
struct WindowOverflow : DomainError {
  using DomainError::DomainError;
};
struct GridMismatch : DomainError {
  using DomainError::DomainError;
};
struct GridAsymmetry : DomainError {
  using DomainError::DomainError;
};
struct SupportOverlap : DomainError {
  using DomainError::DomainError;
};
struct PreconditionViolation : DomainError {
  using DomainError::DomainError;
};
struct EmptyFamily : DomainError {
  using DomainError::DomainError;
};
struct SingularPoint : DomainError {
  using DomainError::DomainError;
};
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exponents (gamma, p, q) tied by -gamma + 3/p + 1/q = 1/2.
struct ExponentTriple {
  double gamma;
  double p;
  double q;

  [[nodiscard]] bool critical() const;
};

ExponentTriple make_exponents(double p, double gamma);
// Critical triple, gamma = 1/p.
ExponentTriple critical_exponents(double p);

// Uniform frequency grid with trapezoid weights.
class FreqGrid {
 public:
  FreqGrid(double xi_min, double xi_max, std::size_t n);

  [[nodiscard]] double xi_min() const { return xi_min_; }
  [[nodiscard]] double xi_max() const { return xi_max_; }
  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] double step() const { return step_; }
  [[nodiscard]] double node(std::size_t j) const;
  [[nodiscard]] double weight(std::size_t j) const;
  [[nodiscard]] std::vector<double> nodes() const;
  [[nodiscard]] std::vector<double> weights() const;
  // xi_min = -xi_max with odd n, so node j mirrors node n-1-j.
  [[nodiscard]] bool symmetric() const;
  // Index of the node equal to x up to a relative 1e-9 of the step, or npos.
  [[nodiscard]] std::size_t index_of(double x) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const FreqGrid&, const FreqGrid&) = default;

 private:
  double xi_min_;
  double xi_max_;
  std::size_t n_;
  double step_;
};

class FreqProfile {
 public:
  FreqProfile(FreqGrid grid, std::vector<cplx> samples);
  static FreqProfile zeros(const FreqGrid& grid);

  template <class F>
  static FreqProfile sample(const FreqGrid& grid, F&& f) {
    std::vector<cplx> s(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) s[j] = f(grid.node(j));
    return {grid, std::move(s)};
  }

  [[nodiscard]] const FreqGrid& grid() const { return grid_; }
  [[nodiscard]] std::span<const cplx> samples() const { return samples_; }
  [[nodiscard]] std::size_t size() const { return samples_.size(); }
  [[nodiscard]] cplx operator[](std::size_t j) const { return samples_[j]; }

  [[nodiscard]] FreqProfile scaled(cplx c) const;

 private:
  FreqGrid grid_;
  std::vector<cplx> samples_;
};

double l2_mass(const FreqProfile& u);
bool conjugate_symmetric(const FreqProfile& u, double tol = 1e-12);

enum class Quadrature { trapezoid, simpson };

struct Axis {
  double min;
  double max;
  std::size_t n;

  [[nodiscard]] double step() const { return (max - min) / static_cast<double>(n - 1); }
  [[nodiscard]] double node(std::size_t i) const;
  [[nodiscard]] std::vector<double> nodes() const;
  friend bool operator==(const Axis&, const Axis&) = default;
};

std::vector<double> quadrature_weights(const Axis& axis, Quadrature rule);

class SpaceTimeGrid {
 public:
  SpaceTimeGrid(Axis t, Axis x, Quadrature rule = Quadrature::trapezoid);
  // Symmetric window [-T,T] x [-X,X].
  static SpaceTimeGrid centered(double t_half, std::size_t nt, double x_half, std::size_t nx,
                                Quadrature rule = Quadrature::trapezoid);

  [[nodiscard]] const Axis& t() const { return t_; }
  [[nodiscard]] const Axis& x() const { return x_; }
  [[nodiscard]] Quadrature rule() const { return rule_; }
  [[nodiscard]] std::vector<double> t_weights() const { return quadrature_weights(t_, rule_); }
  [[nodiscard]] std::vector<double> x_weights() const { return quadrature_weights(x_, rule_); }

  friend bool operator==(const SpaceTimeGrid&, const SpaceTimeGrid&) = default;

 private:
  Axis t_;
  Axis x_;
  Quadrature rule_;
};

// nt x nx complex samples, row-major in t.
class SpaceTimeField {
 public:
  SpaceTimeField(SpaceTimeGrid grid, std::vector<cplx> values);

  [[nodiscard]] const SpaceTimeGrid& grid() const { return grid_; }
  [[nodiscard]] std::size_t nt() const { return grid_.t().n; }
  [[nodiscard]] std::size_t nx() const { return grid_.x().n; }
  [[nodiscard]] cplx operator()(std::size_t i, std::size_t k) const { return values_[i * nx() + k]; }
  [[nodiscard]] std::span<const cplx> row(std::size_t i) const {
    return std::span<const cplx>(values_).subspan(i * nx(), nx());
  }
  [[nodiscard]] std::span<const cplx> values() const { return values_; }

  [[nodiscard]] SpaceTimeField operator+(const SpaceTimeField& other) const;
  [[nodiscard]] SpaceTimeField operator-(const SpaceTimeField& other) const;
  [[nodiscard]] SpaceTimeField scaled(cplx c) const;

 private:
  SpaceTimeGrid grid_;
  std::vector<cplx> values_;
};

// Pairwise summation; fixed split order gives run-to-run identical results.
double pairwise_sum(std::span<const double> v);

}  // namespace airylab
