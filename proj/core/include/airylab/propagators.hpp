#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "airylab/core.hpp"

namespace airylab {

// A Fourier extension written as a finite phase sum
//   F(t,x) = sum_j coeff_j * exp(i (t * time_phase_j + x * freq_j)).
// Every propagator in this module reduces to one of these.
struct ExtensionKernel {
  std::vector<double> freq;
  std::vector<double> time_phase;
  std::vector<cplx> coeff;
  // Index of each term's node in the source profile grid.
  std::vector<std::size_t> node;

  [[nodiscard]] std::size_t size() const { return freq.size(); }
};

// |xi|^gamma exp(i(t xi^3 + x xi)); gamma <= -1/2 is rejected.
ExtensionKernel airy_kernel(const FreqProfile& u, double gamma);
// exp(i(3 t xi^2 + x xi)).
ExtensionKernel schrodinger_kernel(const FreqProfile& u);
// |1 + delta xi|^gamma exp(i(x xi + t(3 xi^2 + delta xi^3))).
ExtensionKernel approx_kernel(const FreqProfile& u, double gamma, double delta);

using RowSink = std::function<void(std::size_t row, std::span<const cplx> values)>;

// Evaluates the kernel row by row (fixed t) without holding the whole field.
void stream_field(const ExtensionKernel& k, const SpaceTimeGrid& grid, const RowSink& sink);
SpaceTimeField evaluate(const ExtensionKernel& k, const SpaceTimeGrid& grid);

// Adjoint of the phase sum without coefficients:
//   out_j = sum_{i,k} conj(exp(i(t_i time_phase_j + x_k freq_j))) * h(i,k).
// `h` is an nt x nx row-major array.
std::vector<cplx> adjoint_phase_sum(const ExtensionKernel& k, const SpaceTimeGrid& grid,
                                    std::span<const cplx> h);

SpaceTimeField airy_extension(const FreqProfile& u, double gamma, const SpaceTimeGrid& grid);
SpaceTimeField schrodinger_extension(const FreqProfile& u, const SpaceTimeGrid& grid);
SpaceTimeField approx_extension(const FreqProfile& u, double gamma, double delta,
                                const SpaceTimeGrid& grid);

struct Interval {
  double lo;
  double hi;
};

// Zeroes samples whose node lies outside [lo, hi).
FreqProfile restrict_frequency(const FreqProfile& u, Interval I);

struct SymmetryElement {
  double t0 = 0.0;
  double x0 = 0.0;
  double lambda0 = 1.0;
};

// u^(xi) -> lambda^{-1/2} e^{i x0 xi/lambda} e^{i t0 (xi/lambda)^3} u^(xi/lambda).
// This overload returns the result on the dilated grid
// [lambda xi_min, lambda xi_max], so nodes map to nodes exactly.
FreqProfile apply_symmetry(const SymmetryElement& g, const FreqProfile& u);
// Resamples onto `out_grid` by linear interpolation. Throws WindowOverflow if
// the dilated support leaves the output window.
FreqProfile apply_symmetry(const SymmetryElement& g, const FreqProfile& u, const FreqGrid& out_grid);
// Space-time window on which the field of g.u reproduces the samples of the
// field of u on `grid`: (t, x) -> ((t - t0)/lambda^3, (x - x0)/lambda).
SpaceTimeGrid pullback(const SpaceTimeGrid& grid, const SymmetryElement& g);

// Split f = f1 + i f2 into conjugate-symmetric parts. Needs a symmetric grid.
std::pair<FreqProfile, FreqProfile> symmetrize_real(const FreqProfile& u);

}  // namespace airylab
