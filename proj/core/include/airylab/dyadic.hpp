#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "airylab/core.hpp"

namespace airylab {

// [k 2^ell, (k+1) 2^ell).
struct DyadicInterval {
  std::int64_t k;
  int ell;

  [[nodiscard]] DyadicInterval parent() const;
  [[nodiscard]] double lo() const;
  [[nodiscard]] double hi() const;
  [[nodiscard]] double center() const;
  [[nodiscard]] double length() const;
  // Entirely in (0, inf) or entirely in (-inf, 0].
  [[nodiscard]] bool positive() const { return k >= 0; }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
  friend auto operator<=>(const DyadicInterval&, const DyadicInterval&) = default;
};

bool adjacent(const DyadicInterval& a, const DyadicInterval& b);
bool sim_related(const DyadicInterval& a, const DyadicInterval& b);

struct Lemma34Result {
  bool point_bound;     // |eta| <= 2 |c(I)|
  bool center_bound;    // |c(I')| <= 15 |c(I)|
  bool sum_bound;       // 4/5 |c(I+I')| <= |eta + eta'| <= 6/5 |c(I+I')|
  bool difference_bound;  // 2|I| <= |eta - eta'| <= 8|I|

  [[nodiscard]] bool all() const { return point_bound && center_bound && sum_bound && difference_bound; }
};

// Checks on the closed intervals: both endpoints plus `samples_per_interval`
// equally spaced interior points, all in exact integer arithmetic.
Lemma34Result lemma34_check(const DyadicInterval& a, const DyadicInterval& b,
                            int samples_per_interval = 4);

struct SimPair {
  DyadicInterval first;
  DyadicInterval second;
};

// All unordered ~-pairs (first.k < second.k) of intervals inside (0, hi]
// with ell in [ell_lo, ell_hi]. `hi` must be a power of two >= 2^ell_hi.
std::vector<SimPair> sim_pairs_in_window(int log2_hi, int ell_lo, int ell_hi);

struct Lemma34Scan {
  std::size_t pairs_checked = 0;
  std::size_t failures = 0;
};

// Exhaustive lemma34 scan over sim_pairs_in_window, plus the mirrored pairs
// on the negative axis.
Lemma34Scan lemma34_scan(int log2_hi, int ell_lo, int ell_hi, int samples_per_interval = 4);

// Every ell in [ell_lo, ell_hi] at which the dyadic intervals of length
// 2^ell containing eta and eta' are ~-related. eta = eta_units * 2^unit_ell.
std::vector<int> covering_scales(std::int64_t eta_units, std::int64_t eta2_units, int unit_ell,
                                 int ell_lo, int ell_hi);

struct Rational {
  std::int64_t num;
  std::int64_t den;
};

// Admissible dilation: 0 < alpha < 4, 3/5 - 7 alpha > 0, 2/5 - 561/80 alpha > 0.
bool admissible_alpha(Rational alpha);

// Exact test of (1+alpha)R(I+I') intersecting (1+alpha)R(J+J').
bool parallelograms_intersect(const SimPair& a, const SimPair& b, Rational alpha);

struct OverlapScan {
  std::size_t pairs = 0;
  std::size_t max_overlap = 0;
  std::size_t exact_tests = 0;
};

// For each pair, the number of pairs in the family (itself included) whose
// dilated parallelograms meet its own; reports the maximum.
OverlapScan parallelogram_overlap(std::span<const SimPair> family, Rational alpha);

// Refined-functional diagnostics.
struct IntervalContribution {
  DyadicInterval interval;
  double value;     // |c(I)|^{-1/6} |I|^{-1/2} max_grid |Psi_{1/6}[u_I]|
  double l1_bound;  // |c(I)|^{-1/6} |I|^{-1/2} (2pi)^{-1/2} sum_I w |xi|^{1/6} |u^|
};

struct RefinedFunctional {
  double q;
  double l1_bound_max;
  std::vector<IntervalContribution> rows;
};

// Dyadic intervals meeting the profile support with 2^ell between the grid
// step and the window width.
std::vector<DyadicInterval> default_family(const FreqProfile& u);

RefinedFunctional refined_functional(const FreqProfile& u, const SpaceTimeGrid& grid,
                                     std::span<const DyadicInterval> family);

struct RefinedRatio {
  double l6_norm;
  double q;
  std::vector<double> theta;
  std::vector<double> bound;  // Q^theta * mass^{(1-theta)/2}
  std::vector<double> ratio;  // l6_norm / bound
};

RefinedRatio refined_ratio(const FreqProfile& u, const SpaceTimeGrid& grid,
                           std::span<const DyadicInterval> family, int theta_points = 9);

double bilinear_ratio(const FreqProfile& u, const FreqProfile& v, const DyadicInterval& a,
                      const DyadicInterval& b, double q, const SpaceTimeGrid& grid);

}  // namespace airylab
