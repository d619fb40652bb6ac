#include "airylab/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "airylab/norms.hpp"
#include "airylab/propagators.hpp"

namespace airylab {

namespace {

using big = boost::multiprecision::checked_int256_t;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

}  // namespace

DyadicInterval DyadicInterval::parent() const { return {floor_div(k, 2), ell + 1}; }
double DyadicInterval::lo() const { return std::ldexp(static_cast<double>(k), ell); }
double DyadicInterval::hi() const { return std::ldexp(static_cast<double>(k + 1), ell); }
double DyadicInterval::center() const { return std::ldexp(static_cast<double>(k) + 0.5, ell); }
double DyadicInterval::length() const { return std::ldexp(1.0, ell); }

std::string DyadicInterval::str() const {
  return "[" + std::to_string(k) + "," + std::to_string(k + 1) + ")*2^" + std::to_string(ell);
}

bool adjacent(const DyadicInterval& a, const DyadicInterval& b) {
  return a.ell == b.ell && iabs(a.k - b.k) == 1;
}

bool sim_related(const DyadicInterval& a, const DyadicInterval& b) {
  if (a.ell != b.ell) return false;
  if (adjacent(a, b)) return false;
  const DyadicInterval pa = a.parent();
  const DyadicInterval pb = b.parent();
  if (adjacent(pa, pb)) return false;
  return adjacent(pa.parent(), pb.parent());
}

Lemma34Result lemma34_check(const DyadicInterval& a, const DyadicInterval& b, int samples_per_interval) {
  if (!sim_related(a, b)) throw PreconditionViolation("lemma34_check: intervals are not ~-related");
  if (a.positive() != b.positive()) {
    throw PreconditionViolation("lemma34_check: intervals lie on opposite sides of 0");
  }
  if (samples_per_interval < 1) throw DomainError("lemma34_check: need samples_per_interval >= 1");

  // Units of 2^ell / (2S): interval [kM, (k+1)M), center kM + S, with M = 2S.
  const std::int64_t s = samples_per_interval;
  const std::int64_t m = 2 * s;
  const std::int64_t len = m;
  const std::int64_t ca = a.k * m + s;
  const std::int64_t cb = b.k * m + s;
  const std::int64_t csum = iabs(ca + cb);

  auto points = [&](const DyadicInterval& d) {
    std::vector<std::int64_t> pts;
    for (std::int64_t j = 0; j <= s; ++j) pts.push_back(d.k * m + 2 * j);
    return pts;
  };
  const auto pa = points(a);
  const auto pb = points(b);

  Lemma34Result r{true, true, true, true};
  for (std::int64_t eta : pa) r.point_bound = r.point_bound && iabs(eta) <= 2 * iabs(ca);
  r.center_bound = iabs(cb) <= 15 * iabs(ca);
  for (std::int64_t eta : pa) {
    for (std::int64_t eta2 : pb) {
      const std::int64_t sum = iabs(eta + eta2);
      const std::int64_t diff = iabs(eta - eta2);
      r.sum_bound = r.sum_bound && 4 * csum <= 5 * sum && 5 * sum <= 6 * csum;
      r.difference_bound = r.difference_bound && 2 * len <= diff && diff <= 8 * len;
    }
  }
  return r;
}

std::vector<SimPair> sim_pairs_in_window(int log2_hi, int ell_lo, int ell_hi) {
  if (ell_lo > ell_hi || log2_hi < ell_hi) throw DomainError("sim_pairs_in_window: bad ranges");
  std::vector<SimPair> out;
  for (int ell = ell_lo; ell <= ell_hi; ++ell) {
    const std::int64_t count = std::int64_t{1} << (log2_hi - ell);
    // k >= 1 keeps the interval inside (0, 2^log2_hi].
    for (std::int64_t k = 1; k < count; ++k) {
      for (std::int64_t k2 = k + 2; k2 <= std::min(count - 1, k + 16); ++k2) {
        const DyadicInterval a{k, ell};
        const DyadicInterval b{k2, ell};
        if (sim_related(a, b)) out.push_back({a, b});
      }
    }
  }
  return out;
}

Lemma34Scan lemma34_scan(int log2_hi, int ell_lo, int ell_hi, int samples_per_interval) {
  Lemma34Scan scan;
  for (const SimPair& p : sim_pairs_in_window(log2_hi, ell_lo, ell_hi)) {
    const DyadicInterval na{-p.first.k - 1, p.first.ell};
    const DyadicInterval nb{-p.second.k - 1, p.second.ell};
    for (const auto& [x, y] : {std::pair{p.first, p.second}, std::pair{p.second, p.first},
                               std::pair{na, nb}, std::pair{nb, na}}) {
      ++scan.pairs_checked;
      if (!lemma34_check(x, y, samples_per_interval).all()) ++scan.failures;
    }
  }
  return scan;
}

std::vector<int> covering_scales(std::int64_t eta_units, std::int64_t eta2_units, int unit_ell,
                                 int ell_lo, int ell_hi) {
  std::vector<int> out;
  auto containing = [&](std::int64_t v, int ell) {
    if (ell >= unit_ell) return DyadicInterval{floor_div(v, std::int64_t{1} << (ell - unit_ell)), ell};
    return DyadicInterval{v * (std::int64_t{1} << (unit_ell - ell)), ell};
  };
  for (int ell = ell_lo; ell <= ell_hi; ++ell) {
    if (sim_related(containing(eta_units, ell), containing(eta2_units, ell))) out.push_back(ell);
  }
  return out;
}

bool admissible_alpha(Rational alpha) {
  const std::int64_t a = alpha.num;
  const std::int64_t b = alpha.den;
  if (b <= 0 || a <= 0) return false;
  // alpha < 4, 3b - 35a > 0, 32b - 561a > 0.
  return a < 4 * b && 3 * b > 35 * a && 32 * b > 561 * a;
}

namespace {

// One dilated parallelogram in integer units U = 2^{ell_min - 1} / b:
// xi in [lo, hi]; 20b*omega between lower(xi) and upper(xi) where
// lower/upper = 15b (xi - C) C^2 + 5b C^3 + 4 slab C L^2.
struct ExactParallelogram {
  std::int64_t lo;
  std::int64_t hi;
  std::int64_t c;
  std::int64_t len;
};

ExactParallelogram exact_parallelogram(const SimPair& p, Rational alpha, int ell_min) {
  const int shift = p.first.ell - ell_min + 1;
  const std::int64_t b = alpha.den;
  const std::int64_t scale = b << shift;  // 2^ell / U = 2b * 2^{ell - ell_min}
  const std::int64_t c = (p.first.k + p.second.k + 1) * scale;
  const std::int64_t len = 2 * scale;
  // (1 + alpha) len / 2 = (b + a) 2^{ell - ell_min + 1}.
  const std::int64_t half = (b + alpha.num) << shift;
  return {c - half, c + half, c, len};
}

struct SlabBounds {
  big low;  // 4 (3b - 35a)
  big up;   // 4 (73b + 35a)
  big b;
};

big edge(const ExactParallelogram& r, const big& slab, const big& b, std::int64_t xi) {
  const big c = r.c;
  const big len = r.len;
  return 15 * b * (big(xi) - c) * c * c + 5 * b * c * c * c + slab * c * len * len;
}

bool exact_intersect(const ExactParallelogram& r1, const ExactParallelogram& r2, const SlabBounds& s) {
  const std::int64_t lo = std::max(r1.lo, r2.lo);
  const std::int64_t hi = std::min(r1.hi, r2.hi);
  if (lo > hi) return false;
  // g1 = upper2 - lower1, g2 = upper1 - lower2; both linear in xi.
  const big g1a = edge(r2, s.up, s.b, lo) - edge(r1, s.low, s.b, lo);
  const big g1b = edge(r2, s.up, s.b, hi) - edge(r1, s.low, s.b, hi);
  const big g2a = edge(r1, s.up, s.b, lo) - edge(r2, s.low, s.b, lo);
  const big g2b = edge(r1, s.up, s.b, hi) - edge(r2, s.low, s.b, hi);
  const bool s1a = g1a >= 0, s1b = g1b >= 0, s2a = g2a >= 0, s2b = g2b >= 0;
  if (!(s1a || s1b) || !(s2a || s2b)) return false;
  if ((s1a && s2a) || (s1b && s2b)) return true;
  // One set touches only lo, the other only hi: compare the two roots.
  if (s1a) return -g2a * (g1a - g1b) <= g1a * (g2b - g2a);
  return -g1a * (g2a - g2b) <= g2a * (g1b - g1a);
}

SlabBounds slab_bounds(Rational alpha) {
  const big a = alpha.num;
  const big b = alpha.den;
  return {4 * (3 * b - 35 * a), 4 * (73 * b + 35 * a), b};
}

void require_admissible(Rational alpha) {
  if (!admissible_alpha(alpha)) throw DomainError("parallelogram_overlap: inadmissible alpha");
}

}  // namespace

bool parallelograms_intersect(const SimPair& a, const SimPair& b, Rational alpha) {
  require_admissible(alpha);
  for (const SimPair* p : {&a, &b}) {
    if (!sim_related(p->first, p->second) || !p->first.positive() || !p->second.positive()) {
      throw PreconditionViolation("parallelograms_intersect: need ~-pairs in R_+");
    }
  }
  const int ell_min = std::min(a.first.ell, b.first.ell);
  return exact_intersect(exact_parallelogram(a, alpha, ell_min), exact_parallelogram(b, alpha, ell_min),
                         slab_bounds(alpha));
}

OverlapScan parallelogram_overlap(std::span<const SimPair> family, Rational alpha) {
  require_admissible(alpha);
  OverlapScan scan;
  scan.pairs = family.size();
  if (family.empty()) return scan;
  int ell_min = family.front().first.ell;
  for (const auto& p : family) {
    if (!sim_related(p.first, p.second) || !p.first.positive() || !p.second.positive()) {
      throw PreconditionViolation("parallelogram_overlap: family must hold ~-pairs in R_+");
    }
    ell_min = std::min(ell_min, p.first.ell);
  }
  std::vector<ExactParallelogram> rs;
  rs.reserve(family.size());
  for (const auto& p : family) rs.push_back(exact_parallelogram(p, alpha, ell_min));

  std::vector<std::size_t> order(rs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return rs[i].lo != rs[j].lo ? rs[i].lo < rs[j].lo : i < j;
  });
  std::vector<std::int64_t> sorted_lo(rs.size());
  for (std::size_t i = 0; i < order.size(); ++i) sorted_lo[i] = rs[order[i]].lo;

  // Any overlapping partner has lo >= (this lo) / ratio, with ratio the
  // largest hi/lo in the family; all lo are positive.
  double ratio = 1.0;
  for (const auto& r : rs) {
    if (r.lo <= 0) throw PreconditionViolation("parallelogram_overlap: dilated interval reaches 0");
    ratio = std::max(ratio, static_cast<double>(r.hi) / static_cast<double>(r.lo));
  }
  ratio *= 1.0 + 1e-9;

  const SlabBounds slab = slab_bounds(alpha);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const auto& r = rs[i];
    const auto floor_lo = static_cast<std::int64_t>(std::floor(static_cast<double>(r.lo) / ratio)) - 1;
    auto it = std::lower_bound(sorted_lo.begin(), sorted_lo.end(), floor_lo);
    std::size_t count = 0;
    for (auto pos = static_cast<std::size_t>(it - sorted_lo.begin());
         pos < sorted_lo.size() && sorted_lo[pos] <= r.hi; ++pos) {
      const auto& other = rs[order[pos]];
      if (other.hi < r.lo) continue;
      ++scan.exact_tests;
      if (exact_intersect(r, other, slab)) ++count;
    }
    scan.max_overlap = std::max(scan.max_overlap, count);
  }
  return scan;
}

std::vector<DyadicInterval> default_family(const FreqProfile& u) {
  const auto& g = u.grid();
  std::size_t first = u.size();
  std::size_t last = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] != cplx{}) {
      first = std::min(first, j);
      last = j;
    }
  }
  std::vector<DyadicInterval> out;
  if (first == u.size()) return out;
  const double s_lo = g.node(first);
  const double s_hi = g.node(last);
  const int ell_lo = static_cast<int>(std::ceil(std::log2(g.step()) - 1e-12));
  const int ell_hi = static_cast<int>(std::floor(std::log2(g.xi_max() - g.xi_min()) + 1e-12));
  for (int ell = ell_lo; ell <= ell_hi; ++ell) {
    const double len = std::ldexp(1.0, ell);
    const auto k_lo = static_cast<std::int64_t>(std::floor(s_lo / len));
    const auto k_hi = static_cast<std::int64_t>(std::floor(s_hi / len));
    for (std::int64_t k = k_lo; k <= k_hi; ++k) out.push_back({k, ell});
  }
  return out;
}

RefinedFunctional refined_functional(const FreqProfile& u, const SpaceTimeGrid& grid,
                                     std::span<const DyadicInterval> family) {
  if (family.empty()) throw EmptyFamily("refined_functional: empty family");
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  RefinedFunctional out{0.0, 0.0, {}};
  for (const auto& I : family) {
    const FreqProfile ui = restrict_frequency(u, {I.lo(), I.hi()});
    const double scale = std::pow(std::abs(I.center()), -1.0 / 6.0) / std::sqrt(I.length());
    double sup = 0.0;
    stream_field(airy_kernel(ui, 1.0 / 6.0), grid, [&](std::size_t, std::span<const cplx> row) {
      for (const cplx& z : row) sup = std::max(sup, std::abs(z));
    });
    std::vector<double> l1(ui.size());
    for (std::size_t j = 0; j < ui.size(); ++j) {
      l1[j] = ui.grid().weight(j) * std::pow(std::abs(ui.grid().node(j)), 1.0 / 6.0) * std::abs(ui[j]);
    }
    const IntervalContribution row{I, scale * sup, scale * inv_sqrt_2pi * pairwise_sum(l1)};
    out.q = std::max(out.q, row.value);
    out.l1_bound_max = std::max(out.l1_bound_max, row.l1_bound);
    out.rows.push_back(row);
  }
  return out;
}

RefinedRatio refined_ratio(const FreqProfile& u, const SpaceTimeGrid& grid,
                           std::span<const DyadicInterval> family, int theta_points) {
  const RefinedFunctional rf = refined_functional(u, grid, family);
  if (!(rf.q > 0.0)) throw DomainError("refined_ratio: Q(u) vanishes");
  RefinedRatio out;
  out.q = rf.q;
  out.l6_norm = std::pow(kernel_norm_power(airy_kernel(u, 1.0 / 6.0), grid, 6.0, 6.0), 1.0 / 6.0);
  const double mass = l2_mass(u);
  for (int i = 1; i <= theta_points; ++i) {
    const double th = static_cast<double>(i) / (theta_points + 1);
    const double bound = std::pow(rf.q, th) * std::pow(mass, (1.0 - th) / 2.0);
    out.theta.push_back(th);
    out.bound.push_back(bound);
    out.ratio.push_back(out.l6_norm / bound);
  }
  return out;
}

double bilinear_ratio(const FreqProfile& u, const FreqProfile& v, const DyadicInterval& a,
                      const DyadicInterval& b, double q, const SpaceTimeGrid& grid) {
  if (!sim_related(a, b) || a.positive() != b.positive()) {
    throw PreconditionViolation("bilinear_ratio: need I ~ I' on one side of 0");
  }
  if (!(q >= 2.0 && q < 3.0)) throw DomainError("bilinear_ratio: need q in [2, 3)");
  const double mu = l2_mass(u);
  const double mv = l2_mass(v);
  if (mu == 0.0 || mv == 0.0) return 0.0;
  const SpaceTimeField fu = airy_extension(restrict_frequency(u, {a.lo(), a.hi()}), 1.0 / 6.0, grid);
  const SpaceTimeField fv = airy_extension(restrict_frequency(v, {b.lo(), b.hi()}), 1.0 / 6.0, grid);
  std::vector<cplx> prod(fu.values().size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = fu.values()[i] * fv.values()[i];
  const double num = mixed_norm(SpaceTimeField(grid, std::move(prod)), q, q);
  const double den = std::pow(std::abs(a.center()), 1.0 / 3.0 - 1.0 / q) *
                     std::pow(a.length(), 1.0 - 3.0 / q) * std::sqrt(mu * mv);
  return num / den;
}

}  // namespace airylab
