#ifndef LJLAT_EPSTEIN_HPP
#define LJLAT_EPSTEIN_HPP

#include "ljlat/special_functions.hpp"

// Epstein zeta function zeta(s,z) over unit-covolume planar lattices,
// its x/y partial derivatives, and the Lennard-Jones difference
// functional zeta(s1,z) - b*zeta(s2,z). Two evaluation routes: direct
// lattice summation (slow, any s > 1) and the exponentially convergent
// Fourier expansion with half-integer Bessel kernels (s in {3, 6}).

namespace ljlat {

// Point z = x + i y of the upper half-plane; parametrizes the lattice
// sqrt(1/y) * (Z + z Z).
struct UpperHalfPoint {
    double x = 0.0;
    double y = 1.0;
};

// Truncation policy for all infinite sums.
struct SeriesControl {
    double tol = 1e-12;        // absolute truncation tolerance
    int max_fourier_terms = 64;
    int direct_cutoff = 64;    // max |m|, |n| in the double sum
};

// Partial-derivative request d^{dx}/dx^{dx} d^{dy}/dy^{dy}.
struct ZetaDeriv {
    int dx_order = 0;  // 0..2
    int dy_order = 0;  // 0..3, dx_order + dy_order <= 3
};

struct DirectSumResult {
    double value = 0.0;
    double tail_bound = 0.0;  // rigorous bound on the discarded sum
};

// Truncated double sum over |m|,|n| <= ctl.direct_cutoff with an integral
// tail bound; the slow oracle. Throws std::domain_error for s <= 1 or y <= 0.
DirectSumResult zeta_direct_sum(double s, UpperHalfPoint z, const SeriesControl& ctl);
double zeta_direct(double s, UpperHalfPoint z, const SeriesControl& ctl);

// Fourier-expansion evaluation, absolute error <= ctl.tol. Supports s in
// {3, 6} (half-integer Bessel route); throws std::invalid_argument otherwise.
double zeta_cs(double s, UpperHalfPoint z, const SeriesControl& ctl);

// Term-wise analytic partial derivative of the Fourier expansion.
double zeta_partial(double s, UpperHalfPoint z, ZetaDeriv d, const SeriesControl& ctl);

// zeta(s1,z) - b*zeta(s2,z); fast route when both s are supported, direct
// summation with a widened cutoff otherwise. Requires s1 > s2 > 1.
double w_b(double s1, double s2, double b, UpperHalfPoint z, const SeriesControl& ctl);

namespace detail {

// Pure y-derivative of any order (the public ZetaDeriv surface stops at
// combined order 3; the ratio solvers need one more order at their 0/0
// points). s in {3, 6}.
double zeta_dy(double s, double x, double y, int order, const SeriesControl& ctl);

// Cached zeta constants of the two supported exponents.
double xi(int s);  // Riemann zeta at integer s in {5, 6, 11, 12}

}  // namespace detail

}  // namespace ljlat

#endif
