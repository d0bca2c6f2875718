#include "ljlat/epstein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ljlat {

namespace {

constexpr double kMinY = 1e-6;

void require_point(const UpperHalfPoint& z) {
    if (!(z.y > 0.0)) throw std::domain_error("UpperHalfPoint: y must be positive");
    if (z.y < kMinY)
        throw std::domain_error("UpperHalfPoint: y below 1e-6; reduce the point first");
    if (!std::isfinite(z.x) || !std::isfinite(z.y))
        throw std::domain_error("UpperHalfPoint: coordinates must be finite");
}

struct CsConstants {
    double xi_2s;       // zeta(2s)
    double xi_2s_m1;    // zeta(2s-1)
    double gamma_half;  // Gamma(s - 1/2)
    double gamma_s;     // Gamma(s)
    HalfIntOrder order; // s - 1/2
};

// Only s in {3, 6} arise on the classified path; their Gamma values are
// closed forms.
const CsConstants& cs_constants(double s) {
    static const CsConstants c3 = {
        riemann_zeta(6.0, 1e-15), riemann_zeta(5.0, 1e-15),
        3.0 * std::sqrt(M_PI) / 4.0, 2.0, HalfIntOrder(2)};
    static const CsConstants c6 = {
        riemann_zeta(12.0, 1e-15), riemann_zeta(11.0, 1e-15),
        945.0 * std::sqrt(M_PI) / 32.0, 120.0, HalfIntOrder(5)};
    if (s == 3.0) return c3;
    if (s == 6.0) return c6;
    throw std::invalid_argument("zeta_cs: only s in {3, 6} has half-integer Bessel support");
}

double falling_factorial(double s, int q) {
    double f = 1.0;
    for (int i = 0; i < q; ++i) f *= (s - i);
    return f;
}

// Base kernels, cached per harmonic; grid sweeps hit these millions of
// times. Null when the harmonic exceeds the cache.
const ExpInversePoly* cached_kernel(const HalfIntOrder& order, int harmonic) {
    auto build = [](int n_ord) {
        std::vector<ExpInversePoly> v;
        v.reserve(512);
        for (int m = 1; m <= 512; ++m)
            v.push_back(ExpInversePoly::bessel_kernel(HalfIntOrder(n_ord), m));
        return v;
    };
    static const std::vector<ExpInversePoly> k52 = build(2);
    static const std::vector<ExpInversePoly> k112 = build(5);
    if (harmonic <= 512 && (order.n == 2 || order.n == 5))
        return &(order.n == 2 ? k52 : k112)[harmonic - 1];
    return nullptr;
}

// Divisor sums sigma_{-5} and sigma_{-11} for small n, cached.
double cached_sigma(double z, int n) {
    auto build = [](double zz) {
        std::vector<double> v;
        v.reserve(512);
        for (int m = 1; m <= 512; ++m) v.push_back(divisor_sigma(zz, m));
        return v;
    };
    static const std::vector<double> s5 = build(-5.0);
    static const std::vector<double> s11 = build(-11.0);
    if (n <= 512) {
        if (z == -5.0) return s5[n - 1];
        if (z == -11.0) return s11[n - 1];
    }
    return divisor_sigma(z, n);
}

// Core Fourier-expansion evaluator for d^p/dx^p d^q/dy^q zeta(s, x+iy):
//   zeta(s,z) = 2*xi(2s)*y^s + 2*sqrt(pi)*Gamma(s-1/2)/Gamma(s)*xi(2s-1)*y^{1-s}
//             + (8*pi^s/Gamma(s)) * sum_{n>=1} n^{s-1/2} sigma_{1-2s}(n)
//                                   * sqrt(y)*K_{s-1/2}(2*pi*n*y) * cos(2*pi*n*x)
// differentiated term by term.
double cs_partial(double s, double x, double y, int p, int q, const SeriesControl& ctl) {
    const CsConstants& c = cs_constants(s);
    double acc = 0.0;

    if (p == 0) {
        const double lead = 2.0 * c.xi_2s;
        const double sub = 2.0 * std::sqrt(M_PI) * c.gamma_half / c.gamma_s * c.xi_2s_m1;
        acc += lead * falling_factorial(s, q) * std::pow(y, s - q);
        acc += sub * falling_factorial(1.0 - s, q) * std::pow(y, 1.0 - s - q);
    }

    const double pref = 8.0 * std::pow(M_PI, s) / c.gamma_s;
    const double stop = ctl.tol / 10.0;
    int quiet = 0;
    for (int n = 1; n <= ctl.max_fourier_terms; ++n) {
        const ExpInversePoly* base = cached_kernel(c.order, n);
        double radial_kernel;
        if (q == 0 && base != nullptr) {
            radial_kernel = base->eval(y);
        } else {
            ExpInversePoly kern =
                base != nullptr ? *base : ExpInversePoly::bessel_kernel(c.order, n);
            for (int i = 0; i < q; ++i) kern = kern.derivative();
            radial_kernel = kern.eval(y);
        }
        const double coef =
            pref * std::pow(static_cast<double>(n), s - 0.5) * cached_sigma(1.0 - 2.0 * s, n);
        const double radial = coef * radial_kernel;
        const double w = 2.0 * M_PI * n;
        double trig;
        switch (p) {
            case 0: trig = std::cos(w * x); break;
            case 1: trig = -w * std::sin(w * x); break;
            case 2: trig = -w * w * std::cos(w * x); break;
            default: throw std::invalid_argument("zeta_partial: dx_order must be in 0..2");
        }
        acc += radial * trig;
        const double bound = std::abs(radial) * std::pow(w, p);
        if (bound < stop) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
    }
    return acc;
}

}  // namespace

DirectSumResult zeta_direct_sum(double s, UpperHalfPoint z, const SeriesControl& ctl) {
    if (s <= 1.0) throw std::domain_error("zeta_direct: sum diverges for s <= 1");
    require_point(z);
    const int N = ctl.direct_cutoff;
    if (N < 1) throw std::domain_error("zeta_direct: direct_cutoff must be >= 1");

    const double x = z.x, y = z.y;
    double sum = 0.0;
    for (int m = -N; m <= N; ++m) {
        const double mx = m * x, my2 = static_cast<double>(m) * m * y * y;
        double row = 0.0;
        for (int n = -N; n <= N; ++n) {
            if (m == 0 && n == 0) continue;
            const double q = (mx + n) * (mx + n) + my2;
            row += std::pow(q, -s);
        }
        sum += row;
    }
    // Quadratic form Q(m,n) = (mx+n)^2 + (my)^2 >= lambda*(m^2+n^2), lambda
    // the least eigenvalue of [[x^2+y^2, x],[x, 1]]; discarded terms have
    // m^2+n^2 > N^2 and are bounded by the radial integral.
    const double tr = x * x + y * y + 1.0;
    const double det = y * y;
    const double lambda = 0.5 * (tr - std::sqrt(tr * tr - 4.0 * det));
    const double R = std::max(1.0, static_cast<double>(N) - 1.0);
    const double tail =
        std::pow(y, s) * (2.0 * M_PI / (2.0 * s - 2.0)) * std::pow(lambda, -s) *
        std::pow(R, 2.0 - 2.0 * s);
    return {std::pow(y, s) * sum, tail};
}

double zeta_direct(double s, UpperHalfPoint z, const SeriesControl& ctl) {
    return zeta_direct_sum(s, z, ctl).value;
}

double zeta_cs(double s, UpperHalfPoint z, const SeriesControl& ctl) {
    if (s <= 1.0) throw std::domain_error("zeta_cs: diverges for s <= 1");
    require_point(z);
    return cs_partial(s, z.x, z.y, 0, 0, ctl);
}

double zeta_partial(double s, UpperHalfPoint z, ZetaDeriv d, const SeriesControl& ctl) {
    if (s != 3.0 && s != 6.0)
        throw std::invalid_argument("zeta_partial: only s in {3, 6} supported");
    require_point(z);
    if (d.dx_order < 0 || d.dx_order > 2 || d.dy_order < 0 || d.dy_order > 3 ||
        d.dx_order + d.dy_order > 3)
        throw std::invalid_argument("zeta_partial: unsupported derivative order");
    return cs_partial(s, z.x, z.y, d.dx_order, d.dy_order, ctl);
}

double w_b(double s1, double s2, double b, UpperHalfPoint z, const SeriesControl& ctl) {
    if (!(s1 > s2 && s2 > 1.0))
        throw std::domain_error("w_b: requires s1 > s2 > 1");
    require_point(z);
    const bool fast = (s1 == 3.0 || s1 == 6.0) && (s2 == 3.0 || s2 == 6.0);
    if (fast) return zeta_cs(s1, z, ctl) - b * zeta_cs(s2, z, ctl);

    // Generic exponents: direct summation, cutoff widened until the slower
    // tail (exponent s2) is below tolerance.
    const double tr = z.x * z.x + z.y * z.y + 1.0;
    const double det = z.y * z.y;
    const double lambda = 0.5 * (tr - std::sqrt(tr * tr - 4.0 * det));
    const double pref =
        std::pow(z.y, s2) * (2.0 * M_PI / (2.0 * s2 - 2.0)) * std::pow(lambda, -s2) *
        std::max(1.0, std::abs(b));
    double n_needed = std::pow(pref / std::max(ctl.tol, 1e-13), 1.0 / (2.0 * s2 - 2.0)) + 2.0;
    SeriesControl wide = ctl;
    wide.direct_cutoff = static_cast<int>(
        std::clamp(n_needed, static_cast<double>(ctl.direct_cutoff), 2000.0));
    return zeta_direct(s1, z, wide) - b * zeta_direct(s2, z, wide);
}

namespace detail {

double zeta_dy(double s, double x, double y, int order, const SeriesControl& ctl) {
    if (s != 3.0 && s != 6.0)
        throw std::invalid_argument("zeta_dy: only s in {3, 6} supported");
    if (!(y > 0.0)) throw std::domain_error("zeta_dy: y must be positive");
    if (order < 0 || order > 6) throw std::invalid_argument("zeta_dy: order out of range");
    return cs_partial(s, x, y, 0, order, ctl);
}

double xi(int s) {
    switch (s) {
        case 5: return cs_constants(3.0).xi_2s_m1;
        case 6: return cs_constants(3.0).xi_2s;
        case 11: return cs_constants(6.0).xi_2s_m1;
        case 12: return cs_constants(6.0).xi_2s;
        default: throw std::invalid_argument("xi: cached only for s in {5, 6, 11, 12}");
    }
}

}  // namespace detail

}  // namespace ljlat
