#include "ljlat/minimizer.hpp"

#include "ljlat/modular.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace ljlat {

namespace {

const double kSqrt3Half = std::sqrt(3.0) / 2.0;
constexpr double kGuardBand = 1e-4;  // switch to series quotient near 0/0 points

struct RootResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
};

// Bracketing bisection refined by secant steps. The callers guarantee
// monotonicity on the bracket, so convergence is certain.
RootResult solve_bracketed(const std::function<double(double)>& f, double lo, double hi,
                           double flo, double fhi, double xtol, double ftol) {
    if (!(flo * fhi <= 0.0))
        throw std::runtime_error("solve_bracketed: endpoints do not straddle a sign change");
    RootResult r;
    double x = 0.5 * (lo + hi), fx = 0.0;
    for (int it = 0; it < 200; ++it) {
        // Secant proposal from the bracket endpoints, bisection fallback.
        double xs = hi - fhi * (hi - lo) / (fhi - flo);
        double mid = 0.5 * (lo + hi);
        x = (xs > lo + 0.01 * (hi - lo) && xs < hi - 0.01 * (hi - lo)) ? xs : mid;
        fx = f(x);
        r.iterations = it + 1;
        if (std::abs(fx) <= ftol || (hi - lo) <= xtol * std::max(1.0, std::abs(x))) break;
        if ((fx < 0.0) == (flo < 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
    }
    r.x = x;
    r.fx = fx;
    return r;
}

// Quotient of y-derivative series around a point where numerator and
// denominator of a derivative ratio both vanish:
//   N(e+d)/D(e+d) = (N1 + N2 d/2 + N3 d^2/6) / (D1 + D2 d/2 + D3 d^2/6),
// N_k = (k+1)-st y-derivative of zeta(6,.) at e, D_k likewise for zeta(3,.).
double limit_quotient(double x, double e, double delta, const SeriesControl& ctl) {
    const double n1 = detail::zeta_dy(6.0, x, e, 2, ctl);
    const double n2 = detail::zeta_dy(6.0, x, e, 3, ctl);
    const double n3 = detail::zeta_dy(6.0, x, e, 4, ctl);
    const double d1 = detail::zeta_dy(3.0, x, e, 2, ctl);
    const double d2 = detail::zeta_dy(3.0, x, e, 3, ctl);
    const double d3 = detail::zeta_dy(3.0, x, e, 4, ctl);
    const double num = n1 + 0.5 * n2 * delta + n3 * delta * delta / 6.0;
    const double den = d1 + 0.5 * d2 * delta + d3 * delta * delta / 6.0;
    return num / den;
}

double ratio_quotient(double x, double y, const SeriesControl& ctl, const char* who) {
    const double num = detail::zeta_dy(6.0, x, y, 1, ctl);
    const double den = detail::zeta_dy(3.0, x, y, 1, ctl);
    if (std::abs(den) < 1e-300)
        throw std::runtime_error(std::string(who) + ": derivative quotient is singular");
    return num / den;
}

}  // namespace

double ratio_X(double y, const SeriesControl& ctl) {
    if (!(y > 0.0)) throw std::domain_error("ratio_X: y must be positive");
    if (std::abs(y - 1.0) < kGuardBand) return limit_quotient(0.0, 1.0, y - 1.0, ctl);
    return ratio_quotient(0.0, y, ctl, "ratio_X");
}

double ratio_H(double y, const SeriesControl& ctl) {
    if (!(y >= 0.5 - 1e-12 && y <= kSqrt3Half + 1e-12))
        throw std::domain_error("ratio_H: y must be in [1/2, sqrt(3)/2]");
    y = std::clamp(y, 0.5, kSqrt3Half);
    if (y - 0.5 < kGuardBand) return limit_quotient(0.5, 0.5, y - 0.5, ctl);
    if (kSqrt3Half - y < kGuardBand)
        return limit_quotient(0.5, kSqrt3Half, y - kSqrt3Half, ctl);
    return ratio_quotient(0.5, y, ctl, "ratio_H");
}

double asymptotic_y(double b) {
    if (!(b > 0.0)) throw std::domain_error("asymptotic_y: b must be positive");
    return std::cbrt(detail::xi(6) / (2.0 * detail::xi(12)) * b);
}

BranchSolveReport solve_y_b(double b, double tol) {
    SeriesControl ctl;
    const double b3 = ratio_X(1.0, ctl);
    if (!(b > b3)) throw std::domain_error("solve_y_b: requires b > b3");

    double lo = 1.0, flo = b3 - b;  // X(1) = b3 < b
    double hi = std::max(2.0, 2.0 * asymptotic_y(b));
    double fhi = ratio_X(hi, ctl) - b;
    for (int i = 0; i < 60 && fhi < 0.0; ++i) {
        hi *= 2.0;
        fhi = ratio_X(hi, ctl) - b;
    }
    auto f = [&](double y) { return ratio_X(y, ctl) - b; };
    RootResult r = solve_bracketed(f, lo, hi, flo, fhi, std::min(tol, 1e-13), tol * b);
    return {b, r.x, r.fx, r.iterations, {lo, hi}};
}

namespace {

// y0 = interior minimum of H: root of W(y) = A'(y)B(y) - A(y)B'(y) with
// A, B the first y-derivatives of zeta(6, 1/2+iy), zeta(3, 1/2+iy).
double solve_y0(const SeriesControl& ctl, double tol) {
    auto W = [&](double y) {
        const double a1 = detail::zeta_dy(6.0, 0.5, y, 1, ctl);
        const double a2 = detail::zeta_dy(6.0, 0.5, y, 2, ctl);
        const double b1 = detail::zeta_dy(3.0, 0.5, y, 1, ctl);
        const double b2 = detail::zeta_dy(3.0, 0.5, y, 2, ctl);
        return a2 * b1 - a1 * b2;
    };
    const double lo = 0.6, hi = 0.8;
    RootResult r = solve_bracketed(W, lo, hi, W(lo), W(hi), std::min(tol, 1e-13), 0.0);
    return r.x;
}

double halfline_value(double b, double y, const SeriesControl& ctl) {
    UpperHalfPoint z{0.5, y};
    return zeta_cs(6.0, z, ctl) - b * zeta_cs(3.0, z, ctl);
}

BranchSolveReport solve_halfline_branch_impl(double b, double tol, double y0,
                                             const SeriesControl& ctl) {
    const double lo = 0.5 + 1e-9;
    const double flo = ratio_H(lo, ctl) - b;  // ~ b2 - b > 0
    const double fhi = ratio_H(y0, ctl) - b;  // ~ b0 - b < 0
    auto f = [&](double y) { return ratio_H(y, ctl) - b; };
    RootResult r = solve_bracketed(f, lo, y0, flo, fhi, std::min(tol, 1e-13), tol * b);
    return {b, r.x, r.fx, r.iterations, {lo, y0}};
}

}  // namespace

BranchSolveReport solve_halfline_branch(double b, double tol) {
    SeriesControl ctl;
    const double y0 = solve_y0(ctl, tol);
    const double b0 = ratio_H(y0, ctl);
    const double b2 = ratio_H(0.5, ctl);
    if (!(b > b0 && b < b2))
        throw std::domain_error("solve_halfline_branch: requires b0 < b < b2");
    return solve_halfline_branch_impl(b, tol, y0, ctl);
}

std::pair<double, double> solve_b1(double tol) {
    SeriesControl ctl;
    const double y0 = solve_y0(ctl, tol);
    const double b0 = ratio_H(y0, ctl);
    const double hex_6 = zeta_cs(6.0, {0.5, kSqrt3Half}, ctl);
    const double hex_3 = zeta_cs(3.0, {0.5, kSqrt3Half}, ctl);
    const double sq_6 = zeta_cs(6.0, {0.5, 0.5}, ctl);
    const double sq_3 = zeta_cs(3.0, {0.5, 0.5}, ctl);
    const double b15 = (sq_6 - hex_6) / (sq_3 - hex_3);

    auto f = [&](double b) {
        const double yb = solve_halfline_branch_impl(b, tol, y0, ctl).solution;
        return halfline_value(b, yb, ctl) - (hex_6 - b * hex_3);
    };
    const double lo = b0 + 1e-6, hi = b15 - 1e-6;
    const double flo = f(lo), fhi = f(hi);
    if (!(flo > 0.0 && fhi < 0.0))
        throw std::runtime_error("solve_b1: bracket lost its sign change");
    RootResult r = solve_bracketed(f, lo, hi, flo, fhi, std::min(tol, 1e-12), 0.0);
    const double y_b1 = solve_halfline_branch_impl(r.x, tol, y0, ctl).solution;
    return {r.x, y_b1};
}

Thresholds compute_thresholds(double tol) {
    SeriesControl ctl;
    Thresholds th;
    th.y0 = solve_y0(ctl, tol);
    th.b0 = ratio_H(th.y0, ctl);
    th.b2 = ratio_H(0.5, ctl);
    th.b_arc = ratio_H(kSqrt3Half, ctl);
    th.b3 = ratio_X(1.0, ctl);

    const double hex_6 = zeta_cs(6.0, {0.5, kSqrt3Half}, ctl);
    const double hex_3 = zeta_cs(3.0, {0.5, kSqrt3Half}, ctl);
    const double sq_6 = zeta_cs(6.0, {0.5, 0.5}, ctl);
    const double sq_3 = zeta_cs(3.0, {0.5, 0.5}, ctl);
    th.b1_5 = (sq_6 - hex_6) / (sq_3 - hex_3);

    auto [b1, y_b1] = solve_b1(tol);
    th.b1 = b1;
    th.y_b1 = y_b1;
    th.theta_b1 = halfline_to_angle(y_b1);

    const bool ordered = th.b0 < th.b1 && th.b1 < th.b1_5 && th.b1_5 < th.b2 &&
                         th.b2 < th.b_arc && th.b_arc < th.b3;
    if (!ordered) throw std::runtime_error("compute_thresholds: ordering invariant violated");
    return th;
}

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Hexagonal: return "hexagonal";
        case Phase::DegeneratePair: return "degenerate_pair";
        case Phase::Rhombic: return "rhombic";
        case Phase::Square: return "square";
        case Phase::Rectangular: return "rectangular";
    }
    return "?";
}

PhasePoint classify(double b, const Thresholds& th, double tol) {
    constexpr double kTieEps = 1e-9;
    const UpperHalfPoint hex{0.5, kSqrt3Half};
    PhasePoint out;
    if (std::abs(b - th.b1) <= kTieEps) {
        out.tag = Phase::DegeneratePair;
        out.theta = th.theta_b1;
        out.minimizers = {hex, {std::cos(th.theta_b1), std::sin(th.theta_b1)}};
        return out;
    }
    if (b < th.b1) {
        out.tag = Phase::Hexagonal;
        out.minimizers = {hex};
        return out;
    }
    if (b < th.b2) {
        out.tag = Phase::Rhombic;
        const double yh = solve_halfline_branch(b, tol).solution;
        const double theta = halfline_to_angle(yh);
        out.theta = theta;
        out.minimizers = {{std::cos(theta), std::sin(theta)}};
        return out;
    }
    if (b <= th.b3) {
        out.tag = Phase::Square;
        out.minimizers = {{0.0, 1.0}};
        return out;
    }
    out.tag = Phase::Rectangular;
    const double yb = solve_y_b(b, tol).solution;
    out.y = yb;
    out.minimizers = {{0.0, yb}};
    return out;
}

std::pair<UpperHalfPoint, double> brute_minimize(double s1, double s2, double b,
                                                 const GridSpec& grid) {
    if (!(s1 > s2 && s2 > 1.0)) throw std::domain_error("brute_minimize: requires s1 > s2 > 1");
    if (!(grid.step > 0.0)) throw std::domain_error("brute_minimize: empty grid");

    SeriesControl ctl;
    ctl.tol = 1e-10;
    double y_cap = grid.y_cap;
    if (y_cap <= 0.0) {
        double guess = (s1 == 6.0 && s2 == 3.0 && b > 0.0) ? asymptotic_y(b) : 1.0;
        y_cap = std::max(3.0, 3.0 * guess);
    }

    const double h = grid.step;
    UpperHalfPoint best{0.5, kSqrt3Half};
    double best_val = w_b(s1, s2, b, best, ctl);

    for (double x = 0.0; x <= 0.5 + 1e-15; x += h) {
        const double xx = std::min(x, 0.5);
        const double y_floor = std::sqrt(std::max(0.0, 1.0 - xx * xx));
        // Linear spacing up to 2, log spacing above; elongated minimizers sit
        // far up the imaginary axis for large b.
        for (double y = y_floor; y <= std::min(2.0, y_cap) + 1e-15; y += h) {
            const double v = w_b(s1, s2, b, {xx, y}, ctl);
            if (v < best_val) {
                best_val = v;
                best = {xx, y};
            }
        }
        if (y_cap > 2.0) {
            for (double y = 2.0 * (1.0 + h); y <= y_cap; y *= (1.0 + h)) {
                const double v = w_b(s1, s2, b, {xx, y}, ctl);
                if (v < best_val) {
                    best_val = v;
                    best = {xx, y};
                }
            }
        }
    }

    // Coordinate descent with shrinking steps; the minimum over the whole
    // half-plane is attained at (a group image of) the fundamental-domain
    // minimizer, so unconstrained moves are safe.
    double step = h;
    while (step > grid.refine_tol) {
        bool moved = false;
        const UpperHalfPoint trials[4] = {{best.x + step, best.y},
                                          {best.x - step, best.y},
                                          {best.x, best.y + step},
                                          {best.x, best.y - step}};
        for (const auto& t : trials) {
            if (t.y < 0.05) continue;
            const double v = w_b(s1, s2, b, t, ctl);
            if (v < best_val - 1e-16 * std::abs(best_val)) {
                best_val = v;
                best = t;
                moved = true;
            }
        }
        if (!moved) step *= 0.5;
    }
    ReduceResult red = reduce(best);
    best = red.position.point;
    return {best, best_val};
}

LJParams LJParams::from_epsilon_sigma(double epsilon, double sigma) {
    if (!(epsilon > 0.0)) throw std::domain_error("LJParams: epsilon must be positive");
    if (!(sigma > 0.0)) throw std::domain_error("LJParams: sigma must be positive");
    return {epsilon, sigma, std::pow(sigma, -6.0)};
}

double lj_energy(const LJParams& p, UpperHalfPoint z, const SeriesControl& ctl) {
    if (!(p.epsilon > 0.0 && p.sigma > 0.0)) throw std::domain_error("lj_energy: invalid params");
    return 2.0 * p.epsilon * std::pow(p.sigma, 12.0) * w_b(6.0, 3.0, p.b, z, ctl);
}

double betermin_A_to_b(double A) {
    if (!(A > 0.0)) throw std::domain_error("betermin_A_to_b: A must be positive");
    return 2.0 * A * A * A;
}

}  // namespace ljlat
