#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ljlat/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace ljlat;

namespace {
double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("riemann_zeta closed-form values") {
    const double pi = M_PI;
    CHECK(std::abs(riemann_zeta(6.0) - std::pow(pi, 6) / 945.0) < 1e-14);
    CHECK(std::abs(riemann_zeta(12.0) - 691.0 * std::pow(pi, 12) / 638512875.0) < 1e-14);
    CHECK(std::abs(riemann_zeta(2.0) - pi * pi / 6.0) < 1e-12);
    CHECK(std::abs(riemann_zeta(5.0) - 1.0369277551433699) < 1e-13);
    CHECK(std::abs(riemann_zeta(11.0) - 1.0004941886041195) < 1e-14);
}

TEST_CASE("riemann_zeta rejects the divergent range") {
    CHECK_THROWS_AS(riemann_zeta(1.0), std::domain_error);
    CHECK_THROWS_AS(riemann_zeta(0.5), std::domain_error);
    CHECK_THROWS_AS(riemann_zeta(-3.0), std::domain_error);
}

TEST_CASE("divisor_sigma exact enumerations") {
    CHECK(divisor_sigma(-11.0, 1) == 1.0);
    CHECK(divisor_sigma(-11.0, 2) == doctest::Approx(1.00048828125).epsilon(1e-15));
    // divisors of 6: 1, 2, 3, 6
    const double expect = 1.0 + std::pow(2.0, -5) + std::pow(3.0, -5) + std::pow(6.0, -5);
    CHECK(divisor_sigma(-5.0, 6) == doctest::Approx(expect).epsilon(1e-15));
    CHECK(divisor_sigma(2.0, 12) == doctest::Approx(1.0 + 4 + 9 + 16 + 36 + 144).epsilon(1e-15));
    CHECK_THROWS_AS(divisor_sigma(-5.0, 0), std::domain_error);
    CHECK_THROWS_AS(divisor_sigma(-5.0, -4), std::domain_error);
}

TEST_CASE("bessel_k_half closed form") {
    // K_{1/2}(x) = sqrt(pi/2x) e^{-x}
    CHECK(rel_err(bessel_k_half(HalfIntOrder(0), 1.0), 0.46106850444789456) < 1e-14);
    CHECK(rel_err(bessel_k_half(HalfIntOrder(2), 2.0 * M_PI), 0.0014504947938778825) < 1e-13);
    CHECK(rel_err(bessel_k_half(HalfIntOrder(4), 3.7), 0.15501645631850451) < 1e-13);
    // order above the ones the expansion instantiates
    CHECK(rel_err(bessel_k_half(HalfIntOrder(6), 5.1), 0.11259760144155795) < 1e-13);
    CHECK_THROWS_AS(bessel_k_half(HalfIntOrder(2), 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k_half(HalfIntOrder(2), -1.0), std::domain_error);
    CHECK_THROWS_AS(HalfIntOrder(-1), std::domain_error);
}

TEST_CASE("bessel_k_half approaches the leading asymptotic form") {
    for (int n : {0, 2, 5}) {
        double prev = 1e300;
        for (double x : {1e2, 1e3, 1e4}) {
            const double asym = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x);
            const double dev = std::abs(bessel_k_half(HalfIntOrder(n), x) / asym - 1.0);
            CHECK(dev < prev);
            prev = dev;
        }
        CHECK(prev < 2e-3);
    }
}

TEST_CASE("kernel_deriv base value and closed-form cases") {
    // sqrt(1) K_{1/2}(2 pi) = (1/2) e^{-2 pi}
    const double v = kernel_deriv(KernelSpec(HalfIntOrder(0), 1, 0), 1.0);
    CHECK(rel_err(v, 0.5 * std::exp(-2.0 * M_PI)) < 1e-14);

    // frozen third-derivative spot values
    CHECK(rel_err(kernel_deriv(KernelSpec(HalfIntOrder(2), 1, 3), 0.8),
                  -2.0266871173141584) < 1e-12);
    CHECK(rel_err(kernel_deriv(KernelSpec(HalfIntOrder(5), 2, 3), 0.7),
                  -0.87750143539844288) < 1e-12);
    CHECK(rel_err(kernel_deriv(KernelSpec(HalfIntOrder(5), 1, 0), 1.0),
                  0.0078834529068992377) < 1e-12);
}

TEST_CASE("hardcoded first/second derivative forms match the symbolic route") {
    for (int order_n : {2, 5}) {
        for (int j : {1, 2}) {
            for (int m : {1, 2, 3, 5}) {
                ExpInversePoly k = ExpInversePoly::bessel_kernel(HalfIntOrder(order_n), m);
                for (int i = 0; i < j; ++i) k = k.derivative();
                for (double y = 0.4; y <= 3.0; y += 0.26) {
                    const double fast =
                        kernel_deriv(KernelSpec(HalfIntOrder(order_n), m, j), y);
                    CHECK(rel_err(fast, k.eval(y)) < 5e-14);
                }
            }
        }
    }
}

TEST_CASE("complete monotonicity: j-th derivative has sign (-1)^j") {
    for (int order_n : {2, 5}) {
        for (int m : {1, 2, 3}) {
            for (int j = 0; j <= 3; ++j) {
                const double sign = (j % 2 == 0) ? 1.0 : -1.0;
                for (int i = 0; i < 200; ++i) {
                    const double y = 0.5 + 4.5 * i / 199.0;
                    const double v = kernel_deriv(KernelSpec(HalfIntOrder(order_n), m, j), y);
                    CHECK(sign * v > 0.0);
                }
            }
        }
    }
}

TEST_CASE("kernel derivatives agree with central differences of the lower order") {
    const double h = 1e-5;
    for (int order_n : {2, 5}) {
        for (int m : {1, 2, 3}) {
            for (int j : {1, 2, 3}) {
                for (double y : {0.6, 0.9, 1.4, 2.2}) {
                    const KernelSpec lower(HalfIntOrder(order_n), m, j - 1);
                    const double fd =
                        (kernel_deriv(lower, y + h) - kernel_deriv(lower, y - h)) / (2.0 * h);
                    const double an = kernel_deriv(KernelSpec(HalfIntOrder(order_n), m, j), y);
                    CHECK(rel_err(fd, an) < 1e-6);
                }
            }
        }
    }
}

TEST_CASE("kernel ratio decay and order-ratio bounds") {
    // K_{11/2}(2 pi n y) / K_{11/2}(2 pi y) <= e^{-2 pi (n-1) y}
    for (int n = 2; n <= 6; ++n) {
        for (double y = 0.5; y <= 3.0; y += 0.1) {
            const double r = bessel_k_half(HalfIntOrder(5), 2.0 * M_PI * n * y) /
                             bessel_k_half(HalfIntOrder(5), 2.0 * M_PI * y);
            CHECK(r <= std::exp(-2.0 * M_PI * (n - 1) * y) * (1.0 + 1e-12));
        }
    }
    // 1 < K_{11/2}(2 pi y) / K_{5/2}(2 pi y); <= 5.45 for y >= 1
    for (double y = 0.05; y <= 4.0; y += 0.07) {
        const double r = bessel_k_half(HalfIntOrder(5), 2.0 * M_PI * y) /
                         bessel_k_half(HalfIntOrder(2), 2.0 * M_PI * y);
        CHECK(r > 1.0);
        if (y >= 1.0) CHECK(r <= 5.45);
    }
}

TEST_CASE("kernel_deriv input validation") {
    CHECK_THROWS_AS(kernel_deriv(KernelSpec(HalfIntOrder(2), 1, 1), 0.0), std::domain_error);
    CHECK_THROWS_AS(kernel_deriv(KernelSpec(HalfIntOrder(2), 1, 1), -0.5), std::domain_error);
    CHECK_THROWS_AS(KernelSpec(HalfIntOrder(2), 0, 1), std::domain_error);
    CHECK_THROWS_AS(KernelSpec(HalfIntOrder(2), 1, 4), std::domain_error);
    CHECK_THROWS_AS(KernelSpec(HalfIntOrder(2), 1, -1), std::domain_error);
}
