#ifndef LJLAT_SPECIAL_FUNCTIONS_HPP
#define LJLAT_SPECIAL_FUNCTIONS_HPP

#include <cstdint>
#include <vector>

// Scalar special functions underlying every lattice-sum term: the Riemann
// zeta function, divisor power sums, half-integer modified Bessel functions
// of the second kind, and analytic y-derivatives of the decaying kernel
// sqrt(y)*K_{n+1/2}(2*pi*m*y).

namespace ljlat {

// Half-integer Bessel order nu = n + 1/2, n >= 0.
struct HalfIntOrder {
    int n = 0;

    explicit HalfIntOrder(int n_);
    double nu() const { return n + 0.5; }
};

// One Fourier-kernel request: d^j/dy^j [ sqrt(y) * K_{order}(2*pi*harmonic*y) ].
struct KernelSpec {
    HalfIntOrder order;
    int harmonic = 1;     // Fourier index m >= 1
    int deriv_order = 0;  // j in 0..3

    KernelSpec(HalfIntOrder ord, int harm, int j);
};

// Exponentially decaying series e^{-a y} * sum_k coeff[k] * y^{-k}.
// The kernel sqrt(y)*K_{n+1/2}(a y) has exactly this shape, and the family
// is closed under d/dy, which is what makes every derivative order exact.
class ExpInversePoly {
  public:
    ExpInversePoly(double decay, std::vector<double> coeff);

    double eval(double y) const;
    ExpInversePoly derivative() const;

    double decay() const { return decay_; }
    const std::vector<double>& coeff() const { return coeff_; }

    // sqrt(y) * K_{order}(2*pi*harmonic*y) as an ExpInversePoly.
    static ExpInversePoly bessel_kernel(HalfIntOrder order, int harmonic);

  private:
    double decay_;
    std::vector<double> coeff_;
};

// Riemann zeta for real s > 1: partial sum plus integral tail estimate,
// absolute error <= tol. Throws std::domain_error for s <= 1.
double riemann_zeta(double s, double tol = 1e-14);

// sum of d^z over all positive divisors d of n. Throws for n <= 0.
double divisor_sigma(double z, long n);

// Closed-form K_{n+1/2}(x), x > 0 (finite sum, machine accuracy).
double bessel_k_half(HalfIntOrder order, double x);

// d^j/dy^j [ sqrt(y) * K_{nu}(2*pi*m*y) ], j = spec.deriv_order, y > 0.
double kernel_deriv(const KernelSpec& spec, double y);

}  // namespace ljlat

#endif
