#ifndef LJLAT_VERIFY_HPP
#define LJLAT_VERIFY_HPP

#include "ljlat/epstein.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Sampled numerical falsification of the quantitative inequalities that
// support the classification: sign conditions, uniform lower/upper bounds
// and located roots of the Fourier-coefficient combinations. Nothing here
// is a proof; a failed check means a defect either in the derivative
// evaluators or in the transcription of the inequality being checked.

namespace ljlat {

struct LemmaCheck {
    std::string lemma_id;
    std::string domain_description;
    long sample_count = 0;
    double bound = 0.0;
    // Signed slack against the bound, minimized over all samples:
    // >= 0 (within rounding) means the inequality held everywhere.
    double worst_margin = 0.0;
    double worst_x = 0.0;
    double worst_y = 0.0;
    bool passed = false;
    std::string note;  // transcription caveats, informational remarks
};

// d/dx (zeta(6,z) - b*zeta(3,z)) >= 0 over the fundamental-domain closure
// (b >= 3.062) or its y >= 1 part (b >= 3); informational for other b.
LemmaCheck check_x_monotonicity(double b, int samples, std::uint64_t seed = 12345);

// d2/dy2 (zeta(6,z) - b*zeta(3,z)) > 0 for b <= 3.06, plus the supporting
// bounds d2/dy2 zeta(3,z) >= 4 and the n-sum domination for y >= 1.
std::vector<LemmaCheck> check_y_convexity(double b, int samples, std::uint64_t seed = 12345);

// d2/dydx (zeta(6,z) - b*zeta(3,z)) > 0 for b <= 3.07 on the rectangle
// x in [0,1/2], y in [sqrt(3)/2, 1], plus its supporting scalar bounds.
std::vector<LemmaCheck> check_mixed_derivative(double b, int samples,
                                               std::uint64_t seed = 12345);

// The one-dimensional constant-bearing estimates: bounds on combinations
// of the half-line derivative functions and Fourier coefficient sums.
std::vector<LemmaCheck> check_scalar_lemmas(int samples = 500);

// Full battery with the parameter values the bounds are stated at.
std::vector<LemmaCheck> run_all_checks(int samples = 500, std::uint64_t seed = 12345);

// Fourier coefficient combinations; exposed for the cross-validation tests.
namespace verify_detail {
double P_n(int n, double y, double b);   // x-derivative coefficients
double A_n(int n, double y, double b);   // d2/dy2 coefficients, n >= 1
double A_0(double y, double b);          // d2/dy2 polynomial part
double B_n(int n, double y, double b);   // mixed-derivative coefficients
double eps_tail_x(double y);             // n >= 4 kernel tail, x-derivative form
double eps_tail_mixed(double y);         // n >= 4 kernel tail, mixed form
double Y_axis(double y);                 // Wronskian-type combination on x = 0
}  // namespace verify_detail

}  // namespace ljlat

#endif
