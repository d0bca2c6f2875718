#ifndef LJLAT_MINIMIZER_HPP
#define LJLAT_MINIMIZER_HPP

#include "ljlat/epstein.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

// Classification machinery for min over z of zeta(6,z) - b*zeta(3,z):
// the critical-ratio functions on the imaginary axis and on the half-line
// x = 1/2, the thresholds separating the five minimizer branches, branch
// solvers, the complete phase classifier, physical-unit wrappers, and a
// brute-force grid minimizer used as an independent oracle.

namespace ljlat {

// Complete set of critical b-values and associated coordinates.
//   b0    : minimum of the half-line ratio (first critical parameter)
//   b1    : hexagonal -> rhombic transition (two minimizers exactly there)
//   b1_5  : value-matching parameter between the two half-line endpoints
//   b2    : rhombic -> square transition (half-line ratio at y = 1/2)
//   b_arc : half-line ratio at y = sqrt(3)/2 (top of the unit arc)
//   b3    : square -> rectangular transition (axis ratio at y = 1)
struct Thresholds {
    double b0 = 0.0;
    double b1 = 0.0;
    double b1_5 = 0.0;
    double b2 = 0.0;
    double b_arc = 0.0;
    double b3 = 0.0;
    double theta_b1 = 0.0;  // radians
    double y_b1 = 0.0;
    double y0 = 0.0;
};

enum class Phase { Hexagonal, DegeneratePair, Rhombic, Square, Rectangular };

const char* phase_name(Phase p);

struct PhasePoint {
    Phase tag = Phase::Hexagonal;
    std::optional<double> theta;  // set for Rhombic / DegeneratePair
    std::optional<double> y;      // set for Rectangular
    std::vector<UpperHalfPoint> minimizers;  // length 1, or 2 when degenerate
};

// Physical Lennard-Jones parameters; b = 1/sigma^6.
struct LJParams {
    double epsilon = 1.0;
    double sigma = 1.0;
    double b = 1.0;

    static LJParams from_epsilon_sigma(double epsilon, double sigma);
};

struct BranchSolveReport {
    double b = 0.0;
    double solution = 0.0;
    double residual = 0.0;
    int iterations = 0;
    std::pair<double, double> bracket{0.0, 0.0};
};

struct GridSpec {
    double step = 1e-3;       // x and linear-y spacing
    double y_cap = 0.0;       // 0 = automatic from the asymptotic branch
    double refine_tol = 1e-10;
};

// X(y) = d/dy zeta(6,iy) / d/dy zeta(3,iy); even under y -> 1/y; 0/0 at
// y = 1 evaluated through higher derivatives.
double ratio_X(double y, const SeriesControl& ctl = {});

// H(y) = d/dy zeta(6,1/2+iy) / d/dy zeta(3,1/2+iy) on [1/2, sqrt(3)/2];
// both endpoints are 0/0 limits.
double ratio_H(double y, const SeriesControl& ctl = {});

// Unique root of X(y) = b with y > 1; requires b > b3.
BranchSolveReport solve_y_b(double b, double tol = 1e-9);

// Large-b growth cbrt(xi(6)/(2 xi(12)) * b) of the rectangular branch.
double asymptotic_y(double b);

// Root of H(y) = b on the descending branch (1/2, y0); requires b0 < b < b2.
BranchSolveReport solve_halfline_branch(double b, double tol = 1e-9);

// The parameter at which the hexagonal and rhombic minima exchange: unique
// root of f(b) = g(b, y_b) - g(b, sqrt(3)/2) with g(b,y) the half-line
// functional. Returns (b1, y_b1).
std::pair<double, double> solve_b1(double tol = 1e-9);

Thresholds compute_thresholds(double tol = 1e-9);

PhasePoint classify(double b, const Thresholds& th, double tol = 1e-9);

// Grid argmin of w_b over the closure of the fundamental domain (y capped),
// refined by coordinate descent; independent of the analytic branches.
std::pair<UpperHalfPoint, double> brute_minimize(double s1, double s2, double b,
                                                 const GridSpec& grid);

// 2*epsilon*sigma^12*(zeta(6,z) - b*zeta(3,z)) with b = 1/sigma^6.
double lj_energy(const LJParams& p, UpperHalfPoint z, const SeriesControl& ctl = {});

// Density-style parameter A to the competition parameter b = 2*A^3.
double betermin_A_to_b(double A);

}  // namespace ljlat

#endif
