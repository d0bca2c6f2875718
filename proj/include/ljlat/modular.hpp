#ifndef LJLAT_MODULAR_HPP
#define LJLAT_MODULAR_HPP

#include "ljlat/epstein.hpp"

#include <vector>

// Reduction of upper-half-plane points to the fundamental domain
// {|z| > 1, 0 < x < 1/2} of the group generated by z -> z+1, z -> -1/z,
// z -> -conj(z), plus the arc <-> half-line change of variables that maps
// the unit arc between the hexagonal and square points onto the segment
// 1/2 + i[1/2, sqrt(3)/2].

namespace ljlat {

enum class Region {
    Interior,
    GammaA,         // x = 0, y >= 1
    GammaB,         // |z| = 1, y in [sqrt(3)/2, 1]
    CornerI,        // z = i
    CornerHex,      // z = e^{i pi/3}
    OtherBoundary,  // remaining closure boundary (x = 1/2 edge)
};

struct FundamentalDomainPosition {
    UpperHalfPoint point;
    Region region_tag = Region::Interior;
};

enum class GeneratorOp { T, Tinv, S, R };  // z+1, z-1, -1/z, -conj(z)

// Sequence of generator applications; applying it to the reduced point
// reproduces the original input.
using GeneratorWord = std::vector<GeneratorOp>;

UpperHalfPoint apply_generator(GeneratorOp op, UpperHalfPoint z);
UpperHalfPoint apply_word(const GeneratorWord& word, UpperHalfPoint z);

struct ReduceResult {
    FundamentalDomainPosition position;
    GeneratorWord word;  // maps position.point back to the input point
};

ReduceResult reduce(UpperHalfPoint z);

// u + i*sqrt(1-u^2) on the unit arc  <->  1/2 + i*y' on the half-line:
// y' = (1/2)*sqrt((1+u)/(1-u)), u in [0, 1/2], y' in [1/2, sqrt(3)/2].
double arc_to_halfline(double u);

// Inverse composed with z = e^{i theta}: u = (4y^2-1)/(4y^2+1),
// theta = arccos(u) in [pi/3, pi/2].
double halfline_to_angle(double y_half);

}  // namespace ljlat

#endif
