#include "ljlat/modular.hpp"

#include <cmath>
#include <stdexcept>

namespace ljlat {

namespace {

constexpr double kBoundaryEps = 1e-12;
constexpr double kCornerEps = 1e-9;

Region classify_region(const UpperHalfPoint& z) {
    const double r2 = z.x * z.x + z.y * z.y;
    const double hex_x = 0.5, hex_y = std::sqrt(3.0) / 2.0;
    if (std::hypot(z.x, z.y - 1.0) <= kCornerEps) return Region::CornerI;
    if (std::hypot(z.x - hex_x, z.y - hex_y) <= kCornerEps) return Region::CornerHex;
    if (std::abs(z.x) <= kBoundaryEps && z.y >= 1.0 - kBoundaryEps) return Region::GammaA;
    if (std::abs(r2 - 1.0) <= 2.0 * kBoundaryEps && z.y >= hex_y - kBoundaryEps)
        return Region::GammaB;
    if (r2 > 1.0 + 2.0 * kBoundaryEps && z.x > kBoundaryEps && z.x < 0.5 - kBoundaryEps)
        return Region::Interior;
    return Region::OtherBoundary;
}

}  // namespace

UpperHalfPoint apply_generator(GeneratorOp op, UpperHalfPoint z) {
    switch (op) {
        case GeneratorOp::T: return {z.x + 1.0, z.y};
        case GeneratorOp::Tinv: return {z.x - 1.0, z.y};
        case GeneratorOp::S: {
            const double r2 = z.x * z.x + z.y * z.y;
            return {-z.x / r2, z.y / r2};
        }
        case GeneratorOp::R: return {-z.x, z.y};
    }
    throw std::logic_error("apply_generator: unknown op");
}

UpperHalfPoint apply_word(const GeneratorWord& word, UpperHalfPoint z) {
    for (GeneratorOp op : word) z = apply_generator(op, z);
    return z;
}

ReduceResult reduce(UpperHalfPoint z) {
    if (!(z.y > 0.0)) throw std::domain_error("reduce: y must be positive");
    if (!std::isfinite(z.x) || !std::isfinite(z.y))
        throw std::domain_error("reduce: coordinates must be finite");

    // Ops applied to the input, in order. The replay word is the reversed
    // sequence of inverses (T <-> Tinv; S and R are involutions).
    GeneratorWord applied;
    UpperHalfPoint w = z;
    int guard = 0;
    for (;;) {
        if (++guard > 200)
            throw std::runtime_error("reduce: generator loop failed to terminate");
        // Shift x into [-1/2, 1/2); floor form keeps x = 1/2 from cycling.
        double k = std::floor(w.x + 0.5);
        if (k != 0.0) {
            if (std::abs(k) > 1e7) throw std::domain_error("reduce: |x| too large");
            GeneratorOp op = k > 0 ? GeneratorOp::Tinv : GeneratorOp::T;
            long reps = static_cast<long>(std::abs(k));
            for (long i = 0; i < reps; ++i) applied.push_back(op);
            w.x -= k;
        }
        const double r2 = w.x * w.x + w.y * w.y;
        if (r2 < 1.0 - kBoundaryEps) {
            applied.push_back(GeneratorOp::S);
            w = apply_generator(GeneratorOp::S, w);
            continue;
        }
        break;
    }
    if (w.x < 0.0) {
        applied.push_back(GeneratorOp::R);
        w.x = -w.x;
    }
    // |z| = 1 with x in (1/2, ...] cannot occur after the shift; x == 1/2
    // and x == -1/2 are equivalent, and the loop leaves x in [-1/2, 1/2].

    GeneratorWord replay;
    replay.reserve(applied.size());
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
        switch (*it) {
            case GeneratorOp::T: replay.push_back(GeneratorOp::Tinv); break;
            case GeneratorOp::Tinv: replay.push_back(GeneratorOp::T); break;
            case GeneratorOp::S: replay.push_back(GeneratorOp::S); break;
            case GeneratorOp::R: replay.push_back(GeneratorOp::R); break;
        }
    }
    return {{w, classify_region(w)}, replay};
}

double arc_to_halfline(double u) {
    if (!(u >= 0.0 && u <= 0.5)) throw std::domain_error("arc_to_halfline: u must be in [0, 1/2]");
    return 0.5 * std::sqrt((1.0 + u) / (1.0 - u));
}

double halfline_to_angle(double y_half) {
    const double lo = 0.5, hi = std::sqrt(3.0) / 2.0;
    if (!(y_half >= lo - 1e-12 && y_half <= hi + 1e-12))
        throw std::domain_error("halfline_to_angle: input must be in [1/2, sqrt(3)/2]");
    const double y2 = 4.0 * y_half * y_half;
    double u = (y2 - 1.0) / (y2 + 1.0);
    if (u < 0.0) u = 0.0;
    if (u > 0.5) u = 0.5;
    return std::acos(u);
}

}  // namespace ljlat
