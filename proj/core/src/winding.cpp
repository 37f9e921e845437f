#include "fermat_torus/winding.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fermat {

namespace {

constexpr std::int64_t kClosureMaxDen = 1000000;
constexpr double kClosureTol = 1e-13;

}  // namespace

WindingLine::WindingLine(double a_in, double b_in, double u0_in, double v0_in)
    : a(a_in), b(b_in), u0(u0_in), v0(v0_in) {
    if (a == 0.0 && b == 0.0) {
        throw std::invalid_argument("WindingLine: slope pair must be nonzero");
    }
}

SurfacePoint winding_point(const WindingLine& line, double t) {
    return {line.a * t + line.u0, line.b * t + line.v0};
}

double closure_period(const Rational& a, const Rational& b) {
    if (a.is_zero() && b.is_zero()) {
        throw std::invalid_argument("closure_period: slope pair must be nonzero");
    }
    if (a.is_zero()) {
        return kTwoPi / std::abs(b.to_double());
    }
    if (b.is_zero()) {
        return kTwoPi / std::abs(a.to_double());
    }
    // With |b/a| = q/p reduced, the smallest period is T = 2*pi*p/|a|:
    // aT winds p full turns while bT winds q.
    Rational ratio = b / a;
    Rational t = Rational(ratio.den()) / a;  // p/|a|
    return kTwoPi * std::abs(t.to_double());
}

std::optional<double> closure_period(const WindingLine& line) {
    double aa = std::abs(line.a);
    double bb = std::abs(line.b);
    if (aa == 0.0) {
        return kTwoPi / bb;
    }
    if (bb == 0.0) {
        return kTwoPi / aa;
    }
    // Reconstruct the smaller-over-larger ratio so the input sits in [0,1].
    double lo = std::min(aa, bb);
    double hi = std::max(aa, bb);
    auto frac = rational_reconstruct(lo / hi, kClosureMaxDen, kClosureTol);
    if (!frac) {
        return std::nullopt;
    }
    // lo/hi = p/q. Whichever of a, b is the larger slope winds q turns.
    double p = frac->num().convert_to<double>();
    double q = frac->den().convert_to<double>();
    return aa >= bb ? kTwoPi * q / aa : kTwoPi * p / aa;
}

SurfacePoint wrap_map(double x, double y) {
    if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
        throw std::domain_error("wrap_map: inputs outside [0,1]");
    }
    return {kTwoPi * x, kTwoPi * y};
}

double density_coverage(const WindingLine& line, double t_max, int grid_n) {
    if (!(t_max > 0.0)) {
        throw std::invalid_argument("density_coverage: t_max must be > 0");
    }
    if (grid_n < 2) {
        throw std::invalid_argument("density_coverage: grid_n must be >= 2");
    }
    double cell = kTwoPi / grid_n;
    double speed = std::max(std::abs(line.a), std::abs(line.b));
    double dt = 0.5 * cell / speed;  // at most half a cell per sample

    std::vector<bool> seen(static_cast<std::size_t>(grid_n) * grid_n, false);
    std::size_t visited = 0;
    auto samples = static_cast<std::size_t>(t_max / dt) + 1;
    for (std::size_t i = 0; i < samples; ++i) {
        SurfacePoint p = winding_point(line, static_cast<double>(i) * dt);
        auto iu = std::min(static_cast<int>(p.u / cell), grid_n - 1);
        auto iv = std::min(static_cast<int>(p.v / cell), grid_n - 1);
        std::size_t idx = static_cast<std::size_t>(iu) * grid_n + iv;
        if (!seen[idx]) {
            seen[idx] = true;
            ++visited;
        }
    }
    return static_cast<double>(visited) / (static_cast<double>(grid_n) * grid_n);
}

}  // namespace fermat
