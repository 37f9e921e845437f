#include "fermat_torus/torus.hpp"

#include <stdexcept>

namespace fermat {

double wrap_angle(double a) {
    double w = std::fmod(a, kTwoPi);
    if (w < 0.0) {
        w += kTwoPi;
    }
    if (w >= kTwoPi) {
        w = 0.0;  // fmod rounding can land exactly on 2*pi
    }
    return w;
}

Torus::Torus(double major_radius, double minor_radius) : R_(major_radius), r_(minor_radius) {
    if (!(R_ > r_ && r_ > 0.0)) {
        throw std::invalid_argument("Torus: requires R > r > 0");
    }
}

Vec3 embed(const Torus& torus, const SurfacePoint& p) {
    double w = torus.major() + torus.minor() * std::cos(p.v);
    return {w * std::cos(p.u), w * std::sin(p.u), torus.minor() * std::sin(p.v)};
}

FirstFundamentalForm first_fundamental_form(const Torus& torus, double v) {
    double w = torus.major() + torus.minor() * std::cos(v);
    return {w * w, 0.0, torus.minor() * torus.minor()};
}

ChristoffelSymbols christoffels(const Torus& torus, double v) {
    double r = torus.minor();
    double w = torus.major() + r * std::cos(v);  // > 0 since R > r
    double s = std::sin(v);
    return {-r * s / w, s * w / r};
}

}  // namespace fermat
