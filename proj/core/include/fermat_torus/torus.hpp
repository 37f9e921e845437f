#pragma once

/**
 * Torus of revolution: embedding, induced metric, and the two nonzero
 * Christoffel symbols. Angles are (u, v) = (toroidal, poloidal).
 */

#include <array>
#include <cmath>

namespace fermat {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Reduces an angle into [0, 2*pi).
double wrap_angle(double a);

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline double distance(const Vec3& a, const Vec3& b) {
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

class Torus {
public:
    /// Requires R > r > 0.
    Torus(double major_radius, double minor_radius);

    double major() const { return R_; }
    double minor() const { return r_; }

private:
    double R_;
    double r_;
};

struct SurfacePoint {
    SurfacePoint(double u_in, double v_in) : u(wrap_angle(u_in)), v(wrap_angle(v_in)) {}

    double u;  // reduced mod 2*pi
    double v;  // reduced mod 2*pi
};

/// ((R + r cos v) cos u, (R + r cos v) sin u, r sin v).
Vec3 embed(const Torus& torus, const SurfacePoint& p);

struct FirstFundamentalForm {
    double E;
    double F;
    double G;
};

/// E = (R + r cos v)^2, F = 0, G = r^2.
FirstFundamentalForm first_fundamental_form(const Torus& torus, double v);

struct ChristoffelSymbols {
    double u_uv;  // -r sin v / (R + r cos v)
    double v_uu;  // sin v (R + r cos v) / r
};

ChristoffelSymbols christoffels(const Torus& torus, double v);

}  // namespace fermat
