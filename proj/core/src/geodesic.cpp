#include "fermat_torus/geodesic.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace fermat {

namespace {

GeodesicState advance(const GeodesicState& s, const GeodesicDerivative& d, double dt) {
    return {s.u + dt * d.du, s.v + dt * d.dv, s.du + dt * d.ddu, s.dv + dt * d.ddv};
}

GeodesicState rk4_step(const Torus& torus, const GeodesicState& s, double dt) {
    GeodesicDerivative k1 = geodesic_rhs(torus, s);
    GeodesicDerivative k2 = geodesic_rhs(torus, advance(s, k1, 0.5 * dt));
    GeodesicDerivative k3 = geodesic_rhs(torus, advance(s, k2, 0.5 * dt));
    GeodesicDerivative k4 = geodesic_rhs(torus, advance(s, k3, dt));
    double c = dt / 6.0;
    return {s.u + c * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du),
            s.v + c * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv),
            s.du + c * (k1.ddu + 2.0 * k2.ddu + 2.0 * k3.ddu + k4.ddu),
            s.dv + c * (k1.ddv + 2.0 * k2.ddv + 2.0 * k3.ddv + k4.ddv)};
}

bool finite(const GeodesicState& s) {
    return std::isfinite(s.u) && std::isfinite(s.v) && std::isfinite(s.du) &&
           std::isfinite(s.dv);
}

// Relative deviation, absolute when the reference is zero.
double deviation(double value, double reference) {
    double diff = std::abs(value - reference);
    return reference == 0.0 ? diff : diff / std::abs(reference);
}

}  // namespace

GeodesicDerivative geodesic_rhs(const Torus& torus, const GeodesicState& s) {
    ChristoffelSymbols g = christoffels(torus, s.v);
    return {s.du, s.dv, -2.0 * g.u_uv * s.du * s.dv, -g.v_uu * s.du * s.du};
}

ConservedQuantities conserved_quantities(const Torus& torus, const GeodesicState& s) {
    double w = torus.major() + torus.minor() * std::cos(s.v);
    double w2 = w * w;
    double r2 = torus.minor() * torus.minor();
    return {s.du * w2, w2 * s.du * s.du + r2 * s.dv * s.dv};
}

Trajectory integrate_geodesic(const Torus& torus, const GeodesicState& s0, double t_max,
                              double h) {
    if (!(t_max > 0.0)) {
        throw std::invalid_argument("integrate_geodesic: t_max must be > 0");
    }
    if (!(h > 0.0 && h <= t_max)) {
        throw std::invalid_argument("integrate_geodesic: need 0 < h <= t_max");
    }
    if (!finite(s0)) {
        throw std::invalid_argument("integrate_geodesic: non-finite initial state");
    }

    auto steps = static_cast<std::size_t>(std::ceil(t_max / h - 1e-9));
    ConservedQuantities q0 = conserved_quantities(torus, s0);

    Trajectory traj;
    traj.samples.reserve(steps + 1);
    traj.samples.push_back({0.0, s0, embed(torus, {s0.u, s0.v})});

    GeodesicState s = s0;
    double t_prev = 0.0;
    for (std::size_t i = 1; i <= steps; ++i) {
        double t = std::min(static_cast<double>(i) * h, t_max);
        s = rk4_step(torus, s, t - t_prev);
        if (!finite(s)) {
            throw numerical_failure("integrate_geodesic: state not finite", i);
        }
        ConservedQuantities q = conserved_quantities(torus, s);
        traj.k_drift = std::max(traj.k_drift, deviation(q.k, q0.k));
        traj.energy_drift = std::max(traj.energy_drift, deviation(q.energy, q0.energy));
        traj.samples.push_back({t, s, embed(torus, {s.u, s.v})});
        t_prev = t;
    }
    return traj;
}

}  // namespace fermat
