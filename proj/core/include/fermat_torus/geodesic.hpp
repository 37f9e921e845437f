#pragma once

/**
 * Geodesic flow on the torus: fixed-step RK4 integration of
 *
 *   u'' = -2 Gamma^u_uv u' v',   v'' = -Gamma^v_uu u'^2
 *
 * with two conserved quantities monitored along the run: the Clairaut-type
 * constant k = u'(R + r cos v)^2 and the energy (R + r cos v)^2 u'^2 + r^2 v'^2.
 * Their drift is the accuracy meter; a fixed step keeps convergence-order
 * checks clean.
 */

#include "fermat_torus/errors.hpp"
#include "fermat_torus/torus.hpp"

#include <vector>

namespace fermat {

struct GeodesicState {
    double u;
    double v;
    double du;
    double dv;
};

struct GeodesicDerivative {
    double du;
    double dv;
    double ddu;
    double ddv;
};

GeodesicDerivative geodesic_rhs(const Torus& torus, const GeodesicState& s);

struct ConservedQuantities {
    double k;       // u'(R + r cos v)^2
    double energy;  // (R + r cos v)^2 u'^2 + r^2 v'^2
};

ConservedQuantities conserved_quantities(const Torus& torus, const GeodesicState& s);

struct TrajectorySample {
    double t;
    GeodesicState state;
    Vec3 point;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;  // t strictly increasing
    double k_drift = 0.0;                   // max relative deviation over the run
    double energy_drift = 0.0;
};

/// Integrates from s0 to t_max with step h (final step shortened to land
/// exactly on t_max). Throws numerical_failure with the step index if the
/// state stops being finite.
Trajectory integrate_geodesic(const Torus& torus, const GeodesicState& s0, double t_max, double h);

}  // namespace fermat
