#pragma once

/**
 * The curve x^n + y^n = 1 on [0,1] as y(x), with closed-form first and
 * second derivatives ("velocity" and "acceleration" of a point sliding
 * along the curve at unit horizontal speed), a finite-difference cross
 * check, and the classification of the x -> 0+ acceleration limit.
 *
 * The limit changes character at n = 2: it diverges to -inf for n < 2,
 * equals -1 exactly at n = 2, and vanishes for n > 2.
 */

#include "fermat_torus/errors.hpp"

#include <span>
#include <utility>
#include <vector>

namespace fermat {

struct KinematicsSample {
    double x;
    double y;
    double vel;
    double acc;
    double n;
};

enum class PhaseClass {
    DivergesNeg,     // n < 2: acceleration -> -inf as x -> 0+
    FiniteMinusOne,  // n = 2: acceleration -> -1
    LimitZero,       // n > 2: acceleration -> 0
};

/// The x -> 0+ acceleration class, a function of n alone (n > 0).
PhaseClass classify_phase(double n);

/// y(x) = (1 - x^n)^(1/n) for x in [0,1], n >= 1. Exactly 1 at x = 0 and
/// 0 at x = 1.
double curve_y(double x, double n);

/// dy/dx = -(x / (1 - x^n)^(1/n))^(n-1) for x in [0,1), n >= 1.
/// Throws singularity_error at x = 1.
double velocity(double x, double n);

/// d2y/dx2 = -(n-1) x^(n-2) / (1 - x^n)^(2 - 1/n) for x in [0,1), n >= 1.
/// Throws divergence_error at x = 0 when n < 2 (no finite limit there) and
/// singularity_error at x = 1.
double acceleration(double x, double n);

struct FiniteDifference {
    double vel;
    double acc;
};

/// Central differences of curve_y; the stencil [x-h, x+h] must stay
/// inside (0,1).
FiniteDifference finite_diff_oracle(double x, double n, double h);

/// m evenly spaced samples of curve_y on [0,1], endpoints exactly (0,1)
/// and (1,0).
std::vector<std::pair<double, double>> sample_curve(double n, int m);

struct PhaseScanResult {
    std::vector<KinematicsSample> samples;                // sorted by (n, x)
    std::vector<std::pair<double, PhaseClass>> classes;   // one per n
};

/// Full kinematics over a (n, x) grid plus the analytic phase class per n.
/// Both grids must be non-empty and strictly increasing; domain errors from
/// velocity/acceleration propagate.
PhaseScanResult phase_scan(std::span<const double> n_values, std::span<const double> x_grid);

}  // namespace fermat
