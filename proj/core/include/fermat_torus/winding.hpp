#pragma once

/**
 * Straight lines wound onto the flat torus: u = a t + u0, v = b t + v0
 * with angles taken mod 2*pi. The orbit closes iff b/a is rational; an
 * irrational ratio fills the surface densely. The unit square with edges
 * identified is the canonical model here; the 3D embedding is a view.
 */

#include "fermat_torus/rational.hpp"
#include "fermat_torus/torus.hpp"

#include <optional>

namespace fermat {

struct WindingLine {
    WindingLine(double a_in, double b_in, double u0_in = 0.0, double v0_in = 0.0);

    double a;
    double b;
    double u0;
    double v0;
};

SurfacePoint winding_point(const WindingLine& line, double t);

/// Smallest T > 0 with aT and bT both multiples of 2*pi, computed exactly
/// from rational slopes. Always exists for rational (a, b) != (0, 0).
double closure_period(const Rational& a, const Rational& b);

/// Heuristic closure test for float slopes: the slope ratio is run through
/// rational_reconstruct with denominators up to 10^6 (tolerance 1e-13);
/// nullopt means "no closure detected at that cap", not a proof of
/// irrationality.
std::optional<double> closure_period(const WindingLine& line);

/// (x, y) in [0,1]^2 onto the flat torus: (2*pi*x mod 2*pi, 2*pi*y mod 2*pi).
SurfacePoint wrap_map(double x, double y);

/// Fraction of cells of a grid_n x grid_n partition of the angle square
/// visited by the orbit up to t_max, sampled finely enough that consecutive
/// samples move less than one cell.
double density_coverage(const WindingLine& line, double t_max, int grid_n);

}  // namespace fermat
