#pragma once

/**
 * Exact searches on x^n + y^n = 1 and x^n + y^n = z^n: rational points
 * with bounded denominator, primitive integer triples with bounded height,
 * and crossings between a wrapped line and the curve with every "rational"
 * label backed by exact-arithmetic verification.
 */

#include "fermat_torus/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fermat {

struct Triple {
    std::int64_t x;
    std::int64_t y;
    std::int64_t z;

    bool operator==(const Triple&) const = default;
};

struct SolutionRecord {
    Rational x;
    Rational y;
    int n;
    std::optional<Triple> witness;  // integer triple reproducing (x, y) by division
};

struct CrossingRecord {
    double x;
    double y;
    std::optional<std::pair<Rational, Rational>> rational_xy;  // exact-verified label
    Rational slope_a;
    Rational slope_b;
};

struct CrossingScan {
    std::vector<CrossingRecord> crossings;  // sorted by (x, y)
    int branches_scanned = 0;
    int branches_without_crossing = 0;
};

/// Exact y-test for a single abscissa: the rational y in (0,1) with
/// x^n + y^n = 1, if it exists. y shares x's denominator when it does.
std::optional<SolutionRecord> rational_point_at(int n, const Rational& x);

/// All solutions of x^n + y^n = 1 with 0 < x, y < 1 and den(x) <= max_den,
/// in increasing x. Denominator enumeration is one-dimensional: y is
/// decided per x by exact root extraction.
std::vector<SolutionRecord> rational_points_on_curve(int n, std::int64_t max_den);

/// The exact z with x^n + y^n = z^n, if one exists.
std::optional<std::int64_t> power_sum_root(int n, std::int64_t x, std::int64_t y);

/// All primitive triples 0 < x <= y < z <= max_z with x^n + y^n = z^n,
/// sorted by (z, x).
std::vector<Triple> diophantine_triples(int n, std::int64_t max_z);

/// Crossings between the curve and the line through the origin with slope
/// b/a, wrapped onto the unit square. Each wrapped branch is solved by
/// bisection to tol; crossings are then labeled rational only when a
/// reconstructed fraction passes exact verification. "Non-rational" means
/// "no rational witness with denominator <= max_den", nothing stronger.
CrossingScan line_curve_crossings(int n, const Rational& a, const Rational& b,
                                  std::int64_t max_den, double tol);

/// (x, y, z) |-> the solution record (x/z, y/z) with the triple attached.
/// Throws std::invalid_argument unless x^n + y^n = z^n exactly and z > 0.
SolutionRecord rescale_check(const Triple& triple, int n);

}  // namespace fermat
