#include "fermat_torus/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace fermat {

namespace {

void check_exponent(double n) {
    if (!(n >= 1.0)) {
        throw std::domain_error("kinematics: exponent n must be >= 1");
    }
}

void check_unit_interval(double x) {
    if (!(x >= 0.0) || x > 1.0) {
        throw std::domain_error("kinematics: x outside [0,1]");
    }
}

// b^e as exp(e ln b) for b > 0; the boundary b = 0 is handled by the
// callers so the transition at x = 0 never hits a 0^0 platform case.
double pow_pos(double base, double expo) {
    return std::exp(expo * std::log(base));
}

}  // namespace

PhaseClass classify_phase(double n) {
    if (!(n > 0.0)) {
        throw std::domain_error("classify_phase: n must be > 0");
    }
    if (n < 2.0) {
        return PhaseClass::DivergesNeg;
    }
    if (n == 2.0) {
        return PhaseClass::FiniteMinusOne;
    }
    return PhaseClass::LimitZero;
}

double curve_y(double x, double n) {
    check_exponent(n);
    check_unit_interval(x);
    if (x == 0.0) {
        return 1.0;
    }
    if (x == 1.0) {
        return 0.0;
    }
    double xn = pow_pos(x, n);
    if (xn >= 1.0) {
        return 0.0;  // rounded into the corner
    }
    return std::exp(std::log1p(-xn) / n);
}

double velocity(double x, double n) {
    check_exponent(n);
    if (x == 1.0) {
        throw singularity_error("velocity: singular at x = 1");
    }
    check_unit_interval(x);
    if (n == 1.0) {
        return -1.0;
    }
    if (x == 0.0) {
        return 0.0;  // x^(n-1) with n > 1
    }
    double y = curve_y(x, n);
    if (y == 0.0) {
        throw singularity_error("velocity: singular at x = 1");
    }
    return -pow_pos(x / y, n - 1.0);
}

double acceleration(double x, double n) {
    check_exponent(n);
    if (x == 1.0) {
        throw singularity_error("acceleration: singular at x = 1");
    }
    check_unit_interval(x);
    if (x == 0.0) {
        if (n < 2.0) {
            throw divergence_error("acceleration: diverges at x = 0 for n < 2");
        }
        return n == 2.0 ? -1.0 : 0.0;
    }
    double xn = pow_pos(x, n);
    if (xn >= 1.0) {
        throw singularity_error("acceleration: singular at x = 1");
    }
    // -(n-1) x^(n-2) (1-x^n)^(1/n - 2)
    return -(n - 1.0) * std::exp((n - 2.0) * std::log(x) + (1.0 / n - 2.0) * std::log1p(-xn));
}

FiniteDifference finite_diff_oracle(double x, double n, double h) {
    check_exponent(n);
    if (!(h > 0.0)) {
        throw std::domain_error("finite_diff_oracle: h must be > 0");
    }
    if (!(x - h > 0.0) || !(x + h < 1.0)) {
        throw std::domain_error("finite_diff_oracle: stencil leaves (0,1)");
    }
    double yp = curve_y(x + h, n);
    double ym = curve_y(x - h, n);
    double y0 = curve_y(x, n);
    return {(yp - ym) / (2.0 * h), (yp - 2.0 * y0 + ym) / (h * h)};
}

std::vector<std::pair<double, double>> sample_curve(double n, int m) {
    check_exponent(n);
    if (m < 2) {
        throw std::invalid_argument("sample_curve: need at least 2 samples");
    }
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        double x = static_cast<double>(i) / static_cast<double>(m - 1);
        pts.emplace_back(x, curve_y(x, n));
    }
    return pts;
}

PhaseScanResult phase_scan(std::span<const double> n_values, std::span<const double> x_grid) {
    auto check_grid = [](std::span<const double> g, const char* name) {
        if (g.empty()) {
            throw std::invalid_argument(std::string("phase_scan: empty ") + name);
        }
        for (std::size_t i = 1; i < g.size(); ++i) {
            if (!(g[i] > g[i - 1])) {
                throw std::invalid_argument(std::string("phase_scan: ") + name +
                                            " not strictly increasing");
            }
        }
    };
    check_grid(n_values, "n grid");
    check_grid(x_grid, "x grid");

    PhaseScanResult result;
    result.samples.reserve(n_values.size() * x_grid.size());
    for (double n : n_values) {
        result.classes.emplace_back(n, classify_phase(n));
        for (double x : x_grid) {
            result.samples.push_back({x, curve_y(x, n), velocity(x, n), acceleration(x, n), n});
        }
    }
    return result;
}

}  // namespace fermat
