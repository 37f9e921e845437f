#include "fermat_torus/search.hpp"

#include "fermat_torus/farey.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fermat {

namespace mp = boost::multiprecision;

namespace {

void check_exponent(int n) {
    if (n < 1) {
        throw std::invalid_argument("search: n must be >= 1");
    }
}

// x^k for doubles by repeated squaring; deterministic across libms.
double powi(double x, int k) {
    double acc = 1.0;
    double base = x;
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1) {
            acc *= base;
        }
        base *= base;
    }
    return acc;
}

}  // namespace

std::optional<SolutionRecord> rational_point_at(int n, const Rational& x) {
    check_exponent(n);
    if (!(x.sign() > 0) || !(x < Rational(BigInt(1)))) {
        return std::nullopt;
    }
    auto un = static_cast<unsigned>(n);
    // 1 - x^n = (q^n - p^n)/q^n is already in lowest terms.
    BigInt qn = mp::pow(x.den(), un);
    BigInt rem = qn - mp::pow(x.num(), un);
    if (rem <= 0) {
        return std::nullopt;
    }
    auto num_root = integer_nth_root(rem, un);
    if (!num_root.exact) {
        return std::nullopt;
    }
    return SolutionRecord{x, Rational(num_root.root, x.den()), n, std::nullopt};
}

std::vector<SolutionRecord> rational_points_on_curve(int n, std::int64_t max_den) {
    check_exponent(n);
    if (max_den < 1) {
        throw std::invalid_argument("rational_points_on_curve: max_den must be >= 1");
    }
    std::vector<SolutionRecord> out;
    FareySequence seq(max_den);
    while (seq.advance()) {  // skips 0/1; interior solutions need x > 0
        if (seq.num() == seq.den()) {
            break;
        }
        if (auto sol = rational_point_at(n, seq.current())) {
            out.push_back(std::move(*sol));
        }
    }
    return out;
}

std::optional<std::int64_t> power_sum_root(int n, std::int64_t x, std::int64_t y) {
    check_exponent(n);
    if (x < 1 || y < 1) {
        throw std::invalid_argument("power_sum_root: x, y must be >= 1");
    }
    auto un = static_cast<unsigned>(n);
    BigInt sum = mp::pow(BigInt(x), un) + mp::pow(BigInt(y), un);
    auto root = integer_nth_root(sum, un);
    if (!root.exact) {
        return std::nullopt;
    }
    return root.root.convert_to<std::int64_t>();
}

std::vector<Triple> diophantine_triples(int n, std::int64_t max_z) {
    check_exponent(n);
    if (max_z < 1) {
        throw std::invalid_argument("diophantine_triples: max_z must be >= 1");
    }
    std::vector<Triple> out;
    for (std::int64_t x = 1; x < max_z; ++x) {
        for (std::int64_t y = x; y < max_z; ++y) {
            auto z = power_sum_root(n, x, y);
            if (z && *z <= max_z && std::gcd(std::gcd(x, y), *z) == 1) {
                out.push_back({x, y, *z});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Triple& l, const Triple& r) {
        return std::tie(l.z, l.x, l.y) < std::tie(r.z, r.x, r.y);
    });
    return out;
}

namespace {

// Walks the convergents of x0 and returns the first fraction that exactly
// satisfies x^n + (s*x - k)^n = 1. The exact check is the arbiter; the
// tolerance only limits which candidates are offered.
std::optional<std::pair<Rational, Rational>> verified_label(double x0, int n,
                                                            const Rational& slope,
                                                            std::int64_t k,
                                                            std::int64_t max_den, double tol) {
    double clamped = std::min(1.0, std::max(0.0, x0));
    Rational one{BigInt(1)};
    for (const Rational& cand : convergents(clamped, max_den)) {
        if (std::abs(clamped - cand.to_double()) > tol) {
            continue;
        }
        Rational y = slope * cand - Rational(BigInt(k));
        if (y.sign() < 0 || y > one) {
            continue;
        }
        auto un = static_cast<unsigned>(n);
        if (rat_pow(cand, un) + rat_pow(y, un) == one) {
            return std::make_pair(cand, y);
        }
    }
    return std::nullopt;
}

}  // namespace

CrossingScan line_curve_crossings(int n, const Rational& a, const Rational& b,
                                  std::int64_t max_den, double tol) {
    check_exponent(n);
    if (a.is_zero() && b.is_zero()) {
        throw std::invalid_argument("line_curve_crossings: slope pair must be nonzero");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("line_curve_crossings: tol must be > 0");
    }
    if (max_den < 1) {
        throw std::invalid_argument("line_curve_crossings: max_den must be >= 1");
    }

    CrossingScan scan;
    if (a.is_zero()) {
        // Vertical line x = 0: meets the curve at (0, 1).
        scan.branches_scanned = 1;
        scan.crossings.push_back(
            {0.0, 1.0, std::make_pair(Rational(BigInt(0)), Rational(BigInt(1))), a, b});
        return scan;
    }

    Rational slope = b / a;
    double s = slope.to_double();

    auto f = [&](double x, std::int64_t k) {
        return powi(x, n) + powi(s * x - static_cast<double>(k), n) - 1.0;
    };

    std::int64_t k_lo = static_cast<std::int64_t>(std::floor(std::min(0.0, s))) - 1;
    std::int64_t k_hi = static_cast<std::int64_t>(std::ceil(std::max(0.0, s))) + 1;
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        // x-range where the branch y = s*x - k stays inside [0,1].
        double x_lo = 0.0, x_hi = 1.0;
        if (s > 0.0) {
            x_lo = std::max(x_lo, static_cast<double>(k) / s);
            x_hi = std::min(x_hi, (static_cast<double>(k) + 1.0) / s);
        } else {
            x_lo = std::max(x_lo, (static_cast<double>(k) + 1.0) / s);
            x_hi = std::min(x_hi, static_cast<double>(k) / s);
        }
        if (!(x_hi - x_lo > 0.0)) {
            continue;
        }
        ++scan.branches_scanned;

        // Coarse subdivision first: a descending wrapped branch can cross
        // the curve twice, which a single endpoint bracket would miss.
        bool found_on_branch = false;
        constexpr int kSubdivisions = 64;
        double width = (x_hi - x_lo) / kSubdivisions;
        for (int j = 0; j < kSubdivisions; ++j) {
            double lo = x_lo + j * width;
            double hi = (j == kSubdivisions - 1) ? x_hi : x_lo + (j + 1) * width;
            double flo = f(lo, k);
            double fhi = f(hi, k);

            double x_root = 0.0;
            bool have_root = false;
            if (flo == 0.0) {
                x_root = lo;  // grid-node roots belong to the subinterval on their right
                have_root = true;
            } else if (fhi == 0.0) {
                if (j == kSubdivisions - 1) {
                    x_root = hi;
                    have_root = true;
                }
            } else if ((flo < 0.0) != (fhi < 0.0)) {
                while (hi - lo > tol) {
                    double mid = 0.5 * (lo + hi);
                    double fmid = f(mid, k);
                    if (fmid == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if ((flo < 0.0) == (fmid < 0.0)) {
                        lo = mid;
                        flo = fmid;
                    } else {
                        hi = mid;
                    }
                }
                x_root = 0.5 * (lo + hi);
                have_root = true;
            }
            if (!have_root) {
                continue;
            }
            double y_root = s * x_root - static_cast<double>(k);
            CrossingRecord rec{x_root, y_root, std::nullopt, a, b};
            rec.rational_xy = verified_label(x_root, n, slope, k, max_den, 2.0 * tol);
            scan.crossings.push_back(std::move(rec));
            found_on_branch = true;
        }
        if (!found_on_branch) {
            ++scan.branches_without_crossing;
        }
    }

    std::sort(scan.crossings.begin(), scan.crossings.end(),
              [](const CrossingRecord& l, const CrossingRecord& r) {
                  return std::tie(l.x, l.y) < std::tie(r.x, r.y);
              });
    return scan;
}

SolutionRecord rescale_check(const Triple& triple, int n) {
    check_exponent(n);
    if (triple.z <= 0) {
        throw std::invalid_argument("rescale_check: z must be > 0");
    }
    auto un = static_cast<unsigned>(n);
    BigInt lhs = mp::pow(BigInt(triple.x), un) + mp::pow(BigInt(triple.y), un);
    if (lhs != mp::pow(BigInt(triple.z), un)) {
        throw std::invalid_argument("rescale_check: triple does not satisfy x^n + y^n = z^n");
    }
    return {Rational(triple.x, triple.z), Rational(triple.y, triple.z), n, triple};
}

}  // namespace fermat
