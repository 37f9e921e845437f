#include "fermat_torus/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fermat {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_ == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(mp::abs(num_), den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator*(const Rational& rhs) const {
    return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.num_ == 0) {
        throw std::invalid_argument("Rational: division by zero");
    }
    return Rational(num_ * rhs.den_, den_ * rhs.num_);
}

Rational Rational::reciprocal() const {
    if (num_ == 0) {
        throw std::invalid_argument("Rational: reciprocal of zero");
    }
    return Rational(den_, num_);
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::str() const {
    return num_.str() + "/" + den_.str();
}

Rational rat_new(std::int64_t p, std::int64_t q) {
    return Rational(p, q);
}

Rational rat_pow(const Rational& r, unsigned n) {
    if (n == 0) {
        return Rational(BigInt(1));
    }
    return Rational(mp::pow(r.num(), n), mp::pow(r.den(), n));
}

IntegerRoot integer_nth_root(const BigInt& value, unsigned n) {
    if (value < 0) {
        throw std::invalid_argument("integer_nth_root: negative value");
    }
    if (n == 0) {
        throw std::invalid_argument("integer_nth_root: zeroth root");
    }
    if (value == 0 || value == 1 || n == 1) {
        return {value, true};
    }
    // Binary search on the integer line; hi is one past the largest
    // candidate by bit length.
    unsigned bits = mp::msb(value) + 1;
    BigInt lo = 1;
    BigInt hi = BigInt(1) << (bits / n + 1);
    while (lo + 1 < hi) {
        BigInt mid = (lo + hi) / 2;
        if (mp::pow(mid, n) <= value) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo, mp::pow(lo, n) == value};
}

std::optional<Rational> nth_root_exact(const Rational& r, unsigned n) {
    if (n < 1) {
        throw std::invalid_argument("nth_root_exact: n must be >= 1");
    }
    if (r.sign() < 0 || r > Rational(BigInt(1))) {
        throw std::domain_error("nth_root_exact: r outside [0,1]");
    }
    if (n == 1) {
        return r;
    }
    auto num_root = integer_nth_root(r.num(), n);
    if (!num_root.exact) {
        return std::nullopt;
    }
    auto den_root = integer_nth_root(r.den(), n);
    if (!den_root.exact) {
        return std::nullopt;
    }
    return Rational(num_root.root, den_root.root);
}

std::vector<Rational> convergents(double x, std::int64_t max_den) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error("convergents: x outside [0,1]");
    }
    if (max_den < 1) {
        throw std::invalid_argument("convergents: max_den must be >= 1");
    }
    std::vector<Rational> out;
    BigInt h_prev = 1, h_prev2 = 0;
    BigInt k_prev = 0, k_prev2 = 1;
    double y = x;
    for (int iter = 0; iter < 64; ++iter) {
        if (!(y < 9.0e18)) {
            break;  // next term would dwarf any admissible denominator
        }
        double a_floor = std::floor(y);
        BigInt a(static_cast<std::int64_t>(a_floor));
        BigInt h = a * h_prev + h_prev2;
        BigInt k = a * k_prev + k_prev2;
        if (k > max_den) {
            break;
        }
        out.emplace_back(h, k);
        double frac = y - a_floor;
        if (frac <= 0.0) {
            break;  // exact terminating expansion
        }
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        y = 1.0 / frac;
        if (!std::isfinite(y)) {
            break;
        }
    }
    return out;
}

std::optional<Rational> rational_reconstruct(double x, std::int64_t max_den, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("rational_reconstruct: tol must be > 0");
    }
    for (const Rational& c : convergents(x, max_den)) {
        if (std::abs(x - c.to_double()) <= tol) {
            return c;
        }
    }
    return std::nullopt;
}

}  // namespace fermat
