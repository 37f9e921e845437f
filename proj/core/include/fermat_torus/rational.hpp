#pragma once

/**
 * Exact rational arithmetic over arbitrary-precision integers.
 *
 * Every value is kept in lowest terms with a positive denominator, and
 * all arithmetic is exact. Also provides exact n-th power testing and
 * continued-fraction reconstruction of rationals from doubles.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fermat {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt num, BigInt den);
    Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}
    explicit Rational(std::int64_t value) : num_(value), den_(1) {}
    explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    Rational operator/(const Rational& rhs) const;

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    bool operator==(const Rational& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const Rational& rhs) const { return !(*this == rhs); }
    bool operator<(const Rational& rhs) const {
        return num_ * rhs.den_ < rhs.num_ * den_;
    }
    bool operator>(const Rational& rhs) const { return rhs < *this; }
    bool operator<=(const Rational& rhs) const { return !(rhs < *this); }
    bool operator>=(const Rational& rhs) const { return !(*this < rhs); }

    Rational reciprocal() const;

    double to_double() const;
    std::string str() const;

private:
    void normalize();

    BigInt num_;
    BigInt den_;  // > 0 always
};

/// p/q reduced to lowest terms with positive denominator. Throws
/// std::invalid_argument when q == 0.
Rational rat_new(std::int64_t p, std::int64_t q);

/// r^n with exact arithmetic, n >= 0.
Rational rat_pow(const Rational& r, unsigned n);

/// Floor of the n-th root of a non-negative integer, plus exactness flag.
struct IntegerRoot {
    BigInt root;
    bool exact;
};
IntegerRoot integer_nth_root(const BigInt& value, unsigned n);

/// Exact n-th root of r in [0,1] if one exists in the rationals.
/// Decided by integer root extraction on numerator and denominator.
std::optional<Rational> nth_root_exact(const Rational& r, unsigned n);

/// Continued-fraction convergents of x with denominators <= max_den, in
/// generation order (error strictly decreasing).
std::vector<Rational> convergents(double x, std::int64_t max_den);

/// Smallest-denominator convergent p/q of x with q <= max_den and
/// |x - p/q| <= tol, or nullopt when no convergent qualifies.
std::optional<Rational> rational_reconstruct(double x, std::int64_t max_den, double tol);

}  // namespace fermat
