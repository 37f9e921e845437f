#include "fermat_torus/farey.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace fermat {

namespace {

// x^{-1} mod m for coprime x, m >= 1.
std::int64_t mod_inverse(std::int64_t x, std::int64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = m, new_r = x % m;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) {
        throw std::invalid_argument("mod_inverse: arguments not coprime");
    }
    return t < 0 ? t + m : t;
}

void check_member(std::int64_t p, std::int64_t q, std::int64_t max_den) {
    if (max_den < 1) {
        throw std::invalid_argument("farey: max_den must be >= 1");
    }
    if (q < 1 || q > max_den || p < 0 || p > q || std::gcd(p, q) != 1) {
        throw std::invalid_argument("farey: p/q is not a member of the sequence");
    }
}

}  // namespace

std::optional<Rational> farey_successor(std::int64_t p, std::int64_t q, std::int64_t max_den) {
    check_member(p, q, max_den);
    if (p == q) {
        return std::nullopt;  // past 1/1
    }
    if (p == 0) {
        return Rational(1, max_den);
    }
    // Successor r/s of p/q satisfies r*q - s*p = 1 with the largest s <= max_den.
    std::int64_t s0 = q - mod_inverse(p % q, q);
    std::int64_t s = s0 + ((max_den - s0) / q) * q;
    std::int64_t r = (1 + s * p) / q;
    return Rational(r, s);
}

FareySequence::FareySequence(std::int64_t max_den) : max_den_(max_den), p_(0), q_(1) {
    if (max_den < 1) {
        throw std::invalid_argument("FareySequence: max_den must be >= 1");
    }
    r_ = 1;
    s_ = max_den;
}

FareySequence::FareySequence(std::int64_t max_den, std::int64_t p, std::int64_t q)
    : max_den_(max_den), p_(p), q_(q) {
    check_member(p, q, max_den);
    auto next = farey_successor(p, q, max_den);
    if (next) {
        r_ = next->num().convert_to<std::int64_t>();
        s_ = next->den().convert_to<std::int64_t>();
    } else {
        r_ = -1;
        s_ = -1;
    }
}

bool FareySequence::advance() {
    if (r_ < 0) {
        return false;
    }
    // Next-term recurrence from the two current neighbors.
    std::int64_t k = (max_den_ + q_) / s_;
    std::int64_t np = k * r_ - p_;
    std::int64_t nq = k * s_ - q_;
    p_ = r_;
    q_ = s_;
    if (p_ == q_) {
        r_ = -1;  // reached 1/1
        s_ = -1;
    } else {
        r_ = np;
        s_ = nq;
    }
    return true;
}

std::vector<Rational> farey_enumerate(std::int64_t max_den) {
    std::vector<Rational> out;
    FareySequence seq(max_den);
    out.push_back(seq.current());
    while (seq.advance()) {
        out.push_back(seq.current());
    }
    return out;
}

}  // namespace fermat
