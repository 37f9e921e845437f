#pragma once

/**
 * Ordered enumeration of the reduced fractions in [0,1] with bounded
 * denominator (the Farey sequence F_d), via the neighbor recurrence:
 * O(1) memory per step, restartable from any member fraction.
 */

#include "fermat_torus/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fermat {

class FareySequence {
public:
    /// Positioned at 0/1, the first term of F_{max_den}.
    explicit FareySequence(std::int64_t max_den);

    /// Positioned at an arbitrary member of F_{max_den}.
    FareySequence(std::int64_t max_den, std::int64_t p, std::int64_t q);

    std::int64_t num() const { return p_; }
    std::int64_t den() const { return q_; }
    Rational current() const { return Rational(p_, q_); }

    /// Steps to the next term; false once past 1/1.
    bool advance();

private:
    std::int64_t max_den_;
    std::int64_t p_, q_;  // current term
    std::int64_t r_, s_;  // next term, r_/s_ < 0 marks the end
};

/// The term immediately after p/q in F_{max_den}, or nullopt after 1/1.
/// p/q must be a reduced member of the sequence.
std::optional<Rational> farey_successor(std::int64_t p, std::int64_t q, std::int64_t max_den);

/// All of F_{max_den} in increasing order.
std::vector<Rational> farey_enumerate(std::int64_t max_den);

}  // namespace fermat
