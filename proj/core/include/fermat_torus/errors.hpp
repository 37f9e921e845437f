#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fermat {

/// Evaluation point sits on a pole of the expression (e.g. x = 1).
class singularity_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The quantity has no finite limit at the requested point. Distinct from
/// singularity_error so callers can render divergent tails deliberately.
class divergence_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Numerical integration produced a non-finite state.
class numerical_failure : public std::runtime_error {
public:
    numerical_failure(const std::string& what, std::size_t step)
        : std::runtime_error(what + " at step " + std::to_string(step)), step_(step) {}

    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

}  // namespace fermat
