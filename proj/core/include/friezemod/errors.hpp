#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace friezemod {

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ModulusMismatch : public InputError {
public:
    ModulusMismatch(std::int64_t lhs, std::int64_t rhs)
        : InputError("modulus mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class NoInverse : public InputError {
public:
    NoInverse(std::int64_t value, std::int64_t modulus, std::int64_t gcd)
        : InputError(std::to_string(value) + " is not invertible mod " + std::to_string(modulus) +
                     " (gcd " + std::to_string(gcd) + ")"),
          gcd_(gcd) {}

    std::int64_t gcd() const noexcept { return gcd_; }

private:
    std::int64_t gcd_;
};

class NotASolution : public InputError {
public:
    using InputError::InputError;
};

// A search ran out of its work budget before reaching a verdict.
class WorkLimitExceeded : public std::runtime_error {
public:
    WorkLimitExceeded(std::uint64_t spent, std::uint64_t limit)
        : std::runtime_error("work limit exceeded (" + std::to_string(spent) + " of " +
                             std::to_string(limit) + " units)"),
          spent_(spent), limit_(limit) {}

    std::uint64_t spent() const noexcept { return spent_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t spent_;
    std::uint64_t limit_;
};

// Raised when a computation contradicts a proven bound; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace friezemod
