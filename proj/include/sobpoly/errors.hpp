#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sobpoly {

struct ParameterDomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The Pearson recurrence cannot determine this moment (missing initial value
// at a free or singular index).
struct SingularMomentError : std::runtime_error {
    std::int64_t index;
    explicit SingularMomentError(std::int64_t idx)
        : std::runtime_error("moment " + std::to_string(idx) +
                             " is not determined by the Pearson recurrence"),
          index(idx) {}
};

// A supplied initial moment contradicts a relation the recurrence determines.
struct InconsistentInitError : std::runtime_error {
    std::int64_t index;
    explicit InconsistentInitError(std::int64_t idx)
        : std::runtime_error("initial moment data is inconsistent with the Pearson relation at index " +
                             std::to_string(idx)),
          index(idx) {}
};

// First vanishing Hankel minor: the monic orthogonal sequence stops here.
struct QuasiDefiniteBreakdownError : std::runtime_error {
    int index;
    explicit QuasiDefiniteBreakdownError(int n)
        : std::runtime_error("quasi-definiteness breaks down at degree " + std::to_string(n)),
          index(n) {}
};

struct SobolevBreakdownError : std::runtime_error {
    int index;
    explicit SobolevBreakdownError(int n)
        : std::runtime_error("Sobolev norm vanishes at degree " + std::to_string(n)), index(n) {}
};

struct ChainBreakdownError : std::runtime_error {
    int index;
    explicit ChainBreakdownError(int n)
        : std::runtime_error("recurrence chain breaks down at c_" + std::to_string(n)), index(n) {}
};

struct NoClosedFormError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RelationUnsolvableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RelationViolatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LadderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace sobpoly
