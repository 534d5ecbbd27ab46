#pragma once

#include <stdexcept>
#include <string>

namespace pierce {

// Base for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad schema, degenerate body, incompatible method. CLI exit 1.
struct InputError : Error {
    using Error::Error;
};

// The instance violates its stated hypothesis (a cross pair too far apart).
// Carries a printable witness. CLI exit 2.
struct InvalidInstanceError : Error {
    using Error::Error;
};

// A construction that the theory guarantees has failed: either a library bug
// or an input that slipped past validation. CLI exit 3.
struct TheoremViolationError : Error {
    using Error::Error;
};

struct NotSymmetricError : InputError {
    using InputError::InputError;
};

struct DegenerateTriangleError : InputError {
    using InputError::InputError;
};

struct ConditionsNotMetError : InputError {
    using InputError::InputError;
};

struct RegionConflictError : InvalidInstanceError {
    using InvalidInstanceError::InvalidInstanceError;
};

struct SweepFailedError : TheoremViolationError {
    using TheoremViolationError::TheoremViolationError;
};

struct NoFamilyCoveredError : TheoremViolationError {
    using TheoremViolationError::TheoremViolationError;
};

struct CoverNotVerifiedError : TheoremViolationError {
    using TheoremViolationError::TheoremViolationError;
};

struct ClaimViolatedError : TheoremViolationError {
    using TheoremViolationError::TheoremViolationError;
};

struct NoHoleTriangleError : Error {
    using Error::Error;
};

struct IterationDivergedError : TheoremViolationError {
    using TheoremViolationError::TheoremViolationError;
};

// Exact cross-check between the gauge test and direct intersection disagreed.
struct DisagreementError : TheoremViolationError {
    using TheoremViolationError::TheoremViolationError;
};

struct BoundExceededError : Error {
    using Error::Error;
};

struct GenerationExhaustedError : Error {
    using Error::Error;
};

}  // namespace pierce
