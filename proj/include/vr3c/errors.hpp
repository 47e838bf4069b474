#pragma once

#include <stdexcept>
#include <string>

namespace vr3c {

/// Base class for all library errors so callers can catch in one place.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The MEC server cannot finish the projection within the deadline
/// (tau <= I*w/f0), so no transmission rate is large enough.
class InfeasibleServerCompute : public Error {
public:
    using Error::Error;
};

/// A policy asked for local computation of a viewpoint whose device-side
/// rate floor is undefined (tau <= I*w/f1).
class NotLocallyComputable : public Error {
public:
    using Error::Error;
};

/// Policy vectors do not match the scenario size or each other.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// Scenario construction or validation failed (bad fields, probabilities
/// not summing to one, mixed tasks in a symmetric scenario, ...).
class InvalidScenario : public Error {
public:
    using Error::Error;
};

/// A symmetric-only operation received a heterogeneous scenario.
class NotSymmetric : public Error {
public:
    using Error::Error;
};

/// A heterogeneous-only solver received a symmetric scenario.
class NotHeterogeneous : public Error {
public:
    using Error::Error;
};

/// A closed-form expression was evaluated outside its domain; the message
/// names the term that broke.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Sweep request carried an empty grid.
class EmptyGrid : public Error {
public:
    using Error::Error;
};

/// Exhaustive search refused an instance above its size cap.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// Local search was seeded with an infeasible starting policy.
class InfeasibleInitial : public Error {
public:
    using Error::Error;
};

/// Scenario file / CLI input violates the documented schema; the message
/// names the offending field.
class SchemaError : public Error {
public:
    using Error::Error;
};

} // namespace vr3c
