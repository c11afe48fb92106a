#pragma once

#include <stdexcept>
#include <string>

namespace specgap {

// Base class for all library errors. Subtypes name the failure mode so
// callers can catch them individually.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A precondition on a numeric parameter or matrix shape was violated.
struct ParameterDomain : Error {
  using Error::Error;
};

// An index fell outside the window of a StationaryDist.
struct OutOfWindow : Error {
  using Error::Error;
};

// The truncated fixed-point system has no unique positive solution.
struct SingularSystem : Error {
  using Error::Error;
};

// Birth-death ratio test rejected the chain (no invariant distribution).
struct NotPositiveRecurrent : Error {
  using Error::Error;
};

// Increment coefficients fail their constraints (sum, sign, support).
struct InvalidCoefficients : Error {
  using Error::Error;
};

// Metropolis-Hastings diagonal fell below -1e-12 (inconsistent proposal).
struct NegativeDiagonal : Error {
  using Error::Error;
};

// psi(t) evaluated at t <= 0.
struct NonpositiveArgument : Error {
  using Error::Error;
};

// psi(t) = 1 has no root in (0,1): zero or positive asymptotic drift.
struct NoRootInUnitInterval : Error {
  using Error::Error;
};

// All forward coefficients vanish; the tail ratio is 0 by convention and
// the caller should take the tau = 0 branch.
struct DegenerateTailZero : Error {
  using Error::Error;
};

// tau = 0 was requested but the profile has positive forward mass.
struct InconsistentTauZero : Error {
  using Error::Error;
};

// (PV)(i)/V(i) exceeded alpha on the deep tail: alpha is not above the
// essential bound, no finite drift constant exists.
struct DriftViolatedAtTail : Error {
  using Error::Error;
};

// QR iteration exhausted its sweep budget.
struct NoConvergence : Error {
  using Error::Error;
};

// The eigenvalue nearest 1 is not an isolated Perron root, or a second
// eigenvalue sits on the unit circle (periodic/reducible truncation).
struct PerronNotIsolated : Error {
  using Error::Error;
};

// A 1x1 matrix has no subdominant eigenvalue.
struct NoSubdominant : Error {
  using Error::Error;
};

// Chain-spec document could not be read or tokenized.
struct ParseError : Error {
  using Error::Error;
};

// Chain-spec document parsed but violates the schema.
struct SchemaError : Error {
  using Error::Error;
};

}  // namespace specgap
