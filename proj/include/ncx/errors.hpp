#pragma once

#include <stdexcept>
#include <string>

namespace ncx {

// Base class for all structured failures raised by the library.  Checkers
// that verify theorem statements throw these rather than returning false so
// that the offending node/cell/identity travels with the failure.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A subspace that should be contained in another is not (broken d^N = 0 or an
// indexing bug upstream).
struct ContainmentViolation : Error {
  using Error::Error;
};

// A homology cell was requested whose value depends on data clipped by the
// truncation window.
struct DegreeOutOfWindow : Error {
  using Error::Error;
};

// An exactness assertion (hexagon / long exact sequence node) failed.
struct ExactnessFailure : Error {
  using Error::Error;
};

// Input that was supposed to be a short exact sequence is not one.
struct ExactnessViolation : Error {
  using Error::Error;
};

// A theorem's hypothesis does not hold for the given data; the conclusion is
// not evaluated (this is not a failure of the theorem).
struct PremiseNotMet : Error {
  using Error::Error;
};

// The ambient (field, q, N) context violates assumption (A0) or (A1).
struct AssumptionViolation : Error {
  using Error::Error;
};

// A (co)simplicial identity such as (F), (S) or (SF) fails.
struct RelationViolation : Error {
  using Error::Error;
};

// A square of a comparison diagram does not commute.
struct CommutativityFailure : Error {
  using Error::Error;
};

// A computed homology table disagrees with the predicted dictionary; the
// message lists every failed cell.
struct MismatchReport : Error {
  using Error::Error;
};

// An instance would exceed the configured dimension bound.
struct SizeGuard : Error {
  using Error::Error;
};

// A map that must be an algebra homomorphism is not one.
struct NotAHomomorphism : Error {
  using Error::Error;
};

// The graded q-Leibniz rule fails on a witness pair of basis elements.
struct LeibnizFailure : Error {
  using Error::Error;
};

// d^N != 0 for data that must be an N-differential.
struct NilpotencyViolation : Error {
  using Error::Error;
};

}  // namespace ncx
