#pragma once

#include <stdexcept>
#include <string>

namespace planar {

/// Error categories raised on contract violations. Decision outcomes
/// (NotApart, Parallel, Undecided, ...) are ordinary return values, not
/// errors; these codes cover caller bugs and malformed inputs.
enum class Errc {
  BackendMismatch,
  NegativeBudget,
  NotPrime,
  NotInvertible,
  MissingWitness,
  ZeroDirection,
  PointsNotApart,
  ParallelLines,
  LinesEqual,
  NotCollinear,
  PointEqualsCenter,
  RatioIsOne,
  ScalarZero,
  BaseIsIdentity,
  DirectionsDiffer,
  SameDirection,
  InvalidFrame,
  MalformedConfig,
  InconsistentPartialData,
  UnknownExample,
  BadSpec,
  Internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

/// Raised when a value-returning operation on the dyadic backend exhausts
/// its precision budget. Carries the budget that was spent.
class UndecidedError : public Error {
public:
  UndecidedError(int budget, const std::string& what)
      : Error(Errc::MissingWitness, what + " (undecided at budget " + std::to_string(budget) + ")"),
        budget_(budget) {}

  int budget() const { return budget_; }

private:
  int budget_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace planar
