#ifndef RELCALC_ERRORS_HPP
#define RELCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relcalc {

// Malformed input text or JSON.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Operands from different scalar fields.
struct FieldMismatchError : std::invalid_argument {
  explicit FieldMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

// Shape/ambient mismatch between operands.
struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// A stated operation precondition does not hold for the given values.
struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Brute-force enumeration asked for an infeasible domain.
struct FeasibilityError : PreconditionError {
  explicit FeasibilityError(const std::string& what) : PreconditionError(what) {}
};

}  // namespace relcalc

#endif
