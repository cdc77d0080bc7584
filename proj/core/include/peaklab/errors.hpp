#ifndef PEAKLAB_ERRORS_HPP
#define PEAKLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace peaklab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text, or a value that violates a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration refused because the permutation length exceeds
/// the configured exhaustion limit.
class ExhaustionLimit : public Error {
 public:
  ExhaustionLimit(int size, int limit)
      : Error("exhaustion limit: size " + std::to_string(size) +
              " exceeds limit " + std::to_string(limit) +
              " (use the fast counter)"),
        size_(size),
        limit_(limit) {}

  int size() const noexcept { return size_; }
  int limit() const noexcept { return limit_; }

 private:
  int size_;
  int limit_;
};

/// A closed form produced a value that cannot be a cardinality.
class FormulaInconsistency : public Error {
 public:
  using Error::Error;
};

/// No closed form covers the requested index and the oracle is out of reach.
class FormulaNotStated : public Error {
 public:
  using Error::Error;
};

/// Thrown when the Int-table hypothesis of the comparison injection fails.
class DominanceViolation : public Error {
 public:
  DominanceViolation(int first_letter, int last_letter)
      : Error("dominance hypothesis violated at (" +
              std::to_string(first_letter) + "," +
              std::to_string(last_letter) + ")"),
        first_(first_letter),
        last_(last_letter) {}

  int first_letter() const noexcept { return first_; }
  int last_letter() const noexcept { return last_; }

 private:
  int first_;
  int last_;
};

}  // namespace peaklab

#endif  // PEAKLAB_ERRORS_HPP
