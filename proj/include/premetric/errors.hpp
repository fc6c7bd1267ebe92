#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace premetric {

/// Operands live in incompatible spaces (e.g. composing two bivector slots).
class SpaceMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was asked of an input outside its domain of applicability
/// (e.g. the P/Q discriminator on a bidyadic that fails the quadratic law).
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree exactly did not. Indicates a sign-table bug.
class ConventionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NoInverse : public std::runtime_error {
 public:
  NoInverse(std::size_t rank, std::size_t dim, const std::string& detail = {})
      : std::runtime_error("no inverse: rank " + std::to_string(rank) + " of " + std::to_string(dim) +
                           (detail.empty() ? "" : " (" + detail + ")")),
        rank_(rank),
        dim_(dim) {}

  std::size_t rank() const { return rank_; }
  std::size_t dim() const { return dim_; }

 private:
  std::size_t rank_;
  std::size_t dim_;
};

}  // namespace premetric
