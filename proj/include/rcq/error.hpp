#ifndef RCQ_ERROR_HPP
#define RCQ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "rcq/types.hpp"

namespace rcq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: ragged tables, out-of-range entries, unknown labels.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotBijectiveError : public Error {
 public:
  using Error::Error;
};

// A law that was required to hold does not; carries the offending tuple.
class PropertyError : public Error {
 public:
  PropertyError(std::string const& what, std::vector<Elem> witness)
      : Error(what), _witness(std::move(witness)) {}

  std::vector<Elem> const& witness() const noexcept {
    return _witness;
  }

 private:
  std::vector<Elem> _witness;
};

class InjectivityError : public PropertyError {
 public:
  using PropertyError::PropertyError;
};

class ReconstructionError : public PropertyError {
 public:
  using PropertyError::PropertyError;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

// Raised when two derived quantities that must agree do not.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace rcq

#endif
