#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace flagweyl {

using Integer = mpz_class;

// Raised when two subsets of different cardinality are compared in the Gale
// order, or when a diagram C does not match the column sizes of D.
class CardinalityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flagweyl
