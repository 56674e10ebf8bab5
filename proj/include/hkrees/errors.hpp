#pragma once

#include <stdexcept>
#include <string>

namespace hkrees {

/// The monomial ideal is not primary to the irrelevant ideal: some variable has
/// no pure-power generator, so the quotient is infinite dimensional.
class InfiniteColength : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientSamples : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InconsistentSamples : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPolynomialSamples : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graded oracle sum did not reach the expected stabilization point.
class StabilizationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hkrees
