#pragma once

#include <stdexcept>
#include <string>

namespace modclass {

/// Invalid input: non-prime characteristic, non-subfield, malformed module, caps exceeded.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A statement that must hold for every finite group failed on concrete data.
/// Either a bug or a counterexample; never raised for ordinary bad input.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Las Vegas routine exhausted its attempt budget without a certificate.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace modclass
