#pragma once

#include <stdexcept>

namespace hedgehog {

/// Input lies outside a theorem's hypotheses (e.g. a nonconvex curve passed
/// to a computation stated for ovals).
class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A numerical procedure could not certify its result (root refinement,
/// winding-number accumulation, sup-norm certificate).
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace hedgehog
