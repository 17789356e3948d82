#pragma once

#include <stdexcept>
#include <string>

namespace flatmod {

/// Operand shapes or generator counts that do not line up.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates a numerical precondition (unitarity, skewness, involution, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation is not implemented for the requested group or surface.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A surface relation word does not evaluate to the identity.
/// Malformed input text (group/surface specs, JSON files).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RelationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A lifted relation value could not be matched to a unique kernel element.
class KernelRecognitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flatmod
