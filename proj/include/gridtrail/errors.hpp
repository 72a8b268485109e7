#pragma once

#include <stdexcept>
#include <string>

namespace gridtrail {

// Argument outside the range where a formula or operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Grid larger than the configured enumeration cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed interchange input. The message starts with the location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs that are individually well-formed but inconsistent with each other,
// e.g. a trail whose dimension differs from the grid's.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Node, tuple or wall-clock budget exhausted.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gridtrail
