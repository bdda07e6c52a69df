#pragma once

#include <stdexcept>
#include <string>

namespace pcone {

// Violated construction invariant or operation precondition.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Runtime numeric failure: overflow guard tripped, grid came out empty, ...
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed JSON that does not match an expected object schema.
class schema_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcone
