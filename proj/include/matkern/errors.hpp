#pragma once

#include <stdexcept>
#include <string>

namespace matkern {

// Base of all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Out-of-range ids, duplicate elements, schema violations.
class malformed_input : public error {
 public:
  using error::error;
};

// Loop elements (or cap-0 structures) where a loopless matroid is required.
class normalization_error : public error {
 public:
  using error::error;
};

// A matroid of the wrong class was handed to an algorithm.
class class_mismatch : public error {
 public:
  using error::error;
};

// Violated numeric contract, e.g. a coverability value g(k) < k.
class contract_error : public error {
 public:
  using error::error;
};

// Brute-force/enumeration budget refusals; the CLI maps these to exit code 2.
class budget_exceeded : public error {
 public:
  using error::error;
};

}  // namespace matkern
