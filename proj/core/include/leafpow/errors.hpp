#pragma once

#include <stdexcept>
#include <string>

namespace leafpow {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input, or a value violating a type invariant at
// construction time.
class FormatError : public Error {
 public:
  using Error::Error;
};

class InvalidTree : public FormatError {
 public:
  using FormatError::FormatError;
};

class InvalidGraph : public FormatError {
 public:
  using FormatError::FormatError;
};

class LabelNotFound : public Error {
 public:
  explicit LabelNotFound(const std::string& label)
      : Error("label not found: " + label), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

// Operation needs a metric but the tree has fewer than two leaves.
class DegenerateTree : public Error {
 public:
  using Error::Error;
};

class MalformedMetric : public Error {
 public:
  using Error::Error;
};

// Instance is larger than the brute-force search is configured to handle.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

class CeilingExceeded : public Error {
 public:
  using Error::Error;
};

// A tree handed to the gadget construction does not realize the triangle order.
class RealizationMismatch : public Error {
 public:
  using Error::Error;
};

// A certificate handed to the extraction step does not verify.
class InvalidWitness : public Error {
 public:
  using Error::Error;
};

}  // namespace leafpow
