#pragma once

#include <stdexcept>
#include <string>

namespace edgesamp {

// Malformed input text (edge-list files, generator specs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a graph invariant (self-loop, duplicate edge,
// vertex id out of range).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A brute-force computation would exceed its configured size budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The approximate sampler gave up after its attempt cap.
class AttemptLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A distribution that should be valid by construction is not (negative mass,
// support mismatch).
class DistributionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace edgesamp
