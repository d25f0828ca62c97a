#pragma once

#include <stdexcept>
#include <string>

namespace symquot {

// Bad user-supplied parameters (CLI exit status 1).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The orbital requested is not self-paired, so no undirected orbital graph exists.
class NotSelfPairedError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A construction failed its own post-condition check. Indicates a defect or bad embedded data.
class ValidationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symquot
