#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace halin {

/// Base class for every error raised by the workbench.
class HalinError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The tree handed to build_halin violates a PlaneTree invariant.
class InvalidTree : public HalinError {
 public:
  using HalinError::HalinError;
};

/// Malformed `halin1` text. `offset` is the byte offset of the offending character.
class ParseError : public HalinError {
 public:
  ParseError(std::size_t offset, std::string reason)
      : HalinError("parse error at byte " + std::to_string(offset) + ": " + reason),
        offset_(offset),
        reason_(std::move(reason)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t offset_;
  std::string reason_;
};

class EdgeNotInGraph : public HalinError {
 public:
  using HalinError::HalinError;
};

/// A surgery or query was invoked on a site that does not meet its preconditions.
class PreconditionFailed : public HalinError {
 public:
  using HalinError::HalinError;
};

class OutOfRange : public HalinError {
 public:
  using HalinError::HalinError;
};

/// Enumeration requested above the configured vertex cap.
class LimitExceeded : public HalinError {
 public:
  using HalinError::HalinError;
};

/// The rejection sampler ran out of retries.
class GenerationFailed : public HalinError {
 public:
  using HalinError::HalinError;
};

/// An operation produced a result violating its own postcondition. Never expected.
class PostconditionFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace halin
