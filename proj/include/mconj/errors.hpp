#pragma once

#include <stdexcept>
#include <string>

namespace mconj {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or mismatched input (parse errors, wrong variable counts).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was exceeded. Never silently truncated.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed. Always a bug signal.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace mconj
