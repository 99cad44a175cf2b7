#pragma once

#include <stdexcept>
#include <string>

namespace nqs {

/// A caller-supplied value violates an operation's precondition.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested security parameters admit no secure instance
/// (storage too capacious, or no positive string length remains).
class Infeasible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive routine was asked for an instance above its declared size cap.
class SizeCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A numerical routine failed to converge or produced a non-finite value.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& what) {
  if (!condition) throw InvalidParameter(what);
}

}  // namespace nqs
