#pragma once

#include <stdexcept>
#include <string>

namespace braidq {

// Bad argument: out-of-range index, n too small, empty family, ...
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A word contains letters the requested group does not have (e.g. a tau
// letter handed to the braid word problem).
class WrongGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MembershipError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration or search budget exceeded. Never signals "no solution".
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An audit observation failed. The audited statements are theorems, so this
// indicates a bug in the toolkit rather than in the mathematics.
class AuditFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace braidq
