#pragma once

#include <stdexcept>
#include <string>

namespace slodowy {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed partitions, unknown families, shape mismatches on entry.
struct InputError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct StructureError : Error {
  using Error::Error;
};

struct MembershipError : Error {
  using Error::Error;
};

struct NotNilpotentError : Error {
  using Error::Error;
};

struct NotTriangularizableError : Error {
  using Error::Error;
};

// An identity that must hold exactly did not. Carries the offending difference.
struct IdentityError : Error {
  IdentityError(const std::string& what, std::string difference)
      : Error(what), difference_(std::move(difference)) {}
  const std::string& difference() const { return difference_; }

 private:
  std::string difference_;
};

}  // namespace slodowy
