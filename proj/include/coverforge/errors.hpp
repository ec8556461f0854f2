#pragma once

#include <stdexcept>
#include <string>

namespace coverforge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

struct OrderExceedsLimit : Error {
  using Error::Error;
};

// Subgroup enumeration met an insoluble group whose perfect subgroups are
// outside the built-in registry; the lattice would be incomplete.
struct UnsupportedStructure : Error {
  using Error::Error;
};

struct NotNormal : Error {
  using Error::Error;
};

struct UnsupportedField : Error {
  using Error::Error;
};

struct CosetLimitExceeded : Error {
  using Error::Error;
};

struct NotGenerating : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct NeedsCertificate : Error {
  using Error::Error;
};

struct AuthorityGap : Error {
  using Error::Error;
};

struct NotNilpotent : Error {
  using Error::Error;
};

struct EmptyFamily : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::string msg, int line) : Error(std::move(msg)), line_no(line) {}
  int line_no;
};

struct OrderMismatch : Error {
  using Error::Error;
};

}  // namespace coverforge
