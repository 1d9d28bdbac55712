#pragma once

#include <stdexcept>
#include <string>

namespace psbent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter violates a documented precondition
/// (wrong m parity, reducible modulus, x = 0 where forbidden, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A linear map presented for inversion has a singular matrix.
class NotBijective : public Error {
 public:
  using Error::Error;
};

/// gcd(k, 2^{2m} - 1) != 1, so no inverse Dickson exponent exists.
class NotCoprime : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

/// A closed-form inverse disagreed with its brute-force oracle.
class FormulaMismatch : public Error {
 public:
  using Error::Error;
};

/// Brute-force division found zero or several solutions; the multiplication
/// is not a quasigroup on the nonzero elements.
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
};

/// A constructed function failed the Walsh spectrum check.
class BentCertificationFailed : public Error {
 public:
  using Error::Error;
};

class WrongCardinality : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

class ZeroInSupport : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

}  // namespace psbent
