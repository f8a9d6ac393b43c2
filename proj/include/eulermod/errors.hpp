#pragma once

#include <stdexcept>
#include <string>

namespace eulermod {

/// A precondition on an argument was violated (even modulus where odd is
/// required, a non q-integer where one is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by modular inversion and order computation when gcd(x, m) != 1.
class NotInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A checked mathematical fact turned out false.  Either a bug or a falsified
/// theorem; never swallowed.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A cache file failed format or integrity validation.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eulermod
