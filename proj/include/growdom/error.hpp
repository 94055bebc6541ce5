#ifndef GROWDOM_ERROR_HPP
#define GROWDOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace growdom {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument or constructed object violates its documented constraints.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed: singular solve, NaN, non-convergence,
/// or a negative density beyond roundoff.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// File-system problem: missing input, unwritable output.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace growdom

#endif  // GROWDOM_ERROR_HPP
