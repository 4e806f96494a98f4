#ifndef ASSOFORM_ERRORS_HPP
#define ASSOFORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace assoform {

// Base of every error the library throws on a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched variable counts, wrong variable space, out-of-range indices,
// inhomogeneous input where a form is required.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotRegularSequence : public Error {
 public:
  using Error::Error;
};

class SingularHypersurface : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class DegreeCapExceeded : public Error {
 public:
  using Error::Error;
};

// Raised when a mathematically impossible state is reached.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace assoform

#endif  // ASSOFORM_ERRORS_HPP
