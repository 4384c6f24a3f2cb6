#pragma once

#include <stdexcept>
#include <string>

namespace pq {

  // Every failure raised by the library derives from Error. The CLI maps
  // InputError subclasses to exit code 2.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InputError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public InputError {
   public:
    using InputError::InputError;
  };

  class NotAGroup : public InputError {
   public:
    using InputError::InputError;
  };

  class SizeLimit : public InputError {
   public:
    using InputError::InputError;
  };

  class BadParameter : public InputError {
   public:
    using InputError::InputError;
  };

  class BadMap : public InputError {
   public:
    using InputError::InputError;
  };

  class NotAbelian : public InputError {
   public:
    using InputError::InputError;
  };

  class NotNormal : public Error {
   public:
    using Error::Error;
  };

  class NotAHomomorphism : public Error {
   public:
    using Error::Error;
  };

  // The ascending chain criterion does not hold, so the class equation has
  // no ordering to sum along.
  class NoChain : public Error {
   public:
    using Error::Error;
  };

  class TheoremViolation : public Error {
   public:
    using Error::Error;
  };

}  // namespace pq
