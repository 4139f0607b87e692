#ifndef BZF_ERRORS_HPP_
#define BZF_ERRORS_HPP_

#include <cstdint>    // for int64_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace bzf {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed user input: unparseable text or JSON, bad ranges.
  class MalformedInput : public Error {
   public:
    using Error::Error;
  };

  //! A 64-bit signed intermediate result does not fit.
  class OverflowError : public Error {
   public:
    using Error::Error;
  };

  //! An element index does not belong to the ambient family.
  class FamilyMismatch : public Error {
   public:
    using Error::Error;
  };

  //! Witness that \f$F_1 \cap (-n + F_2)\f$ is not a member tail.
  class NotOmegaClosed : public Error {
   public:
    NotOmegaClosed(std::int64_t first, std::int64_t second, std::int64_t shift);

    std::int64_t first() const noexcept {
      return _first;
    }
    std::int64_t second() const noexcept {
      return _second;
    }
    std::int64_t shift() const noexcept {
      return _shift;
    }

   private:
    std::int64_t _first;
    std::int64_t _second;
    std::int64_t _shift;
  };

  class NotInCorner : public Error {
   public:
    using Error::Error;
  };

  //! Requested an alpha/beta base outside the injective parameter ranges.
  class ParamOutOfRange : public Error {
   public:
    using Error::Error;
  };

  class NotAnAutomorphism : public Error {
   public:
    using Error::Error;
  };

  //! Raised by compose when the pointwise composite fails to classify. This
  //! always indicates a bug in the library.
  class NormalizationFailed : public Error {
   public:
    using Error::Error;
  };

  //! A map table's domain is too small for a meaningful check.
  class InsufficientDomain : public Error {
   public:
    using Error::Error;
  };

}  // namespace bzf

#endif  // BZF_ERRORS_HPP_
