// framoid - exact computations in framed and tied diagram monoids

#ifndef FRAMOID_ERROR_HPP_
#define FRAMOID_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace framoid {

  //! Base class for every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A generator symbol, word token, or index is not valid for (n, d).
  class InvalidSymbol : public Error {
   public:
    using Error::Error;
  };

  //! Two operands do not live in the same ambient (n, d, ties, policy).
  class AmbientMismatch : public Error {
   public:
    using Error::Error;
  };

  //! A diagram violates a structural invariant.
  class InvalidDiagram : public Error {
   public:
    using Error::Error;
  };

  //! An enumeration grew past its element cap.
  class CapExceeded : public Error {
   public:
    CapExceeded(std::string const& what, std::size_t cap)
        : Error(what + " (cap " + std::to_string(cap) + ")"), _cap(cap) {}

    std::size_t cap() const noexcept {
      return _cap;
    }

   private:
    std::size_t _cap;
  };

  //! jones_nf was asked for a diagram that is not a planar matching.
  class NotPlanar : public Error {
   public:
    using Error::Error;
  };

}  // namespace framoid

#endif  // FRAMOID_ERROR_HPP_
