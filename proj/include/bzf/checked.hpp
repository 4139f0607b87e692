#ifndef BZF_CHECKED_HPP_
#define BZF_CHECKED_HPP_

// Exact 64-bit signed arithmetic. Every operation throws OverflowError
// instead of wrapping.

#include <cstdint>  // for int64_t

#include "bzf/errors.hpp"

namespace bzf::checked {

  inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
      throw OverflowError("integer overflow in addition");
    }
    return r;
  }

  inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
      throw OverflowError("integer overflow in subtraction");
    }
    return r;
  }

  inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw OverflowError("integer overflow in multiplication");
    }
    return r;
  }

  inline std::int64_t neg(std::int64_t a) {
    return sub(0, a);
  }

  // Floor division by 2, exact for negative arguments.
  constexpr std::int64_t floor_half(std::int64_t a) noexcept {
    return (a >= 0) ? a / 2 : -((-(a + 1)) / 2) - 1;
  }

}  // namespace bzf::checked

#endif  // BZF_CHECKED_HPP_
