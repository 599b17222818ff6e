#pragma once

#include <cstdint>

#include "krull/error.hpp"

namespace krull {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

// Mathematical remainder in [0, n) for n > 0.
inline Int mod_floor(Int a, Int n) {
    Int r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace krull
