#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "shiftfam/error.hpp"

namespace shiftfam {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out))
        throw Error(ErrorKind::Overflow, "integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return out;
}

inline Int checked_sub(Int a, Int b) {
    Int out;
    if (__builtin_sub_overflow(a, b, &out))
        throw Error(ErrorKind::Overflow, "integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
    return out;
}

inline Int checked_mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error(ErrorKind::Overflow, "integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return out;
}

// Floor modulus, always in [0, m).
inline Int mod_floor(Int x, Int m) {
    Int r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace shiftfam
