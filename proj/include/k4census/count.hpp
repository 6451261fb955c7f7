#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "k4census/errors.hpp"

namespace k4c {

/// Exact nonnegative counter. All census accumulators are 128-bit and every
/// addition/multiplication is overflow-checked.
using Count = unsigned __int128;

inline Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit counter overflow (add)");
    return r;
}

inline Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit counter overflow (mul)");
    return r;
}

inline Count checked_sub(Count a, Count b) {
    if (b > a) throw OverflowError("negative result in unsigned count arithmetic");
    return a - b;
}

inline Count binomial(std::uint64_t n, unsigned k) {
    if (k > n) return 0;
    Count r = 1;
    for (unsigned i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

std::string to_string(Count v);

/// Parses a nonnegative decimal; throws ParseError on anything else.
Count parse_count(const std::string& text);

mpz_class to_mpz(Count v);

}  // namespace k4c
