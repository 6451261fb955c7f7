#include "k4census/count.hpp"

#include <algorithm>

namespace k4c {

std::string to_string(Count v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

Count parse_count(const std::string& text) {
    if (text.empty()) throw ParseError(0, "empty number");
    Count v = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw ParseError(i, "expected decimal digit");
        Count next;
        if (__builtin_mul_overflow(v, Count{10}, &next) || __builtin_add_overflow(next, Count(c - '0'), &next))
            throw ParseError(i, "number out of range");
        v = next;
    }
    return v;
}

mpz_class to_mpz(Count v) {
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
    return (hi << 64) + lo;
}

}  // namespace k4c
