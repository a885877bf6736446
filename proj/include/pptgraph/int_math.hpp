#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace pptgraph {

using i128 = __int128;

// square as a 128-bit value, exact for any int64 input
inline i128 sq(int64_t x) { return i128(x) * x; }

// floor(sqrt(n)), exact
inline int64_t isqrt(int64_t n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    if (n == 0) return 0;
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && sq(r) > n) --r;
    while (sq(r + 1) <= n) ++r;
    return r;
}

inline bool is_perfect_square(int64_t n) {
    if (n < 0) return false;
    int64_t r = isqrt(n);
    return r * r == n;
}

inline int64_t gcd3(int64_t a, int64_t b, int64_t c) {
    return std::gcd(std::gcd(a, b), c);
}

} // namespace pptgraph
