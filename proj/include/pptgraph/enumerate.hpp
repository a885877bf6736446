#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pptgraph/triple.hpp"

namespace pptgraph {

// All PPTs with both legs strictly below max_leg, ordered by (a, b).
//
// Sweeps the standard parameterization: coprime m > n >= 1 of opposite
// parity give legs (m^2 - n^2, 2mn) and hypotenuse m^2 + n^2, each PPT
// exactly once.
inline std::vector<Triple> enumerate_ppts(int64_t max_leg) {
    std::vector<Triple> out;
    if (max_leg < 5) return out; // smallest PPT is (3,4,5)
    for (int64_t m = 2; 2 * m < max_leg; ++m) {
        // even leg 2mn < max_leg bounds n above; odd leg m^2 - n^2 < max_leg below
        int64_t n_hi = std::min(m - 1, (max_leg - 1) / (2 * m));
        int64_t n_lo = 1;
        if (m * m - 1 >= max_leg) n_lo = isqrt(m * m - max_leg) + 1;
        for (int64_t n = n_lo; n <= n_hi; ++n) {
            if (((m ^ n) & 1) == 0) continue;
            if (std::gcd(m, n) != 1) continue;
            int64_t odd = m * m - n * n;
            int64_t even = 2 * m * n;
            out.push_back({std::min(odd, even), std::max(odd, even), m * m + n * n});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (const auto& t : out)
        if (!is_pythagorean(t) || !is_primitive(t))
            throw std::logic_error("enumerate_ppts produced a bad triple " + t.str());
    return out;
}

// Brute-force oracle with the same contract: double loop over both legs,
// exact integer square-root test, gcd filter. Deliberately shares nothing
// with the parameter sweep above.
inline std::vector<Triple> enumerate_ppts_oracle(int64_t max_leg) {
    std::vector<Triple> out;
    for (int64_t a = 1; a < max_leg; ++a) {
        for (int64_t b = a + 1; b < max_leg; ++b) {
            int64_t cc = a * a + b * b;
            int64_t c = isqrt(cc);
            if (c * c != cc) continue;
            if (gcd3(a, b, c) != 1) continue;
            out.push_back({a, b, c});
        }
    }
    return out; // loop order is already (a, b) order
}

} // namespace pptgraph
