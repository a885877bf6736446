#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pptgraph/int_math.hpp"

namespace pptgraph {

// Pythagorean triple in canonical storage order a < b < c.
struct Triple {
    int64_t a = 0; // shorter leg
    int64_t b = 0; // longer leg
    int64_t c = 0; // hypotenuse

    auto operator<=>(const Triple&) const = default;

    std::string str() const {
        return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
    }
};

// A triple seen from one of its two plot orientations: the point (x, y)
// together with the hypotenuse. x and y are the two legs in either order.
struct PlottedTriple {
    int64_t x = 0;
    int64_t y = 0;
    int64_t c = 0;

    auto operator<=>(const PlottedTriple&) const = default;

    Triple canonical() const { return {std::min(x, y), std::max(x, y), c}; }
};

// true iff a^2 + b^2 = c^2, exact
inline bool is_pythagorean(int64_t a, int64_t b, int64_t c) {
    if (a < 1 || b < 1 || c < 1) return false;
    return sq(a) + sq(b) == sq(c);
}

inline bool is_pythagorean(const Triple& t) { return is_pythagorean(t.a, t.b, t.c); }

inline bool is_primitive(const Triple& t) { return gcd3(t.a, t.b, t.c) == 1; }

inline bool is_primitive(const PlottedTriple& p) { return is_primitive(p.canonical()); }

// Canonicalize legs given in either order; rejects non-Pythagorean input.
inline Triple make_triple(int64_t x, int64_t y, int64_t z) {
    Triple t{std::min(x, y), std::max(x, y), z};
    if (!is_pythagorean(t)) throw std::domain_error("not a Pythagorean triple");
    return t;
}

enum class Region { below_diagonal, above_diagonal };

struct PlotPoint {
    int64_t x = 0;
    int64_t y = 0;
    Region region = Region::below_diagonal;

    auto operator<=>(const PlotPoint&) const = default;
};

// Two plot points per triple: (a, b) and its reflection (b, a) about y = x.
inline std::vector<PlotPoint> plot_points(const std::vector<Triple>& triples) {
    std::vector<PlotPoint> out;
    out.reserve(2 * triples.size());
    for (const auto& t : triples) {
        out.push_back({t.a, t.b, Region::below_diagonal});
        out.push_back({t.b, t.a, Region::above_diagonal});
    }
    return out;
}

} // namespace pptgraph
