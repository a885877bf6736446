#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pptgraph/dvalues.hpp"
#include "pptgraph/int_math.hpp"
#include "pptgraph/rational.hpp"
#include "pptgraph/triple.hpp"

namespace pptgraph {

// Raised when a structural postcondition fails, which signals that the
// input point was not taken from a PPT.
struct inconsistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

enum class UpOrient { up, right };    // opens about +y / +x
enum class DownOrient { down, left }; // opens about -y / -x

// Parabola through all PPT points with a given difference value.
// Opens-up form: 2*d*y = x^2 - d^2, i.e. y = (x^2 - d^2)/(2d);
// opens-right is the reflection about y = x.
struct UpParabola {
    int64_t d = 1;
    UpOrient orient = UpOrient::up;

    UpParabola(int64_t d_, UpOrient o = UpOrient::up) : d(d_), orient(o) {
        if (!is_allowable(d)) throw std::domain_error("d = " + std::to_string(d) + " is not an allowable value");
    }
};

// Longer leg of the anchor triple for anchor leg a1 and family d0:
// b1 = (a1^2 - d0^2)/(2*d0). Throws unless that is a positive integer.
inline int64_t anchor_b1(int64_t a1, int64_t d0) {
    if (d0 != 1 && d0 != 2 && d0 != 8) throw std::domain_error("d0 must be 1, 2 or 8");
    if (a1 < 1) throw std::domain_error("a1 must be positive");
    int64_t num = a1 * a1 - d0 * d0;
    if (num <= 0 || num % (2 * d0) != 0)
        throw std::domain_error("no anchor triple for a1 = " + std::to_string(a1) +
                                ", d0 = " + std::to_string(d0));
    return num / (2 * d0);
}

// Parabola through the multiples of one anchor point.
// Opens-down form: 2*a1^2*d0*y = -d0^2*x^2 + a1^4, i.e.
// y = -x^2/(2*a1^2/d0) + a1^2/(2*d0); opens-left is the reflection.
struct DownParabola {
    int64_t a1 = 3;
    int64_t d0 = 1;
    DownOrient orient = DownOrient::down;

    DownParabola(int64_t a1_, int64_t d0_, DownOrient o = DownOrient::down)
        : a1(a1_), d0(d0_), orient(o) {
        int64_t b1 = anchor_b1(a1, d0); // validates a1, d0
        if (!is_primitive(Triple{std::min(a1, b1), std::max(a1, b1), b1 + d0}))
            throw std::domain_error("anchor triple for a1 = " + std::to_string(a1) +
                                    ", d0 = " + std::to_string(d0) + " is not primitive");
    }

    Triple anchor_triple() const {
        int64_t b1 = anchor_b1(a1, d0);
        return {std::min(a1, b1), std::max(a1, b1), b1 + d0};
    }
};

// Decomposition of a PPT point's difference value d = t^2 * d0 tying the
// point (a, b) = (t*a1, ...) to its anchor (a1, b1).
struct Anchor {
    int64_t a1 = 3;
    int64_t d0 = 1;
    int64_t t = 1;
    Triple anchor_triple;

    // the anchor as a plotted point, x-coordinate a1
    PlottedTriple anchor_point() const {
        int64_t b1 = anchor_b1(a1, d0);
        return {a1, b1, b1 + d0};
    }
};

// The d = 1 family (a, (a^2-1)/2, (a^2+1)/2), one PPT per odd a >= 3.
inline Triple family_d1(int64_t a) {
    if (a < 3 || a % 2 == 0)
        throw std::domain_error("family_d1 requires an odd a >= 3");
    return {a, (a * a - 1) / 2, (a * a + 1) / 2};
}

// The d = 2 family (4k, 4k^2-1, 4k^2+1), canonicalized.
inline Triple family_d2(int64_t k) {
    if (k < 1) throw std::domain_error("family_d2 requires k >= 1");
    return make_triple(4 * k, 4 * k * k - 1, 4 * k * k + 1);
}

// Exact membership tests. Total over integer points, no floating point.
inline bool up_contains(const UpParabola& p, int64_t x, int64_t y) {
    if (p.orient == UpOrient::right) std::swap(x, y);
    return i128(2) * p.d * y == sq(x) - sq(p.d);
}

inline bool down_contains(const DownParabola& p, int64_t x, int64_t y) {
    if (p.orient == DownOrient::left) std::swap(x, y);
    i128 a1sq = sq(p.a1);
    return i128(2) * p.d0 * p.a1 * p.a1 * y == a1sq * a1sq - sq(p.d0) * sq(x);
}

// The two positive-axis parabolas through one plotted PPT point:
// opens-up with d = c - y and opens-right with d' = c - x.
inline std::pair<UpParabola, UpParabola> classify_point(const Triple& t, Region region) {
    if (!is_pythagorean(t)) throw std::domain_error("not a Pythagorean triple");
    if (!is_primitive(t)) throw std::domain_error("not primitive");
    int64_t y = region == Region::below_diagonal ? t.b : t.a;
    int64_t x = region == Region::below_diagonal ? t.a : t.b;
    return {UpParabola(t.c - y, UpOrient::up), UpParabola(t.c - x, UpOrient::right)};
}

// Unique factorization of an allowable d as t^2 * d0, d0 in {1, 2, 8}:
//   d = s^2, s odd      -> (s, 1)
//   d = 2s^2, s odd     -> (s, 2)
//   d = 2s^2, s even    -> (s/2, 8)
inline std::pair<int64_t, int64_t> split_allowable(int64_t d) {
    if (!is_allowable(d)) throw std::domain_error("d = " + std::to_string(d) + " is not an allowable value");
    if (d % 2 == 1) return {isqrt(d), 1};
    int64_t s = isqrt(d / 2);
    if (s % 2 == 1) return {s, 2};
    return {s / 2, 8};
}

// Anchor decomposition of a plotted point (x, y) with hypotenuse c.
// Checks the structural postconditions (t | x, anchor is a PPT, b1
// dominates y) and reports a violation as inconsistency_error.
inline Anchor anchor_of(int64_t x, int64_t y, int64_t c) {
    if (x < 1 || y < 1 || c <= y) throw std::domain_error("invalid plotted point");
    int64_t d = c - y;
    if (!is_allowable(d))
        throw std::domain_error("d = " + std::to_string(d) + " is not an allowable value");
    auto [t, d0] = split_allowable(d);
    if (x % t != 0)
        throw inconsistency_error("t = " + std::to_string(t) + " does not divide x = " +
                                  std::to_string(x) + ": point is not from a PPT");
    int64_t a1 = x / t;
    int64_t b1;
    try {
        b1 = anchor_b1(a1, d0);
    } catch (const std::domain_error&) {
        throw inconsistency_error("a1 = " + std::to_string(a1) + " has no d0 = " +
                                  std::to_string(d0) + " anchor: point is not from a PPT");
    }
    Triple anchor{std::min(a1, b1), std::max(a1, b1), b1 + d0};
    if (!is_primitive(anchor))
        throw inconsistency_error("anchor triple " + anchor.str() +
                                  " is not primitive: point is not from a PPT");
    if (b1 < y || (b1 == y) != (t == 1))
        throw inconsistency_error("anchor point does not dominate (" + std::to_string(x) +
                                  ", " + std::to_string(y) + "): point is not from a PPT");
    return Anchor{a1, d0, t, anchor};
}

inline DownParabola down_parabola_of(const Anchor& a, DownOrient o = DownOrient::down) {
    return DownParabola(a.a1, a.d0, o);
}

// All lattice points (t*a1, y), y > 0, on an opens-down parabola, by
// increasing t. With primitive_only set, keeps only points whose
// completed triple (with c = y + t^2*d0) is a PPT.
inline std::vector<std::pair<int64_t, int64_t>> down_points(const DownParabola& p,
                                                            bool primitive_only) {
    if (p.orient != DownOrient::down)
        throw std::domain_error("down_points requires an opens-down parabola");
    std::vector<std::pair<int64_t, int64_t>> out;
    for (int64_t t = 1; p.d0 * t < p.a1; ++t) { // y > 0 iff d0*t < a1
        int64_t num = p.a1 * p.a1 - p.d0 * p.d0 * t * t;
        if (num % (2 * p.d0) != 0) continue; // no lattice point in this column
        int64_t y = num / (2 * p.d0);
        if (primitive_only && !is_primitive(PlottedTriple{t * p.a1, y, y + t * t * p.d0}))
            continue;
        out.emplace_back(t * p.a1, y);
    }
    return out;
}

// Exact tangent slopes of an intersecting up/down (or right/left) pair at
// a common point. Their product is -1 for every PPT plot point.
inline std::pair<Rat, Rat> slopes_at(const UpParabola& up, const DownParabola& down,
                                     int64_t x, int64_t y) {
    if (!up_contains(up, x, y) || !down_contains(down, x, y))
        throw std::domain_error("point is not on both parabolas");
    if (up.orient == UpOrient::up && down.orient == DownOrient::down)
        return {Rat(x, up.d), -Rat(x * down.d0, down.a1 * down.a1)};
    if (up.orient == UpOrient::right && down.orient == DownOrient::left)
        return {Rat(up.d, y), -Rat(down.a1 * down.a1, y * down.d0)};
    throw std::domain_error("parabolas open about different axes");
}

struct RatPoint {
    Rat x;
    Rat y;
    friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

struct ParabolaGeometry {
    RatPoint vertex;
    RatPoint focus;
    // crossings of the x-axis; absent when the x-axis is the symmetry axis
    std::optional<std::pair<Rat, Rat>> x_intercepts;
};

// Vertex, focus and intercepts, derived from the focal distance so the
// focus-at-origin property is computed rather than assumed.
inline ParabolaGeometry geometry_of(const UpParabola& p) {
    Rat focal(p.d, 2);
    ParabolaGeometry g;
    if (p.orient == UpOrient::up) {
        g.vertex = {Rat(0), -focal};
        g.focus = {Rat(0), g.vertex.y + focal};
        g.x_intercepts = {Rat(-p.d), Rat(p.d)};
    } else {
        g.vertex = {-focal, Rat(0)};
        g.focus = {g.vertex.x + focal, Rat(0)};
    }
    return g;
}

inline ParabolaGeometry geometry_of(const DownParabola& p) {
    Rat focal(p.a1 * p.a1, 2 * p.d0);
    ParabolaGeometry g;
    if (p.orient == DownOrient::down) {
        g.vertex = {Rat(0), focal};
        g.focus = {Rat(0), g.vertex.y - focal};
        g.x_intercepts = {-Rat(p.a1 * p.a1, p.d0), Rat(p.a1 * p.a1, p.d0)};
    } else {
        g.vertex = {focal, Rat(0)};
        g.focus = {g.vertex.x - focal, Rat(0)};
    }
    return g;
}

// Expanded exact equation, e.g. "y = x^2/98 - 49/2" or "y = -x^2/400 + 100".
inline std::string equation(const UpParabola& p) {
    const char* lhs = p.orient == UpOrient::up ? "y" : "x";
    const char* var = p.orient == UpOrient::up ? "x" : "y";
    return std::string(lhs) + " = " + var + "^2/" + std::to_string(2 * p.d) + " - " +
           Rat(p.d, 2).str();
}

inline std::string equation(const DownParabola& p) {
    const char* lhs = p.orient == DownOrient::down ? "y" : "x";
    const char* var = p.orient == DownOrient::down ? "x" : "y";
    return std::string(lhs) + " = -" + var + "^2/" + std::to_string(2 * p.a1 * p.a1 / p.d0) +
           " + " + Rat(p.a1 * p.a1, 2 * p.d0).str();
}

inline nlohmann::ordered_json to_json(const Rat& r) {
    return nlohmann::ordered_json::array({r.num, r.den});
}

inline nlohmann::ordered_json to_json(const RatPoint& p) {
    return nlohmann::ordered_json::array({to_json(p.x), to_json(p.y)});
}

namespace detail {
inline void put_geometry(nlohmann::ordered_json& j, const ParabolaGeometry& g) {
    j["vertex"] = to_json(g.vertex);
    j["focus"] = to_json(g.focus);
    if (g.x_intercepts)
        j["intercepts"] =
            nlohmann::ordered_json::array({to_json(g.x_intercepts->first), to_json(g.x_intercepts->second)});
    else
        j["intercepts"] = nullptr;
}
} // namespace detail

inline nlohmann::ordered_json to_json(const UpParabola& p) {
    nlohmann::ordered_json j;
    j["family"] = p.orient == UpOrient::up ? "up" : "right";
    j["d"] = p.d;
    detail::put_geometry(j, geometry_of(p));
    return j;
}

inline nlohmann::ordered_json to_json(const DownParabola& p) {
    nlohmann::ordered_json j;
    j["family"] = p.orient == DownOrient::down ? "down" : "left";
    j["a1"] = p.a1;
    j["d0"] = p.d0;
    detail::put_geometry(j, geometry_of(p));
    return j;
}

} // namespace pptgraph
