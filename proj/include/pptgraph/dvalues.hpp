#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pptgraph/int_math.hpp"
#include "pptgraph/triple.hpp"

namespace pptgraph {

// Difference values of the canonical below-diagonal point (a, b):
// d = c - b and d' = c - a. For the reflected point (b, a) the two swap.
inline int64_t d_of(const Triple& t) { return t.c - t.b; }
inline int64_t d_prime_of(const Triple& t) { return t.c - t.a; }

// For a plotted point the vertical coordinate decides: d = c - y, d' = c - x.
inline int64_t d_of(const PlottedTriple& p) { return p.c - p.y; }
inline int64_t d_prime_of(const PlottedTriple& p) { return p.c - p.x; }

// d is allowable iff d = s^2 with s odd, or d = 2 s^2 (OEIS A096033).
inline bool is_allowable(int64_t d) {
    if (d < 1) return false;
    if (d % 2 == 1) return is_perfect_square(d);
    return is_perfect_square(d / 2);
}

// All allowable values <= max, increasing.
inline std::vector<int64_t> allowable_sequence(int64_t max) {
    std::vector<int64_t> out;
    for (int64_t s = 1; s * s <= max; s += 2) out.push_back(s * s);
    for (int64_t s = 1; 2 * s * s <= max; ++s) out.push_back(2 * s * s);
    std::sort(out.begin(), out.end());
    return out;
}

// The five cases of the allowable-value analysis.
enum class ClaimId {
    odd_nonsquare,
    odd_square,
    even_not_twice_square,
    twice_square_s_odd,
    twice_square_s_even,
};

inline ClaimId classify_claim(int64_t d) {
    if (d < 1) throw std::domain_error("d must be positive");
    if (d % 2 == 1)
        return is_perfect_square(d) ? ClaimId::odd_square : ClaimId::odd_nonsquare;
    int64_t half = d / 2;
    if (!is_perfect_square(half)) return ClaimId::even_not_twice_square;
    return isqrt(half) % 2 == 1 ? ClaimId::twice_square_s_odd : ClaimId::twice_square_s_even;
}

inline std::string to_string(ClaimId id) {
    switch (id) {
    case ClaimId::odd_nonsquare: return "odd-nonsquare";
    case ClaimId::odd_square: return "odd-square";
    case ClaimId::even_not_twice_square: return "even-not-twice-square";
    case ClaimId::twice_square_s_odd: return "twice-square-s-odd";
    case ClaimId::twice_square_s_even: return "twice-square-s-even";
    }
    throw std::logic_error("bad ClaimId");
}

inline ClaimId claim_id_from_string(const std::string& s) {
    for (ClaimId id : {ClaimId::odd_nonsquare, ClaimId::odd_square, ClaimId::even_not_twice_square,
                       ClaimId::twice_square_s_odd, ClaimId::twice_square_s_even})
        if (to_string(id) == s) return id;
    throw std::domain_error("unknown claim id: " + s);
}

// Every Pythagorean triple (primitive or not) whose plotted point (x, y)
// has c - y = d, with both coordinates < max_leg. Brute force: for each y
// the hypotenuse is y + d and x^2 = d(2y + d) must be a perfect square.
inline std::vector<PlottedTriple> pts_with_difference(int64_t d, int64_t max_leg) {
    if (d < 1) throw std::domain_error("d must be positive");
    std::vector<PlottedTriple> out;
    for (int64_t y = 1; y < max_leg; ++y) {
        i128 xx = i128(d) * (2 * y + d);
        if (xx >= sq(max_leg)) break; // x grows with y
        int64_t x = isqrt(int64_t(xx));
        if (i128(x) * x != xx) continue;
        out.push_back({x, y, y + d});
    }
    return out;
}

// Outcome of testing one case of the allowable-value analysis over a
// finite range.
struct ClaimReport {
    ClaimId claim_id = ClaimId::odd_nonsquare;
    int64_t d = 0;
    int64_t range_max = 0;
    int64_t pt_count = 0;
    int64_t ppt_count = 0;
    std::vector<PlottedTriple> counterexamples;
    bool verdict = false;
    bool inconclusive = false;
};

// Sweep all PTs with the given difference and compare against the claim
// for d's case: a non-allowable d must yield no PPT (every hit shares a
// common factor), an allowable d must be realized by some PPT. A range
// with no witnesses either way is flagged inconclusive.
inline ClaimReport verify_d_claim(int64_t d, int64_t max_leg) {
    ClaimReport r;
    r.claim_id = classify_claim(d);
    r.d = d;
    r.range_max = max_leg;
    const bool allowable = is_allowable(d);
    for (const auto& p : pts_with_difference(d, max_leg)) {
        ++r.pt_count;
        const bool prim = is_primitive(p);
        if (prim) ++r.ppt_count;
        if (!allowable && prim) r.counterexamples.push_back(p);
    }
    if (allowable) {
        r.verdict = r.ppt_count > 0;
        r.inconclusive = r.ppt_count == 0; // cannot refute existence in range
    } else {
        r.verdict = r.counterexamples.empty();
        r.inconclusive = r.pt_count == 0; // vacuously true
    }
    return r;
}

inline nlohmann::ordered_json to_json(const ClaimReport& r) {
    nlohmann::ordered_json j;
    j["claim_id"] = to_string(r.claim_id);
    j["d"] = r.d;
    j["range_max"] = r.range_max;
    j["pt_count"] = r.pt_count;
    j["ppt_count"] = r.ppt_count;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& p : r.counterexamples)
        arr.push_back({{"a", p.x}, {"b", p.y}, {"c", p.c}, {"gcd", gcd3(p.x, p.y, p.c)}});
    j["counterexamples"] = arr;
    j["verdict"] = r.verdict;
    j["inconclusive"] = r.inconclusive;
    return j;
}

} // namespace pptgraph
