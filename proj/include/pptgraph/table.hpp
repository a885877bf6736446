#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pptgraph/dvalues.hpp"
#include "pptgraph/enumerate.hpp"
#include "pptgraph/parabola.hpp"

namespace pptgraph {

enum class TableFormat { csv, jsonl };

// One record per PPT with legs < max_leg, ordered by (a, b). The
// classification columns (d, d_prime, a1, d0, t) refer to the
// below-diagonal point (a, b); the reflected point's values follow by
// swapping d and d_prime. use_oracle swaps in the brute-force generator.
inline std::string export_table(int64_t max_leg, TableFormat format, bool use_oracle = false) {
    if (max_leg < 4) throw std::domain_error("max_leg must be at least 4");
    auto triples = use_oracle ? enumerate_ppts_oracle(max_leg) : enumerate_ppts(max_leg);

    std::string out;
    if (format == TableFormat::csv) out += "a,b,c,d,d_prime,a1,d0,t\n";
    for (const auto& tr : triples) {
        Anchor anc = anchor_of(tr.a, tr.b, tr.c);
        if (format == TableFormat::csv) {
            out += std::to_string(tr.a) + "," + std::to_string(tr.b) + "," +
                   std::to_string(tr.c) + "," + std::to_string(d_of(tr)) + "," +
                   std::to_string(d_prime_of(tr)) + "," + std::to_string(anc.a1) + "," +
                   std::to_string(anc.d0) + "," + std::to_string(anc.t) + "\n";
        } else {
            nlohmann::ordered_json j;
            j["a"] = tr.a;
            j["b"] = tr.b;
            j["c"] = tr.c;
            j["d"] = d_of(tr);
            j["d_prime"] = d_prime_of(tr);
            j["a1"] = anc.a1;
            j["d0"] = anc.d0;
            j["t"] = anc.t;
            out += j.dump() + "\n";
        }
    }
    return out;
}

} // namespace pptgraph
