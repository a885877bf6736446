#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pptgraph/dvalues.hpp"
#include "pptgraph/enumerate.hpp"
#include "pptgraph/parabola.hpp"
#include "pptgraph/svg.hpp"
#include "pptgraph/table.hpp"
#include "pptgraph/triple.hpp"

namespace pptgraph::cli {

namespace detail {

// Either leg order is accepted; the argument order fixes the plotted point.
inline PlottedTriple checked_point(int64_t x, int64_t y, int64_t c) {
    PlottedTriple p{x, y, c};
    if (!is_pythagorean(p.canonical())) throw std::domain_error("not a Pythagorean triple");
    if (!is_primitive(p)) throw std::domain_error("not primitive");
    return p;
}

inline std::string point_str(int64_t x, int64_t y) {
    return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::domain_error("cannot open " + path + " for writing");
    f << text;
}

inline void print_classify(const PlottedTriple& p, std::ostream& out) {
    int64_t d = d_of(p), dp = d_prime_of(p);
    out << "point " << point_str(p.x, p.y) << ": d = " << d << ", d' = " << dp << "\n";
    out << "  up:    " << equation(UpParabola(d, UpOrient::up)) << "\n";
    out << "  right: " << equation(UpParabola(dp, UpOrient::right)) << "\n";
}

inline void print_anchor(const PlottedTriple& p, bool approx, std::ostream& out) {
    int64_t d = d_of(p), dp = d_prime_of(p);
    out << "point " << point_str(p.x, p.y) << ": d = " << d << ", d' = " << dp << "\n";
    UpParabola up(d, UpOrient::up);
    out << "  up: " << equation(up) << "\n";
    Anchor anc = anchor_of(p.x, p.y, p.c);
    DownParabola down = down_parabola_of(anc);
    out << "  a1 = " << anc.a1 << ", d0 = " << anc.d0 << ", t = " << anc.t
        << "; down: " << equation(down) << "\n";
    out << "  anchor triple: " << anc.anchor_triple.str() << "\n";
    auto g = geometry_of(down);
    out << "  down vertex: (" << g.vertex.x.str() << ", " << g.vertex.y.str() << "), focus: ("
        << g.focus.x.str() << ", " << g.focus.y.str() << "), x-intercepts: +-"
        << g.x_intercepts->second.str();
    if (approx && !g.vertex.y.is_integer()) out << " [vertex y ~ " << g.vertex.y.approx() << "]";
    out << "\n";
    auto [m1, m2] = slopes_at(up, down, p.x, p.y);
    out << "  slopes: m1 = " << m1.str() << ", m2 = " << m2.str()
        << ", m1*m2 = " << (m1 * m2).str() << "\n";
}

} // namespace detail

// Dispatch one invocation. Returns 0 on success, 1 on a domain error,
// 2 on a usage error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic for the graph of primitive Pythagorean triples"};
    app.name("pptgraph");
    app.require_subcommand(1);

    int64_t max_leg = 0;
    std::string format = "csv";
    std::string out_path;
    bool use_oracle = false;
    auto* gen = app.add_subcommand("gen", "Export the classified PPT table");
    gen->add_option("--max-leg", max_leg, "both legs strictly below this bound")->required();
    gen->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}));
    gen->add_flag("--oracle", use_oracle, "use the brute-force generator");
    gen->add_option("--out", out_path, "output path, - for stdout");

    std::vector<int64_t> triple_args;
    bool approx = false;
    auto* classify = app.add_subcommand("classify", "Difference values and parabolas of a PPT");
    classify->add_option("triple", triple_args, "A B C")->expected(3)->required();

    auto* anchor = app.add_subcommand("anchor", "Anchor decomposition and downward parabola");
    anchor->add_option("triple", triple_args, "A B C")->expected(3)->required();
    anchor->add_flag("--approx", approx, "append decimal approximations");

    int64_t max_d = 0;
    int64_t verify_leg = 2000;
    bool do_verify = false;
    auto* allowable = app.add_subcommand("allowable", "The allowable difference values");
    allowable->add_option("--max", max_d)->required();
    allowable->add_flag("--verify", do_verify, "emit a ClaimReport per value");
    allowable->add_option("--max-leg", verify_leg, "sweep range for --verify");

    int64_t verify_d = 0;
    std::string claim;
    auto* verify = app.add_subcommand("verify", "Test one difference value against its claim");
    verify->add_option("--d", verify_d)->required();
    verify->add_option("--max-leg", verify_leg);
    verify->add_option("--claim", claim, "expected claim id");

    PlotConfig cfg;
    std::vector<std::string> down_specs;
    bool no_diagonal = false;
    auto* plot = app.add_subcommand("plot", "Render the PPT graph to SVG");
    plot->add_option("--max-leg", cfg.max_leg)->required();
    plot->add_option("--out", out_path, "output path, - for stdout")->required();
    plot->add_option("--up", cfg.overlay_up, "opens-up/right overlays (allowable d)")->delimiter(',');
    plot->add_option("--down", down_specs, "opens-down/left overlays as a1:d0")
        ->delimiter(',')
        ->check(CLI::Validator(
            [](std::string& v) -> std::string {
                auto pos = v.find(':');
                if (pos == std::string::npos || pos == 0 || pos + 1 == v.size())
                    return "expected a1:d0";
                if (v.find_first_not_of("0123456789", 0) < pos) return "expected a1:d0";
                if (v.find_first_not_of("0123456789", pos + 1) != std::string::npos)
                    return "expected a1:d0";
                return {};
            },
            "A1:D0"));
    plot->add_flag("--no-diagonal", no_diagonal);
    plot->add_option("--canvas", cfg.canvas_px, "canvas edge in pixels");
    plot->add_option("--radius", cfg.point_radius_px, "point radius in pixels");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*gen) {
            auto fmt = format == "csv" ? TableFormat::csv : TableFormat::jsonl;
            detail::write_output(out_path, export_table(max_leg, fmt, use_oracle), out);
        } else if (*classify) {
            auto p = detail::checked_point(triple_args[0], triple_args[1], triple_args[2]);
            detail::print_classify(p, out);
            detail::print_classify({p.y, p.x, p.c}, out);
        } else if (*anchor) {
            auto p = detail::checked_point(triple_args[0], triple_args[1], triple_args[2]);
            detail::print_anchor(p, approx, out);
            detail::print_anchor({p.y, p.x, p.c}, approx, out);
        } else if (*allowable) {
            if (max_d < 1) throw std::domain_error("--max must be positive");
            if (do_verify) {
                for (int64_t d = 1; d <= max_d; ++d)
                    out << to_json(verify_d_claim(d, verify_leg)).dump() << "\n";
            } else {
                for (int64_t d : allowable_sequence(max_d)) out << d << "\n";
            }
        } else if (*verify) {
            auto report = verify_d_claim(verify_d, verify_leg);
            if (!claim.empty() && claim_id_from_string(claim) != report.claim_id)
                throw std::domain_error("d = " + std::to_string(verify_d) + " is " +
                                        to_string(report.claim_id) + ", not " + claim);
            out << to_json(report).dump() << "\n";
        } else if (*plot) {
            cfg.draw_diagonal = !no_diagonal;
            for (const auto& entry : down_specs) {
                auto pos = entry.find(':');
                cfg.overlay_down.emplace_back(std::stoll(entry.substr(0, pos)),
                                              std::stoll(entry.substr(pos + 1)));
            }
            detail::write_output(out_path, render_svg(cfg), out);
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const inconsistency_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace pptgraph::cli
