#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "pptgraph/svg.hpp"
#include "pptgraph/table.hpp"

using namespace pptgraph;

static size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t n = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
        ++n;
    return n;
}

// all polyline vertices in the document, in pixel coordinates
static std::vector<std::pair<double, double>> polyline_vertices(const std::string& svg) {
    std::vector<std::pair<double, double>> out;
    const std::string key = "points=\"";
    for (size_t pos = svg.find(key); pos != std::string::npos; pos = svg.find(key, pos + 1)) {
        size_t end = svg.find('"', pos + key.size());
        std::istringstream ss(svg.substr(pos + key.size(), end - pos - key.size()));
        std::string pair;
        while (ss >> pair) {
            auto comma = pair.find(',');
            out.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
        }
    }
    return out;
}

TEST_CASE("export_table at max_leg 6") {
    CHECK(export_table(6, TableFormat::csv) == "a,b,c,d,d_prime,a1,d0,t\n3,4,5,1,2,3,1,1\n");
    auto jsonl = export_table(6, TableFormat::jsonl);
    auto j = nlohmann::json::parse(jsonl.substr(0, jsonl.find('\n')));
    CHECK(j["a"] == 3);
    CHECK(j["b"] == 4);
    CHECK(j["c"] == 5);
    CHECK(j["d"] == 1);
    CHECK(j["d_prime"] == 2);
    CHECK(j["a1"] == 3);
    CHECK(j["d0"] == 1);
    CHECK(j["t"] == 1);
}

TEST_CASE("export_table classifies the below-diagonal point") {
    auto csv = export_table(120, TableFormat::csv);
    // canonical row for the (105, 88) worked example: the below-diagonal
    // point is (88, 105), so d = 32 and the anchor is (44, 117, 125)
    CHECK(csv.find("88,105,137,32,49,44,8,2\n") != std::string::npos);
    CHECK(csv.find("3,4,5,1,2,3,1,1\n") != std::string::npos);
    CHECK(csv.find("20,99,101,2,81,20,2,1\n") != std::string::npos);

    size_t rows = count_occurrences(csv, "\n") - 1; // minus header
    CHECK(rows == enumerate_ppts(120).size());
    CHECK(csv.find(",\n") == std::string::npos); // no trailing commas
    CHECK(csv.find('\r') == std::string::npos);  // LF only
}

TEST_CASE("export_table oracle flag swaps the generator only") {
    CHECK(export_table(120, TableFormat::csv, true) == export_table(120, TableFormat::csv, false));
}

TEST_CASE("export_table rejects tiny bounds") {
    CHECK_THROWS_AS(export_table(3, TableFormat::csv), std::domain_error);
}

TEST_CASE("render_svg structure and determinism") {
    PlotConfig cfg;
    cfg.max_leg = 120;
    cfg.canvas_px = 600;
    cfg.overlay_up = {1};
    auto svg = render_svg(cfg);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count_occurrences(svg, "<circle ") == 2 * enumerate_ppts(120).size());
    CHECK(count_occurrences(svg, "<polyline ") >= 2); // up curve and its mirror
    CHECK(svg.find("<line ") != std::string::npos);
    CHECK(render_svg(cfg) == svg); // byte-identical

    cfg.draw_diagonal = false;
    CHECK(render_svg(cfg).find("<line ") == std::string::npos);
}

TEST_CASE("render_svg empty plot at max_leg 4") {
    PlotConfig cfg;
    cfg.max_leg = 4;
    cfg.canvas_px = 100;
    auto svg = render_svg(cfg);
    CHECK(count_occurrences(svg, "<circle ") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("render_svg validates its configuration") {
    PlotConfig cfg;
    cfg.max_leg = 3;
    CHECK_THROWS_AS(render_svg(cfg), std::domain_error);
    cfg.max_leg = 120;
    cfg.canvas_px = 50;
    CHECK_THROWS_AS(render_svg(cfg), std::domain_error);
    cfg.canvas_px = 600;
    cfg.overlay_up = {3}; // not allowable
    CHECK_THROWS_AS(render_svg(cfg), std::domain_error);
    cfg.overlay_up.clear();
    cfg.overlay_down = {{6, 2}}; // imprimitive anchor
    CHECK_THROWS_AS(render_svg(cfg), std::domain_error);
}

TEST_CASE("overlay curves pass through their points") {
    PlotConfig cfg;
    cfg.max_leg = 120;
    cfg.canvas_px = 1200; // 10 px per unit: every lattice x is a sampled column
    cfg.point_radius_px = 2.0;
    cfg.overlay_up = {1};
    cfg.overlay_down = {{13, 1}};
    auto vertices = polyline_vertices(render_svg(cfg));
    REQUIRE(!vertices.empty());

    const double s = 1200.0 / 120.0;
    std::vector<std::pair<int64_t, int64_t>> on_curves = {
        {3, 4}, {5, 12}, {7, 24}, {9, 40}, {11, 60}, {13, 84}, {15, 112}, // d = 1 points
        {39, 80}, {65, 72}, {91, 60}, {117, 44}};                         // anchor-13 points
    for (auto [x, y] : on_curves) {
        double px = x * s, py = 1200.0 - y * s;
        double best = 1e9;
        for (auto [vx, vy] : vertices)
            best = std::min(best, std::hypot(vx - px, vy - py));
        CAPTURE(x, y, best);
        CHECK(best <= cfg.point_radius_px);
    }
}
