#include <doctest.h>

#include <regex>

#include <json.hpp>

#include "../support/fixtures.hpp"
#include "pbf/generator.hpp"
#include "pbf/io.hpp"

using namespace pbf;

namespace {

LayoutDocument document(const DiGraph& g, std::optional<PathDecomposition> d = std::nullopt,
                        PipelineOptions opts = {}) {
    return make_document(run_pipeline(g, d, opts), opts, 42);
}

// points attribute of every polyline, in document order.
std::vector<std::string> svg_points(const std::string& svg) {
    std::vector<std::string> out;
    std::regex re("<polyline [^>]*points=\"([^\"]*)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator();
         ++it) {
        out.push_back((*it)[1]);
    }
    return out;
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("render_json layout") {
    auto doc = document(fixture::diamond(), PathDecomposition{{{0, 1, 3}, {2}}});
    auto j = nlohmann::json::parse(render_json(doc));
    CHECK(j["vertices"].size() == 4);
    CHECK(j["edges"].size() == 4);
    int cross = 0;
    for (const auto& e : j["edges"]) cross += e["category"] == "cross";
    CHECK(cross == 2);
    CHECK(j["meta"]["seed"] == 42);
    CHECK(j["meta"]["version"] == std::string(kVersion));
    CHECK(j["meta"]["toggles"]["compact"] == true);
    CHECK(j["metrics"]["area"] == j["metrics"]["width"].get<int>() * j["metrics"]["height"].get<int>());
    for (const char* key : {"vertices", "edges", "bundles", "columns", "metrics", "meta"}) {
        CHECK(j.contains(key));
    }
}

TEST_CASE("edgeless graph gives an empty edge list") {
    auto j = nlohmann::json::parse(render_json(document(DiGraph(3, {}))));
    CHECK(j["edges"].is_array());
    CHECK(j["edges"].empty());
    CHECK(j["vertices"].size() == 3);
}

TEST_CASE("JSON round trip is byte-identical") {
    for (unsigned seed = 1; seed <= 10; ++seed) {
        auto g = generate_random_dag(40, seed % 2 ? 1.6 : 4.0, seed);
        PipelineOptions opts;
        opts.reorder = seed % 3 != 0;
        auto doc = document(g, std::nullopt, opts);
        doc.meta.warnings.push_back("sample warning");
        const std::string first = render_json(doc);
        LayoutDocument back = parse_layout_json(first);
        CHECK(back == doc);
        CHECK(render_json(back) == first);
    }
}

TEST_CASE("parse_layout_json rejects malformed documents") {
    CHECK_THROWS_AS(parse_layout_json("{"), InputError);
    CHECK_THROWS_AS(parse_layout_json("{}"), InputError);
    auto text = render_json(document(fixture::diamond()));
    auto bad = std::regex_replace(text, std::regex("\"cross\""), "\"sideways\"");
    CHECK_THROWS_AS(parse_layout_json(bad), InputError);
}

TEST_CASE("render_svg") {
    auto single = render_svg(document(DiGraph(1, {})).layout);
    CHECK(single.rfind("<svg", 0) == 0);
    CHECK(count(single, "<circle") == 1);
    CHECK(count(single, "<polyline") == 0);

    auto diamond = render_svg(document(fixture::diamond(), PathDecomposition{{{0, 1, 3}, {2}}}).layout);
    CHECK(count(diamond, "<circle class=\"node\"") == 4);
    CHECK(count(diamond, "<polyline") == 4);
    CHECK(count(diamond, "class=\"cross-edge\"") == 2);
    CHECK(diamond.find("scale(24)") != std::string::npos);
    CHECK(diamond.find("r=\"0.25\"") != std::string::npos);
}

TEST_CASE("SVG polylines carry the JSON routes exactly") {
    for (unsigned seed = 1; seed <= 5; ++seed) {
        auto doc = document(generate_random_dag(30, 2.0, seed));
        auto j = nlohmann::json::parse(render_json(doc));
        auto points = svg_points(render_svg(doc.layout));
        REQUIRE(points.size() == j["edges"].size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            std::string expected;
            for (const auto& p : j["edges"][i]["route"]) {
                if (!expected.empty()) expected += ' ';
                expected += std::to_string(p[0].get<int>()) + "," + std::to_string(p[1].get<int>());
            }
            CHECK(points[i] == expected);
        }
    }
}

TEST_CASE("render_metrics") {
    CHECK(render_metrics({1, 2, 3, 4, 12}) == "crossings=1\nbends=2\nwidth=3\nheight=4\narea=12\n");
}
