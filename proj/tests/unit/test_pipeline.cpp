#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "../support/fixtures.hpp"
#include "pbf/generator.hpp"
#include "pbf/pipeline.hpp"

using namespace pbf;

namespace {

std::vector<int> spine_order(const Layout& l) {
    std::vector<int> spines = spine_columns(l);
    std::vector<int> order(spines.size());
    for (std::size_t p = 0; p < order.size(); ++p) order[p] = static_cast<int>(p);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return spines[a] < spines[b]; });
    return order;
}

std::string temp_file(const std::string& name, const std::string& text) {
    std::string path = "pbf_test_" + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("chain height is n - 1") {
    auto r = run_pipeline(fixture::chain(7), std::nullopt);
    CHECK(r.metrics.height == 6);
    CHECK(r.decomposition.size() == 1);
}

TEST_CASE("diamond with a given decomposition") {
    auto r = run_pipeline(fixture::diamond(), PathDecomposition{{{0, 1, 3}, {2}}});
    CHECK(r.classification.transitive_edges.empty());
    CHECK(r.classification.cross_edges.size() == 2);
    CHECK(r.metrics.crossings == 0);
    CHECK(r.metrics.bends == 0);
    CHECK(r.layout.y == std::vector<int>{0, 1, 1, 2});
}

TEST_CASE("larger generated graph completes with a consistent layout") {
    auto g = generate_random_dag(100, 1.6, 9);
    auto r = run_pipeline(g, std::nullopt);
    CHECK(r.layout.routes.size() == g.edge_count());
    CHECK(r.metrics.area == r.metrics.width * r.metrics.height);
    CHECK(r.contacts.empty());
}

TEST_CASE("stage toggles") {
    auto g = generate_random_dag(80, 3.0, 4);
    auto full = run_pipeline(g, std::nullopt);
    REQUIRE_FALSE(full.classification.transitive_edges.empty());

    PipelineOptions hide;
    hide.bundle_transitive = false;
    auto hidden = run_pipeline(g, std::nullopt, hide);
    CHECK(hidden.layout.y == full.layout.y);
    CHECK(spine_order(hidden.layout) == spine_order(full.layout));
    CHECK(hidden.layout.routes.size() ==
          g.edge_count() - full.classification.transitive_edges.size());
    for (const auto& c : hidden.layout.columns) {
        CHECK(c.kind != ColumnKind::bundle_lane_left);
        CHECK(c.kind != ColumnKind::bundle_lane_right);
    }
    for (const auto& r : hidden.layout.routes) CHECK(r.category != EdgeCategory::transitive);

    PipelineOptions loose;
    loose.compact = false;
    auto uncompacted = run_pipeline(g, std::nullopt, loose);
    CHECK(uncompacted.layout.y == topo_sort(g).rank);
    CHECK(uncompacted.metrics.height == g.vertex_count() - 1);

    PipelineOptions no_cross;
    no_cross.bundle_cross = false;
    auto separate = run_pipeline(g, std::nullopt, no_cross);
    CHECK(std::none_of(separate.layout.bundles.begin(), separate.layout.bundles.end(),
                       [](const BundleRecord& b) { return b.kind == BundleKind::cross; }));
}

TEST_CASE("cyclic input is laid out after cycle removal") {
    DiGraph g(3, {{0, 1}, {1, 2}, {2, 0}});
    auto r = run_pipeline(g, std::nullopt);
    CHECK(r.acyclic.reversed_edges == std::vector<Edge>{{2, 0}});
    CHECK(r.layout.routes.size() == 3);
}

TEST_CASE("stage errors name the stage") {
    CHECK_THROWS_WITH_AS(run_pipeline(fixture::chain(3), PathDecomposition{{{0, 2}, {1}}}),
                         doctest::Contains("decomposition: invalid path decomposition"),
                         InputError);
}

TEST_CASE("PipelineConfig") {
    PipelineConfig none;
    CHECK_THROWS_AS(none.validate(), InputError);

    PipelineConfig both;
    both.input_path = "x";
    both.generator = GeneratorParams{5, 1.0};
    CHECK_THROWS_AS(both.validate(), InputError);

    PipelineConfig clash;
    clash.generator = GeneratorParams{5, 1.0};
    clash.paths_path = "p";
    clash.auto_cover = true;
    CHECK_THROWS_AS(clash.validate(), InputError);

    PipelineConfig gen;
    gen.generator = GeneratorParams{30, 1.6};
    gen.seed = 5;
    auto run = run_pipeline(gen);
    CHECK(run.graph == generate_random_dag(30, 1.6, 5));

    PipelineConfig file;
    file.input_path = temp_file("diamond.txt", "4\n0 1\n0 2\n1 3\n2 3\n");
    file.paths_path = temp_file("diamond.paths", "0 2 3\n1\n");
    auto from_file = run_pipeline(file);
    CHECK(from_file.result.decomposition == PathDecomposition{{{0, 2, 3}, {1}}});

    PipelineConfig missing;
    missing.input_path = "does/not/exist.txt";
    CHECK_THROWS_WITH_AS(run_pipeline(missing), doctest::Contains("input: cannot read"),
                         InputError);
    std::remove(file.input_path->c_str());
    std::remove(file.paths_path->c_str());
}
