#include <doctest.h>

#include <set>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "pbf/decomposition.hpp"
#include "pbf/generator.hpp"

using namespace pbf;

namespace {

PathDecomposition paths(std::vector<std::vector<VertexId>> p) { return {std::move(p)}; }

}  // namespace

TEST_CASE("validate_decomposition") {
    CHECK(validate_decomposition(fixture::chain(3), paths({{0, 1, 2}})).ok());

    auto bad = validate_decomposition(fixture::chain(3), paths({{0, 2}, {1}}));
    CHECK_FALSE(bad.ok());
    CHECK(bad.non_edges == std::vector<Edge>{{0, 2}});
    CHECK(bad.describe().find("(0,2)") != std::string::npos);

    CHECK(validate_decomposition(fixture::diamond(), paths({{0, 1, 3}, {2}})).ok());

    auto messy = validate_decomposition(fixture::diamond(), paths({{0, 1}, {1, 7}, {}}));
    CHECK(messy.duplicated == std::vector<VertexId>{1});
    CHECK(messy.out_of_range == std::vector<VertexId>{7});
    CHECK(messy.missing == std::vector<VertexId>{2, 3});
    CHECK(messy.empty_paths == 1);
}

TEST_CASE("classify_edges") {
    DiGraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    auto c = classify_edges(tri, paths({{0, 1, 2}}));
    CHECK(c.path_edges == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(c.transitive_edges == std::vector<Edge>{{0, 2}});
    CHECK(c.cross_edges.empty());

    auto d = classify_edges(fixture::diamond(), paths({{0, 1, 3}, {2}}));
    CHECK(d.path_edges == std::vector<Edge>{{0, 1}, {1, 3}});
    CHECK(d.transitive_edges.empty());
    CHECK(d.cross_edges == std::vector<Edge>{{0, 2}, {2, 3}});
}

TEST_CASE("classification partitions the edge set") {
    for (unsigned seed : {5u, 6u, 7u}) {
        DiGraph g = generate_random_dag(40, 1.6, seed);
        auto d = min_path_cover(g);
        auto c = classify_edges(g, d);
        std::set<Edge> all;
        for (const auto* part : {&c.path_edges, &c.transitive_edges, &c.cross_edges}) {
            for (const Edge& e : *part) CHECK(all.insert(e).second);
        }
        CHECK(all == std::set<Edge>(g.edges().begin(), g.edges().end()));

        PathIndex idx = index_paths(g.vertex_count(), d);
        for (const Edge& e : c.path_edges) {
            CHECK(idx.path_of[e.from] == idx.path_of[e.to]);
            CHECK(idx.position[e.to] == idx.position[e.from] + 1);
        }
        for (const Edge& e : c.transitive_edges) {
            CHECK(idx.path_of[e.from] == idx.path_of[e.to]);
            CHECK(idx.position[e.to] > idx.position[e.from] + 1);
        }
        for (const Edge& e : c.cross_edges) CHECK(idx.path_of[e.from] != idx.path_of[e.to]);
    }
}

TEST_CASE("min_path_cover small cases") {
    CHECK(min_path_cover(fixture::chain(5)) == paths({{0, 1, 2, 3, 4}}));

    DiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    std::vector<Edge> star_edges(star.edges().begin(), star.edges().end());
    CHECK(oracle::min_path_cover_exhaustive(4, star_edges) == 3);
    CHECK(min_path_cover(star).size() == 3);

    auto edgeless = min_path_cover(DiGraph(6, {}));
    CHECK(edgeless == paths({{0}, {1}, {2}, {3}, {4}, {5}}));

    CHECK_THROWS_AS(min_path_cover(DiGraph(2, {{0, 1}, {1, 0}})), CycleError);
}

TEST_CASE("min_path_cover paths follow the topological rank of their first vertex") {
    DiGraph g(4, {{3, 2}, {1, 0}});
    auto d = min_path_cover(g);
    CHECK(d == paths({{1, 0}, {3, 2}}));
}

TEST_CASE("min_path_cover is valid and minimum on small random DAGs") {
    for (unsigned seed = 0; seed < 60; ++seed) {
        const int n = 2 + static_cast<int>(seed % 9);
        DiGraph g = fixture::random_forward_dag(n, 0.3 + 0.05 * (seed % 7), seed);
        auto d = min_path_cover(g);
        CHECK(validate_decomposition(g, d).ok());
        std::vector<Edge> edges(g.edges().begin(), g.edges().end());
        CHECK(static_cast<int>(d.size()) == oracle::min_path_cover_exhaustive(n, edges));
    }
}

TEST_CASE("min_path_cover stays valid on larger graphs") {
    for (unsigned seed : {1u, 2u, 3u}) {
        DiGraph g = generate_random_dag(500, 3.0, seed);
        CHECK(validate_decomposition(g, min_path_cover(g)).ok());
    }
}

TEST_CASE("parse_decomposition") {
    CHECK(parse_decomposition("0 1 2", fixture::chain(3)) == paths({{0, 1, 2}}));
    CHECK(parse_decomposition("0 1 3\n2", fixture::diamond()) == paths({{0, 1, 3}, {2}}));
    CHECK(parse_decomposition("# cover\n0 1 3\n\n2\n", fixture::diamond()) ==
          paths({{0, 1, 3}, {2}}));
    CHECK_THROWS_WITH_AS(parse_decomposition("", fixture::chain(3)),
                         doctest::Contains("missing vertices: 0, 1, 2"), InputError);
    CHECK_THROWS_WITH_AS(parse_decomposition("0 x 2", fixture::chain(3)),
                         doctest::Contains("paths line 1"), InputError);
    CHECK_THROWS_AS(parse_decomposition("0 2\n1", fixture::chain(3)), InputError);

    auto d = paths({{0, 1, 3}, {2}});
    CHECK(parse_decomposition(serialize_decomposition(d), fixture::diamond()) == d);
}
