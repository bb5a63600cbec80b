#include <doctest.h>

#include <algorithm>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "pbf/generator.hpp"
#include "pbf/layout.hpp"

using namespace pbf;

namespace {

Layout initial(const DiGraph& g, const PathDecomposition& d) {
    return initial_layout(g, d, topo_sort(g));
}

int row_span(const Layout& l) {
    if (l.y.empty()) return 0;
    auto [lo, hi] = std::minmax_element(l.y.begin(), l.y.end());
    return *hi - *lo;
}

}  // namespace

TEST_CASE("initial_layout") {
    Layout chain = initial(fixture::chain(3), {{{0, 1, 2}}});
    CHECK(chain.y == std::vector<int>{0, 1, 2});
    CHECK(chain.x == std::vector<int>{0, 0, 0});

    Layout d = initial(fixture::diamond(), {{{0, 1, 3}, {2}}});
    CHECK(d.x[0] < d.x[2]);
    CHECK(d.y == std::vector<int>{0, 1, 2, 3});
    CHECK(d.routes.size() == 4);
    for (const EdgeRoute& r : d.routes) {
        CHECK(r.points.front() == d.position(r.edge.from));
        CHECK(r.points.back() == d.position(r.edge.to));
    }
}

TEST_CASE("initial layout height is n - 1") {
    for (unsigned seed = 0; seed < 100; ++seed) {
        const int n = std::vector<int>{20, 50, 100}[seed % 3];
        DiGraph g = generate_random_dag(n, 1.6, seed);
        CHECK(row_span(initial(g, min_path_cover(g))) == n - 1);
    }
}

TEST_CASE("compact") {
    DiGraph two(2, {});
    Layout l = compact(two, initial(two, {{{0}, {1}}}));
    CHECK(l.y == std::vector<int>{0, 0});

    DiGraph d = fixture::diamond();
    Layout c = compact(d, initial(d, {{{0, 1, 3}, {2}}}));
    CHECK(c.y == std::vector<int>{0, 1, 1, 2});
    CHECK_FALSE(assert_properties(d, c).has_value());
}

TEST_CASE("compacted rows equal longest path lengths") {
    for (unsigned seed : {11u, 12u, 13u}) {
        DiGraph g = generate_random_dag(50, 1.6, seed);
        auto d = min_path_cover(g);
        Layout before = initial(g, d);
        Layout after = compact(g, before);
        std::vector<Edge> edges(g.edges().begin(), g.edges().end());
        CHECK(after.y == oracle::longest_path_memo(50, edges));
        CHECK(after.x == before.x);
        CHECK(compact(g, after) == after);
        CHECK(row_span(after) <= row_span(before));
    }
}

TEST_CASE("assert_properties") {
    DiGraph g = fixture::chain(2);
    Layout l = initial(g, {{{0, 1}}});
    l.y = {0, 0};
    auto v = assert_properties(g, l);
    REQUIRE(v.has_value());
    CHECK(v->kind == PropertyViolation::Kind::distinct_rows);
    CHECK(v->first == 0);
    CHECK(v->second == 1);

    DiGraph gap(3, {{0, 2}});
    Layout g2 = initial(gap, {{{0}, {1}, {2}}});
    g2.y = {0, 0, 2};
    auto w = assert_properties(gap, g2);
    REQUIRE(w.has_value());
    CHECK(w->kind == PropertyViolation::Kind::unit_step);
    CHECK(w->first == 2);

    for (unsigned seed = 0; seed < 100; ++seed) {
        DiGraph r = generate_random_dag(30, seed % 2 ? 5.6 : 1.6, seed);
        CHECK_FALSE(assert_properties(r, compact(r, initial(r, min_path_cover(r)))).has_value());
    }
}

TEST_CASE("column insertion and removal keep geometry consistent") {
    DiGraph d = fixture::diamond();
    Layout l = initial(d, {{{0, 1, 3}, {2}}});
    std::vector<Column> lanes(2, Column{ColumnKind::cross_lane, 1});
    insert_columns(l, 1, lanes);
    CHECK(l.columns.size() == 4);
    CHECK(l.x == std::vector<int>{0, 0, 3, 0});
    CHECK(spine_columns(l) == std::vector<int>{0, 3});
    for (const EdgeRoute& r : l.routes) CHECK(r.points.back() == l.position(r.edge.to));

    remove_columns(l, [](const Column& c) { return c.kind == ColumnKind::cross_lane; });
    CHECK(l.x == std::vector<int>{0, 0, 1, 0});
    CHECK(l.spine_x(1) == 1);
}
