#include <doctest.h>

#include <cmath>

#include "pbf/bench.hpp"
#include "pbf/generator.hpp"

using namespace pbf;

TEST_CASE("generator edge counts") {
    CHECK(generate_random_dag(20, 1.55, 1).edge_count() == 31);
    CHECK(generate_random_dag(1, 5.0, 1).edge_count() == 0);
    CHECK(generate_random_dag(100, 1.6, 1).edge_count() == 160);
    CHECK(generate_random_dag(5, 10.0, 1).edge_count() == 10);
    for (int n : {10, 37, 200}) {
        CHECK(static_cast<std::int64_t>(generate_random_dag(n, 1.6, 2).edge_count()) ==
              std::llround(1.6 * n));
    }
}

TEST_CASE("generator output is deterministic and acyclic") {
    CHECK(generate_random_dag(50, 2.0, 7) == generate_random_dag(50, 2.0, 7));
    CHECK_FALSE(generate_random_dag(50, 2.0, 7) == generate_random_dag(50, 2.0, 8));
    for (unsigned seed = 0; seed < 20; ++seed) {
        CHECK_NOTHROW(topo_sort(generate_random_dag(60, seed % 2 ? 5.6 : 25.0, seed)));
    }
}

TEST_CASE("generator rejects bad parameters") {
    CHECK_THROWS_AS(generate_random_dag(0, 1.0, 1), InputError);
    CHECK_THROWS_AS(generate_random_dag(5, -1.0, 1), InputError);
    CHECK_THROWS_AS(generate_random_dag(5, NAN, 1), InputError);
}

TEST_CASE("bench") {
    BenchSuite suite;
    suite.sizes = {20, 50, 100};
    suite.degree = 1.6;
    suite.seeds = 2;
    BenchTable t = bench(suite);
    REQUIRE(t.rows.size() == 6);
    REQUIRE(t.medians.size() == 3);
    CHECK(t.rows[0].n == 20);
    CHECK(t.rows[0].m == 32);
    CHECK(t.rows[5].m == 160);
    for (const BenchRow& r : t.rows) {
        CHECK(r.wall_ms >= 0);
        CHECK(r.metrics.area == r.metrics.width * r.metrics.height);
    }

    const std::string csv = to_csv(t);
    CHECK(csv.rfind("graph_id,n,m,crossings,bends,width,height,area,wall_ms\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);

    BenchTable empty = bench(BenchSuite{});
    CHECK(empty.rows.empty());
    CHECK(to_csv(empty) == "graph_id,n,m,crossings,bends,width,height,area,wall_ms\n");

    CHECK(median({}) == 0);
    CHECK(median({3, 1, 2}) == 2);
    CHECK(median({4, 1, 2, 3}) == 2.5);
}
