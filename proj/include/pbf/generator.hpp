#pragma once

#include <cstdint>

#include "pbf/graph.hpp"

namespace pbf {

/// Number of edges generate_random_dag produces: round(n * edges_per_vertex),
/// capped at n(n-1)/2.
std::int64_t target_edge_count(int n, double edges_per_vertex);

/// Random DAG on n vertices. A seeded random permutation fixes a hidden
/// topological order; edges are drawn uniformly without replacement among
/// the pairs that respect it. `edges_per_vertex` is m/n, so 1.6 at n = 100
/// gives 160 edges. Throws InputError when n < 1 or the degree is negative.
DiGraph generate_random_dag(int n, double edges_per_vertex, std::uint64_t seed);

}  // namespace pbf
