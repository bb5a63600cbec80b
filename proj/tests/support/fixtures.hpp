#pragma once

#include <random>
#include <set>
#include <vector>

#include "pbf/graph.hpp"

namespace fixture {

inline pbf::DiGraph chain(int n) {
    std::vector<pbf::Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return pbf::DiGraph(n, edges);
}

inline pbf::DiGraph diamond() { return pbf::DiGraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

/// Random simple digraph, cycles allowed.
inline pbf::DiGraph random_digraph(int n, int m, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::set<pbf::Edge> edges;
    while (static_cast<int>(edges.size()) < m) {
        int u = pick(rng);
        int v = pick(rng);
        if (u != v) edges.insert({u, v});
    }
    return pbf::DiGraph(n, {edges.begin(), edges.end()});
}

/// Random DAG whose edges all go from a smaller to a larger id.
inline pbf::DiGraph random_forward_dag(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<pbf::Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.push_back({u, v});
        }
    }
    return pbf::DiGraph(n, edges);
}

}  // namespace fixture
