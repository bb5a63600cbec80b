#include "pbf/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

namespace pbf {

std::int64_t target_edge_count(int n, double edges_per_vertex) {
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const auto wanted = static_cast<std::int64_t>(std::llround(n * edges_per_vertex));
    return std::min(wanted, pairs);
}

DiGraph generate_random_dag(int n, double edges_per_vertex, std::uint64_t seed) {
    if (n < 1) throw InputError("generator: n must be at least 1");
    if (!(edges_per_vertex >= 0) || !std::isfinite(edges_per_vertex)) {
        throw InputError("generator: degree must be a non-negative number");
    }
    std::mt19937_64 rng(seed);
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    const std::int64_t m = target_edge_count(n, edges_per_vertex);
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    auto edge_at = [&](int i, int j) {
        return Edge{order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]};
    };

    if (2 * m > pairs) {
        std::vector<Edge> all;
        all.reserve(static_cast<std::size_t>(pairs));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) all.push_back(edge_at(i, j));
        }
        std::shuffle(all.begin(), all.end(), rng);
        edges.assign(all.begin(), all.begin() + m);
    } else {
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(static_cast<std::size_t>(m) * 2);
        while (static_cast<std::int64_t>(edges.size()) < m) {
            int i = pick(rng);
            int j = pick(rng);
            if (i == j) continue;
            if (i > j) std::swap(i, j);
            const std::uint64_t key = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n) +
                                      static_cast<std::uint64_t>(j);
            if (seen.insert(key).second) edges.push_back(edge_at(i, j));
        }
    }
    return DiGraph(n, std::move(edges));
}

}  // namespace pbf
