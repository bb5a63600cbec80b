#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pbf/graph.hpp"

namespace pbf {

/// Ordered list of vertex-disjoint directed paths. Path order is the column
/// order of the drawing, left to right.
struct PathDecomposition {
    std::vector<std::vector<VertexId>> paths;

    std::size_t size() const noexcept { return paths.size(); }
    bool operator==(const PathDecomposition&) const = default;
};

/// Where each vertex sits in a decomposition.
struct PathIndex {
    std::vector<int> path_of;
    std::vector<int> position;
};

/// Requires every vertex to appear at most once; unlisted vertices get -1.
PathIndex index_paths(int vertex_count, const PathDecomposition& d);

struct DecompositionReport {
    std::vector<VertexId> missing;
    std::vector<VertexId> duplicated;
    std::vector<VertexId> out_of_range;
    std::vector<Edge> non_edges;
    std::size_t empty_paths = 0;

    bool ok() const noexcept {
        return missing.empty() && duplicated.empty() && out_of_range.empty() &&
               non_edges.empty() && empty_paths == 0;
    }
    std::string describe() const;
};

DecompositionReport validate_decomposition(const DiGraph& g, const PathDecomposition& d);

enum class EdgeCategory : std::uint8_t { path, transitive, cross };

std::string_view to_string(EdgeCategory c);

struct EdgeClassification {
    std::vector<Edge> path_edges;
    std::vector<Edge> transitive_edges;
    std::vector<Edge> cross_edges;
};

/// Splits E into path edges (consecutive on one path), path-transitive edges
/// (same path, not consecutive) and cross edges (different paths). Each list
/// is sorted. `d` must be valid for `g`.
EdgeClassification classify_edges(const DiGraph& g, const PathDecomposition& d);

/// Minimum path cover of a DAG via maximum matching in the split bipartite
/// graph (Hopcroft-Karp). Paths are ordered by the topological rank of their
/// first vertex. Throws CycleError on cyclic input.
PathDecomposition min_path_cover(const DiGraph& g);

/// Parses the path-list format (one path per line, '#' comments) and
/// validates the result against `g`. Throws InputError on format errors or
/// validation failures.
PathDecomposition parse_decomposition(std::string_view text, const DiGraph& g);

std::string serialize_decomposition(const PathDecomposition& d);

}  // namespace pbf
