#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbf/errors.hpp"

namespace pbf {

using VertexId = int;

struct Edge {
    VertexId from = 0;
    VertexId to = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Raised when an acyclic-only operation meets a directed cycle.
class CycleError : public InputError {
public:
    CycleError(VertexId vertex, const std::string& what)
        : InputError(what), vertex_(vertex) {}

    /// Some vertex that lies on a directed cycle.
    VertexId vertex() const noexcept { return vertex_; }

private:
    VertexId vertex_;
};

/// Simple directed graph over dense vertex ids 0..n-1.
///
/// Edges are kept sorted by (from, to); adjacency lists are sorted ascending.
/// Self-loops are always rejected. Parallel edges are rejected unless the
/// graph is built with Duplicates::merge, in which case they collapse to one.
class DiGraph {
public:
    enum class Duplicates { reject, merge };

    DiGraph() = default;
    DiGraph(int vertex_count, std::vector<Edge> edges,
            Duplicates policy = Duplicates::reject);

    int vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const VertexId> successors(VertexId v) const;
    std::span<const VertexId> predecessors(VertexId v) const;
    int out_degree(VertexId v) const { return static_cast<int>(successors(v).size()); }
    int in_degree(VertexId v) const { return static_cast<int>(predecessors(v).size()); }

    bool has_edge(VertexId from, VertexId to) const;

    bool operator==(const DiGraph& other) const {
        return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
    }

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<VertexId> out_targets_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<VertexId> in_sources_;
};

/// Parses the edge-list format: the first non-comment line holds the vertex
/// count, every following line holds "u v". Lines starting with '#' and
/// blank lines are ignored. Throws InputError with the offending line number.
DiGraph parse_graph(std::string_view text,
                    DiGraph::Duplicates policy = DiGraph::Duplicates::reject);

/// Canonical edge-list text: vertex count, then edges sorted by (u, v).
std::string serialize_graph(const DiGraph& g);

struct CycleRemovalResult {
    DiGraph dag;
    /// Original edges (as they appeared in the input) whose direction was
    /// flipped; sorted.
    std::vector<Edge> reversed_edges;
};

/// Reverses every depth-first back edge. Roots and successors are visited in
/// ascending id order, so the result is fully determined by the input.
/// A reversed edge that coincides with an existing edge is merged into it.
CycleRemovalResult remove_cycles(const DiGraph& g);

struct TopoOrder {
    /// rank[v] is the position of v in the order.
    std::vector<int> rank;
    /// order[i] is the vertex with rank i.
    std::vector<VertexId> order;
};

/// Kahn's algorithm, always releasing the smallest ready vertex id first.
/// Throws CycleError naming a vertex on a cycle.
TopoOrder topo_sort(const DiGraph& g);

/// For each v, the number of edges on a longest directed path ending at v.
/// Throws CycleError on cyclic input.
std::vector<int> longest_path_ending_at(const DiGraph& g);

}  // namespace pbf
