#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pbf/decomposition.hpp"
#include "pbf/graph.hpp"
#include "pbf/layout.hpp"

namespace pbf {

/// Bends a cross edge must have for a vertical distance `distance` >= 1:
/// 0 for distance 1, 1 for distance 2, 2 beyond.
int required_bends(int distance);

struct CrossRoute {
    Edge edge;
    int bends = 0;
    std::vector<Point> polyline;
    /// Inter-path lane used by the route; absent for distance-1 edges.
    std::optional<int> lane_x;

    bool operator==(const CrossRoute&) const = default;
};

/// Incoming cross edges of one target sharing a trunk.
struct CrossBundle {
    VertexId target = 0;
    std::vector<Edge> members;
    int lane_x = 0;
    int s = 0;
    int f = 0;

    bool operator==(const CrossBundle&) const = default;
};

struct CrossRouting {
    std::vector<CrossRoute> routes;
    Layout layout;
};

/// Draws every cross edge on its own. A distance-1 edge is a straight
/// segment. Longer edges drop one row diagonally into a lane of the gap left
/// of the target's path, run down the lane, and leave it diagonally on the
/// row above the target; a distance-2 edge turns once at the lane.
/// Replaces any cross routes, cross bundles and cross lanes already present.
CrossRouting route_cross_edges(const Layout& layout, const EdgeClassification& classification);

struct CrossBundling {
    std::vector<CrossBundle> bundles;
    std::vector<CrossRoute> routes;
    Layout layout;
};

/// Re-draws the edges of `routes`, merging the incoming edges of distance
/// >= 2 of each target into one trunk when there are at least two of them.
/// Other edges are drawn as in route_cross_edges.
CrossBundling bundle_cross_edges(const Layout& layout, std::span<const CrossRoute> routes);

}  // namespace pbf
