#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pbf/decomposition.hpp"
#include "pbf/graph.hpp"
#include "pbf/layout.hpp"

namespace pbf {

enum class BundleDirection : std::uint8_t { incoming, outgoing };
enum class Side : std::uint8_t { left, right };

/// Closed row range [s, f]. Two spans conflict when they share any row.
struct RowSpan {
    int s = 0;
    int f = 0;

    bool operator==(const RowSpan&) const = default;
};

inline bool spans_conflict(RowSpan a, RowSpan b) { return a.s <= b.f && b.s <= a.f; }

/// A group of path-transitive edges sharing one endpoint (the anchor), drawn
/// through a single vertical trunk beside the path's spine.
struct BundleInterval {
    int path_index = 0;
    VertexId anchor = 0;
    BundleDirection direction = BundleDirection::incoming;
    std::vector<Edge> members;
    /// Row of the non-anchor endpoint of each member, aligned with `members`.
    std::vector<int> member_rows;
    int s = 0;
    int f = 0;
    Side side = Side::left;
    /// Lane offset from the spine (0 = adjacent), -1 until packed.
    int lane = -1;

    RowSpan span() const { return {s, f}; }
};

/// Assignment of intervals to lanes; lanes[0] is nearest the spine.
/// Entries are indices into the packed sequence.
struct LanePacking {
    std::vector<std::vector<std::size_t>> lanes;

    std::size_t lane_count() const noexcept { return lanes.size(); }
};

/// Greedy interval partitioning: intervals in order of start row, each into
/// the lowest-numbered lane whose last interval ended strictly above it.
/// Uses exactly max-overlap-depth lanes. O(b log b).
LanePacking pack_intervals(std::span<const RowSpan> spans);
LanePacking pack_intervals(std::span<const BundleInterval> intervals);

/// Repeatedly takes the path vertex with the largest remaining transitive in-
/// or out-degree and bundles all of those edges. Ties go to the larger
/// degree, then incoming before outgoing, then the smaller vertex id.
/// `transitive` may contain edges of other paths; they are ignored.
std::vector<BundleInterval> extract_path_bundles(std::span<const VertexId> path, int path_index,
                                                 std::span<const Edge> transitive,
                                                 std::span<const int> y, Side side);

/// Number of connector/trunk crossings between bundles of different lanes,
/// counted per pair of member edges, when lanes are ordered as in `packing`.
long long lane_order_cost(const LanePacking& packing, std::span<const BundleInterval> intervals);

/// Permutes whole lanes to reduce lane_order_cost: exhaustive search up to
/// six lanes, adjacent-swap hill climbing beyond. Never returns a worse
/// order; ties keep the input order.
LanePacking reorder_lanes(const LanePacking& packing, std::span<const BundleInterval> intervals);

struct TransitiveBundling {
    std::vector<BundleInterval> intervals;
    /// One packing per path, indexing into the intervals of that path in
    /// `intervals` order.
    std::vector<LanePacking> packings;
    Layout layout;
};

/// Bundles, packs and draws every path-transitive edge. Lanes are inserted
/// on the left of each spine, except for the rightmost path whose lanes go on
/// its right. Each member edge is drawn as spine -> lane -> trunk -> spine.
TransitiveBundling bundle_transitive(const DiGraph& g, const PathDecomposition& d,
                                     const EdgeClassification& classification,
                                     const Layout& layout, bool reorder = true);

}  // namespace pbf
