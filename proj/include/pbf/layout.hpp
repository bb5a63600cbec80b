#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbf/decomposition.hpp"
#include "pbf/graph.hpp"

namespace pbf {

struct Point {
    int x = 0;
    int y = 0;

    auto operator<=>(const Point&) const = default;
};

enum class ColumnKind : std::uint8_t {
    path_spine,
    bundle_lane_left,
    bundle_lane_right,
    cross_lane,
};

std::string_view to_string(ColumnKind k);
std::optional<ColumnKind> column_kind_from_string(std::string_view s);

/// One grid column. `path` is the decomposition path that owns the column:
/// the spine's own path, the path whose transitive bundles use the lane, or
/// the path whose left-hand gap hosts the cross lane.
struct Column {
    ColumnKind kind = ColumnKind::path_spine;
    int path = 0;

    bool operator==(const Column&) const = default;
};

struct EdgeRoute {
    Edge edge;
    EdgeCategory category = EdgeCategory::path;
    /// First point is the source position, last point the target position.
    std::vector<Point> points;
    std::optional<int> bundle;

    bool operator==(const EdgeRoute&) const = default;
};

enum class BundleKind : std::uint8_t { transitive_in, transitive_out, cross };

std::string_view to_string(BundleKind k);
std::optional<BundleKind> bundle_kind_from_string(std::string_view s);

/// Provenance of a drawn bundle: which vertex it hangs off, the trunk
/// column, and the rows the trunk spans.
struct BundleRecord {
    int id = 0;
    BundleKind kind = BundleKind::transitive_in;
    VertexId anchor = 0;
    int path = 0;
    int lane_x = 0;
    int s = 0;
    int f = 0;
    std::vector<Edge> members;

    bool operator==(const BundleRecord&) const = default;
};

/// Integer-grid drawing. Row 0 is the top; every edge points to a larger row.
struct Layout {
    std::vector<int> x;
    std::vector<int> y;
    std::vector<int> path_of;
    std::vector<int> order_in_path;
    std::vector<Column> columns;
    /// Drawn edges sorted by (from, to). Hidden edges have no entry.
    std::vector<EdgeRoute> routes;
    std::vector<BundleRecord> bundles;

    int vertex_count() const noexcept { return static_cast<int>(x.size()); }
    int path_count() const;
    Point position(VertexId v) const {
        return {x[static_cast<std::size_t>(v)], y[static_cast<std::size_t>(v)]};
    }
    /// Column index of the spine of `path`, or -1.
    int spine_x(int path) const;
    const EdgeRoute* find_route(Edge e) const;

    bool operator==(const Layout&) const = default;
};

/// Path-based placement: vertex x is its path's column (paths left to right
/// in decomposition order), vertex y is its topological rank. Path and cross
/// edges are drawn as straight segments; path-transitive edges are hidden.
Layout initial_layout(const DiGraph& g, const PathDecomposition& d, const TopoOrder& t);

/// Vertical compaction. Vertices are visited by ascending current row; a
/// vertex without incoming edges moves to row 0, any other vertex to one row
/// below its lowest-drawn predecessor. x and columns are unchanged; every
/// route is reset to a straight segment and bundle records are dropped.
Layout compact(const DiGraph& g, const Layout& layout);

struct PropertyViolation {
    enum class Kind {
        /// Two vertices of one path share a row, or a path is not drawn top-down.
        distinct_rows,
        /// A vertex at row > 0 has no predecessor exactly one row above it.
        unit_step,
        /// An edge does not point to a larger row.
        edge_direction,
    };
    Kind kind;
    VertexId first;
    VertexId second;
    std::string message;
};

/// Checks the two structural properties of a compacted drawing, plus edge
/// direction. Returns nullopt when all hold.
std::optional<PropertyViolation> assert_properties(const DiGraph& g, const Layout& layout);

/// Spine column of every path, indexed by path.
std::vector<int> spine_columns(const Layout& layout);

/// Inserts `columns` before column index `at`; every x >= at shifts right.
void insert_columns(Layout& layout, int at, std::span<const Column> columns);

/// Batch insertion in one pass: groups[i] goes before old column i, and
/// groups[columns.size()] after the last column.
void insert_column_groups(Layout& layout, const std::vector<std::vector<Column>>& groups);

/// Deletes columns matching `pred`, shifting later x values left. The caller
/// guarantees that no vertex or route point lies in a deleted column.
template <class Pred>
void remove_columns(Layout& layout, Pred pred);

/// Rewrites x through `remap` (old x -> new x) for vertices, routes and bundles.
void remap_columns(Layout& layout, std::span<const int> remap);

template <class Pred>
void remove_columns(Layout& layout, Pred pred) {
    std::vector<int> remap(layout.columns.size(), -1);
    std::vector<Column> kept;
    kept.reserve(layout.columns.size());
    for (std::size_t i = 0; i < layout.columns.size(); ++i) {
        if (pred(layout.columns[i])) continue;
        remap[i] = static_cast<int>(kept.size());
        kept.push_back(layout.columns[i]);
    }
    remap_columns(layout, remap);
    layout.columns = std::move(kept);
}

}  // namespace pbf
