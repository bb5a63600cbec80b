#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pbf/graph.hpp"
#include "pbf/layout.hpp"

namespace pbf {

struct MetricsReport {
    std::int64_t crossings = 0;
    std::int64_t bends = 0;
    std::int64_t width = 0;
    std::int64_t height = 0;
    std::int64_t area = 0;

    bool operator==(const MetricsReport&) const = default;
};

/// One straight piece of a route. `owner` indexes Layout::routes.
struct Segment {
    Point p;
    Point q;
    std::size_t owner = 0;
};

/// All non-degenerate segments of all routes, in route order.
std::vector<Segment> segments_of(const Layout& layout);

/// Twice the signed area of (a, b, c); exact on grid coordinates.
std::int64_t orientation(Point a, Point b, Point c);

/// True when the two segments meet in exactly one point that is interior to
/// both. Touching at an endpoint and collinear overlap are not crossings.
bool properly_intersect(const Segment& a, const Segment& b);

/// Number of proper intersections between segments of different routes.
/// Axis-parallel and unit-height diagonal segments are counted by sweeps in
/// O(s log s); any other segment is compared against all others.
std::int64_t count_crossings(const Layout& layout);

/// Interior points of a polyline where the direction changes. Repeated
/// points and straight continuations are not bends.
int bends_of(std::span<const Point> polyline);

std::int64_t count_bends(const Layout& layout);

/// width = distinct x over vertices and route points; height = distinct y
/// minus one (zero for an empty drawing); area = width * height.
MetricsReport measure(const Layout& layout);

/// A route running through the position of a vertex that is not one of its
/// endpoints. Not counted as a crossing; reported as a warning.
struct VertexContact {
    VertexId vertex = 0;
    Edge edge;

    auto operator<=>(const VertexContact&) const = default;
};

std::vector<VertexContact> find_vertex_contacts(const Layout& layout);

}  // namespace pbf
