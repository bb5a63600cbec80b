#include "pbf/layout.hpp"

#include <algorithm>
#include <numeric>

namespace pbf {

namespace {

std::vector<Point> straight(const Layout& l, Edge e) {
    return {l.position(e.from), l.position(e.to)};
}

}  // namespace

std::string_view to_string(ColumnKind k) {
    switch (k) {
        case ColumnKind::path_spine: return "path-spine";
        case ColumnKind::bundle_lane_left: return "bundle-lane-left";
        case ColumnKind::bundle_lane_right: return "bundle-lane-right";
        case ColumnKind::cross_lane: return "cross-lane";
    }
    return "?";
}

std::optional<ColumnKind> column_kind_from_string(std::string_view s) {
    for (auto k : {ColumnKind::path_spine, ColumnKind::bundle_lane_left,
                   ColumnKind::bundle_lane_right, ColumnKind::cross_lane}) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

std::string_view to_string(BundleKind k) {
    switch (k) {
        case BundleKind::transitive_in: return "transitive-in";
        case BundleKind::transitive_out: return "transitive-out";
        case BundleKind::cross: return "cross";
    }
    return "?";
}

std::optional<BundleKind> bundle_kind_from_string(std::string_view s) {
    for (auto k : {BundleKind::transitive_in, BundleKind::transitive_out, BundleKind::cross}) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

int Layout::path_count() const {
    int k = 0;
    for (int p : path_of) k = std::max(k, p + 1);
    return k;
}

int Layout::spine_x(int path) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i].kind == ColumnKind::path_spine && columns[i].path == path) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

const EdgeRoute* Layout::find_route(Edge e) const {
    auto it = std::lower_bound(routes.begin(), routes.end(), e,
                               [](const EdgeRoute& r, const Edge& key) { return r.edge < key; });
    if (it == routes.end() || it->edge != e) return nullptr;
    return &*it;
}

Layout initial_layout(const DiGraph& g, const PathDecomposition& d, const TopoOrder& t) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    PathIndex idx = index_paths(g.vertex_count(), d);

    Layout l;
    l.x.resize(n);
    l.y.resize(n);
    l.path_of = idx.path_of;
    l.order_in_path = idx.position;
    for (std::size_t p = 0; p < d.paths.size(); ++p) {
        l.columns.push_back({ColumnKind::path_spine, static_cast<int>(p)});
    }
    for (std::size_t v = 0; v < n; ++v) {
        l.x[v] = idx.path_of[v];
        l.y[v] = t.rank[v];
    }

    EdgeClassification c = classify_edges(g, d);
    for (const Edge& e : c.path_edges) {
        l.routes.push_back({e, EdgeCategory::path, straight(l, e), std::nullopt});
    }
    for (const Edge& e : c.cross_edges) {
        l.routes.push_back({e, EdgeCategory::cross, straight(l, e), std::nullopt});
    }
    std::sort(l.routes.begin(), l.routes.end(),
              [](const EdgeRoute& a, const EdgeRoute& b) { return a.edge < b.edge; });
    return l;
}

Layout compact(const DiGraph& g, const Layout& layout) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return layout.y[static_cast<std::size_t>(a)] < layout.y[static_cast<std::size_t>(b)];
    });

    Layout out = layout;
    std::vector<bool> placed(n, false);
    for (VertexId v : order) {
        int row = 0;
        for (VertexId w : g.predecessors(v)) {
            if (!placed[static_cast<std::size_t>(w)]) {
                throw InvariantError("compact: predecessor " + std::to_string(w) + " of " +
                                     std::to_string(v) + " is not drawn above it");
            }
            row = std::max(row, out.y[static_cast<std::size_t>(w)] + 1);
        }
        out.y[static_cast<std::size_t>(v)] = row;
        placed[static_cast<std::size_t>(v)] = true;
    }
    for (EdgeRoute& r : out.routes) {
        r.points = straight(out, r.edge);
        r.bundle.reset();
    }
    out.bundles.clear();
    return out;
}

std::optional<PropertyViolation> assert_properties(const DiGraph& g, const Layout& layout) {
    using Kind = PropertyViolation::Kind;
    const int n = g.vertex_count();

    std::vector<std::vector<VertexId>> paths(static_cast<std::size_t>(layout.path_count()));
    for (VertexId v = 0; v < n; ++v) {
        paths[static_cast<std::size_t>(layout.path_of[static_cast<std::size_t>(v)])].push_back(v);
    }
    for (auto& path : paths) {
        std::sort(path.begin(), path.end(), [&](VertexId a, VertexId b) {
            return layout.order_in_path[static_cast<std::size_t>(a)] <
                   layout.order_in_path[static_cast<std::size_t>(b)];
        });
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            VertexId a = path[i];
            VertexId b = path[i + 1];
            if (layout.y[static_cast<std::size_t>(a)] >= layout.y[static_cast<std::size_t>(b)]) {
                return PropertyViolation{Kind::distinct_rows, a, b,
                                         "path vertices " + std::to_string(a) + " and " +
                                             std::to_string(b) + " are not on distinct rows "
                                             "in path order"};
            }
        }
    }

    for (const Edge& e : g.edges()) {
        if (layout.y[static_cast<std::size_t>(e.from)] >= layout.y[static_cast<std::size_t>(e.to)]) {
            return PropertyViolation{Kind::edge_direction, e.from, e.to,
                                     "edge (" + std::to_string(e.from) + "," +
                                         std::to_string(e.to) + ") does not point downward"};
        }
    }

    for (VertexId v = 0; v < n; ++v) {
        int row = layout.y[static_cast<std::size_t>(v)];
        if (row == 0) continue;
        auto preds = g.predecessors(v);
        bool supported = std::any_of(preds.begin(), preds.end(), [&](VertexId w) {
            return layout.y[static_cast<std::size_t>(w)] + 1 == row;
        });
        if (!supported) {
            VertexId witness = preds.empty() ? v : preds.front();
            return PropertyViolation{Kind::unit_step, v, witness,
                                     "vertex " + std::to_string(v) + " at row " +
                                         std::to_string(row) +
                                         " has no predecessor on the row above"};
        }
    }
    return std::nullopt;
}

void remap_columns(Layout& layout, std::span<const int> remap) {
    auto map = [&](int x) { return remap[static_cast<std::size_t>(x)]; };
    for (int& x : layout.x) x = map(x);
    for (EdgeRoute& r : layout.routes) {
        for (Point& p : r.points) p.x = map(p.x);
    }
    for (BundleRecord& b : layout.bundles) b.lane_x = map(b.lane_x);
}

std::vector<int> spine_columns(const Layout& layout) {
    std::vector<int> spines(static_cast<std::size_t>(layout.path_count()), -1);
    for (std::size_t i = 0; i < layout.columns.size(); ++i) {
        const Column& c = layout.columns[i];
        if (c.kind == ColumnKind::path_spine) {
            if (static_cast<std::size_t>(c.path) >= spines.size()) {
                spines.resize(static_cast<std::size_t>(c.path) + 1, -1);
            }
            spines[static_cast<std::size_t>(c.path)] = static_cast<int>(i);
        }
    }
    return spines;
}

void insert_columns(Layout& layout, int at, std::span<const Column> columns) {
    std::vector<std::vector<Column>> groups(layout.columns.size() + 1);
    groups[static_cast<std::size_t>(at)].assign(columns.begin(), columns.end());
    insert_column_groups(layout, groups);
}

void insert_column_groups(Layout& layout, const std::vector<std::vector<Column>>& groups) {
    const std::size_t old_count = layout.columns.size();
    std::vector<int> remap(old_count);
    std::vector<Column> merged;
    for (std::size_t i = 0; i <= old_count; ++i) {
        if (i < groups.size()) merged.insert(merged.end(), groups[i].begin(), groups[i].end());
        if (i == old_count) break;
        remap[i] = static_cast<int>(merged.size());
        merged.push_back(layout.columns[i]);
    }
    remap_columns(layout, remap);
    layout.columns = std::move(merged);
}

}  // namespace pbf
