#include "pbf/routing.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pbf/bundling.hpp"

namespace pbf {

namespace {

// One lane occupant: a single long cross edge or a bundle of them.
struct LaneUser {
    int gap = 0;
    RowSpan span;
    std::vector<Edge> members;
    bool bundled = false;
    int lane = -1;
};

struct Placement {
    std::vector<CrossBundle> bundles;
    std::vector<CrossRoute> routes;
    Layout layout;
};

std::vector<int> first_columns(const Layout& l) {
    std::vector<int> first(static_cast<std::size_t>(l.path_count()), -1);
    for (std::size_t i = 0; i < l.columns.size(); ++i) {
        auto p = static_cast<std::size_t>(l.columns[i].path);
        if (p < first.size() && first[p] < 0) first[p] = static_cast<int>(i);
    }
    return first;
}

Placement place_cross_edges(const Layout& layout, std::vector<Edge> edges, bool bundle) {
    std::sort(edges.begin(), edges.end());
    Placement result;
    Layout& out = result.layout;
    out = layout;
    std::erase_if(out.routes,
                  [](const EdgeRoute& r) { return r.category == EdgeCategory::cross; });
    std::erase_if(out.bundles,
                  [](const BundleRecord& b) { return b.kind == BundleKind::cross; });
    remove_columns(out, [](const Column& c) { return c.kind == ColumnKind::cross_lane; });

    auto yof = [&](VertexId v) { return out.y[static_cast<std::size_t>(v)]; };
    auto gap_of = [&](VertexId v) { return out.path_of[static_cast<std::size_t>(v)]; };

    std::vector<Edge> straight;
    std::vector<LaneUser> users;
    std::map<VertexId, std::vector<Edge>> by_target;
    for (const Edge& e : edges) {
        const int d = yof(e.to) - yof(e.from);
        if (d < 1) {
            throw InvariantError("cross edge (" + std::to_string(e.from) + "," +
                                 std::to_string(e.to) + ") does not point downward");
        }
        if (d == 1) {
            straight.push_back(e);
        } else {
            by_target[e.to].push_back(e);
        }
    }
    for (auto& [target, members] : by_target) {
        if (bundle && members.size() >= 2) {
            int top = yof(target);
            for (const Edge& e : members) top = std::min(top, yof(e.from));
            users.push_back({gap_of(target), {top + 1, yof(target) - 1}, members, true});
        } else {
            for (const Edge& e : members) {
                users.push_back({gap_of(target), {yof(e.from) + 1, yof(e.to) - 1}, {e}, false});
            }
        }
    }

    // Pack each gap's lane users; lane 0 sits next to the target path.
    const int k = out.path_count();
    std::vector<std::vector<std::size_t>> per_gap(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < users.size(); ++i) {
        per_gap[static_cast<std::size_t>(users[i].gap)].push_back(i);
    }
    std::vector<int> lane_count(static_cast<std::size_t>(k), 0);
    for (int q = 0; q < k; ++q) {
        const auto& ids = per_gap[static_cast<std::size_t>(q)];
        std::vector<RowSpan> spans;
        spans.reserve(ids.size());
        for (std::size_t i : ids) spans.push_back(users[i].span);
        LanePacking packing = pack_intervals(spans);
        for (std::size_t lane = 0; lane < packing.lane_count(); ++lane) {
            for (std::size_t j : packing.lanes[lane]) users[ids[j]].lane = static_cast<int>(lane);
        }
        lane_count[static_cast<std::size_t>(q)] = static_cast<int>(packing.lane_count());
    }

    {
        const std::vector<int> first = first_columns(out);
        std::vector<std::vector<Column>> groups(out.columns.size() + 1);
        for (int q = 0; q < k; ++q) {
            groups[static_cast<std::size_t>(first[static_cast<std::size_t>(q)])].assign(
                static_cast<std::size_t>(lane_count[static_cast<std::size_t>(q)]),
                Column{ColumnKind::cross_lane, q});
        }
        insert_column_groups(out, groups);
    }

    // A distance-2 edge whose source lies left of its lane would be drawn
    // as two collinear diagonals when the lane sits exactly halfway. Empty
    // columns at the far end of the gap push the lanes right until no such
    // edge is straight.
    std::vector<int> base = first_columns(out);
    std::vector<int> spacers(static_cast<std::size_t>(k), 0);
    {
        std::vector<int> done_base;
        std::vector<int> done_prefix{0};
        auto shift_at = [&](int x) {
            auto it = std::upper_bound(done_base.begin(), done_base.end(), x);
            return done_prefix[static_cast<std::size_t>(it - done_base.begin())];
        };
        for (int q = 0; q < k; ++q) {
            const auto uq = static_cast<std::size_t>(q);
            const int b = base[uq];
            const int shift = done_prefix.back();
            std::set<int> forbidden;
            for (std::size_t i : per_gap[uq]) {
                const int lane_x = b + lane_count[uq] - 1 - users[i].lane + shift;
                for (const Edge& e : users[i].members) {
                    if (yof(e.to) - yof(e.from) != 2) continue;
                    const int x1 = out.x[static_cast<std::size_t>(e.from)];
                    if (x1 >= b) continue;
                    const int x1f = x1 + shift_at(x1);
                    const int x2f = out.x[static_cast<std::size_t>(e.to)] + shift;
                    forbidden.insert((x2f - lane_x) - (lane_x - x1f));
                }
            }
            int s = 0;
            while (forbidden.contains(s)) ++s;
            spacers[uq] = s;
            done_base.push_back(b);
            done_prefix.push_back(done_prefix.back() + s);
        }

        std::vector<std::vector<Column>> groups(out.columns.size() + 1);
        for (int q = 0; q < k; ++q) {
            const auto uq = static_cast<std::size_t>(q);
            groups[static_cast<std::size_t>(base[uq])].assign(static_cast<std::size_t>(spacers[uq]),
                                                               Column{ColumnKind::cross_lane, q});
        }
        insert_column_groups(out, groups);
        base = first_columns(out);
    }

    auto lane_x_of = [&](const LaneUser& u) {
        const auto uq = static_cast<std::size_t>(u.gap);
        return base[uq] + spacers[uq] + lane_count[uq] - 1 - u.lane;
    };
    auto route = [&](const Edge& e, int lane_x) {
        const Point from = out.position(e.from);
        const Point to = out.position(e.to);
        std::vector<Point> pts{from, {lane_x, from.y + 1}};
        if (to.y - 1 > from.y + 1) pts.push_back({lane_x, to.y - 1});
        pts.push_back(to);
        return pts;
    };

    for (const Edge& e : straight) {
        result.routes.push_back({e, 0, {out.position(e.from), out.position(e.to)}, std::nullopt});
    }
    int next_id = static_cast<int>(out.bundles.size());
    for (const LaneUser& u : users) {
        const int lane_x = lane_x_of(u);
        std::optional<int> id;
        if (u.bundled) {
            id = next_id++;
            const VertexId target = u.members.front().to;
            result.bundles.push_back({target, u.members, lane_x, u.span.s, u.span.f});
            out.bundles.push_back({*id, BundleKind::cross, target, u.gap, lane_x, u.span.s,
                                   u.span.f, u.members});
        }
        for (const Edge& e : u.members) {
            auto pts = route(e, lane_x);
            const int bends = static_cast<int>(pts.size()) - 2;
            result.routes.push_back({e, bends, pts, lane_x});
            out.routes.push_back({e, EdgeCategory::cross, std::move(pts), id});
        }
    }
    for (const Edge& e : straight) {
        out.routes.push_back(
            {e, EdgeCategory::cross, {out.position(e.from), out.position(e.to)}, std::nullopt});
    }
    std::sort(result.routes.begin(), result.routes.end(),
              [](const CrossRoute& a, const CrossRoute& b) { return a.edge < b.edge; });
    std::sort(out.routes.begin(), out.routes.end(),
              [](const EdgeRoute& a, const EdgeRoute& b) { return a.edge < b.edge; });
    return result;
}

}  // namespace

int required_bends(int distance) {
    if (distance <= 1) return 0;
    return distance == 2 ? 1 : 2;
}

CrossRouting route_cross_edges(const Layout& layout, const EdgeClassification& classification) {
    Placement p = place_cross_edges(layout, classification.cross_edges, false);
    return {std::move(p.routes), std::move(p.layout)};
}

CrossBundling bundle_cross_edges(const Layout& layout, std::span<const CrossRoute> routes) {
    std::vector<Edge> edges;
    edges.reserve(routes.size());
    for (const CrossRoute& r : routes) edges.push_back(r.edge);
    Placement p = place_cross_edges(layout, std::move(edges), true);
    return {std::move(p.bundles), std::move(p.routes), std::move(p.layout)};
}

}  // namespace pbf
