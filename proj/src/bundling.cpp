#include "pbf/bundling.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <tuple>
#include <unordered_map>

namespace pbf {

namespace {

struct DegreeEntry {
    int degree;
    BundleDirection direction;
    VertexId vertex;
};

// Max-heap order: larger degree, then incoming, then smaller id.
struct EntryLess {
    bool operator()(const DegreeEntry& a, const DegreeEntry& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.direction != b.direction) return a.direction == BundleDirection::outgoing;
        return a.vertex > b.vertex;
    }
};

// Connector rows and per-member trunk spans of one interval, preprocessed
// for crossing queries.
struct LaneItem {
    RowSpan span;
    int anchor_row;
    bool anchor_on_top;
    std::vector<int> other_rows;  // sorted non-anchor member rows
};

// Members of `item` whose open trunk span (between their own row and the
// anchor row) strictly contains `row`.
long long members_spanning(const LaneItem& item, int row) {
    if (row <= item.span.s || row >= item.span.f) return 0;
    if (item.anchor_on_top) {
        // Spans (anchor, other): need other > row.
        auto it = std::upper_bound(item.other_rows.begin(), item.other_rows.end(), row);
        return item.other_rows.end() - it;
    }
    // Spans (other, anchor): need other < row.
    auto it = std::lower_bound(item.other_rows.begin(), item.other_rows.end(), row);
    return it - item.other_rows.begin();
}

// cost[a][b]: crossings when lane a sits nearer the spine than lane b.
// Connectors of the farther lane cross trunks of the nearer one.
std::vector<std::vector<long long>> lane_cost_matrix(const LanePacking& packing,
                                                     std::span<const BundleInterval> intervals) {
    const std::size_t lanes = packing.lane_count();
    std::vector<std::vector<LaneItem>> items(lanes);
    for (std::size_t l = 0; l < lanes; ++l) {
        for (std::size_t idx : packing.lanes[l]) {
            const BundleInterval& iv = intervals[idx];
            LaneItem item;
            item.span = iv.span();
            item.anchor_on_top = iv.direction == BundleDirection::outgoing;
            item.anchor_row = item.anchor_on_top ? iv.s : iv.f;
            item.other_rows = iv.member_rows;
            std::sort(item.other_rows.begin(), item.other_rows.end());
            items[l].push_back(std::move(item));
        }
        std::sort(items[l].begin(), items[l].end(),
                  [](const LaneItem& a, const LaneItem& b) { return a.span.s < b.span.s; });
    }

    auto hits = [&](std::size_t lane, int row) -> long long {
        const auto& lane_items = items[lane];
        auto it = std::upper_bound(lane_items.begin(), lane_items.end(), row,
                                   [](int r, const LaneItem& item) { return r < item.span.s; });
        if (it == lane_items.begin()) return 0;
        return members_spanning(*std::prev(it), row);
    };

    std::vector<std::vector<long long>> cost(lanes, std::vector<long long>(lanes, 0));
    for (std::size_t near = 0; near < lanes; ++near) {
        for (std::size_t far = 0; far < lanes; ++far) {
            if (near == far) continue;
            long long total = 0;
            for (const LaneItem& b : items[far]) {
                for (int r : b.other_rows) total += hits(near, r);
                total += static_cast<long long>(b.other_rows.size()) * hits(near, b.anchor_row);
            }
            cost[near][far] = total;
        }
    }
    return cost;
}

long long order_cost(const std::vector<std::vector<long long>>& cost,
                     const std::vector<std::size_t>& order) {
    long long total = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) total += cost[order[i]][order[j]];
    }
    return total;
}

}  // namespace

LanePacking pack_intervals(std::span<const RowSpan> spans) {
    std::vector<std::size_t> order(spans.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(spans[a].s, spans[a].f, a) < std::tie(spans[b].s, spans[b].f, b);
    });

    LanePacking packing;
    using Busy = std::pair<int, std::size_t>;  // (finish row, lane)
    std::priority_queue<Busy, std::vector<Busy>, std::greater<>> busy;
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> free_lanes;
    for (std::size_t idx : order) {
        const RowSpan& sp = spans[idx];
        while (!busy.empty() && busy.top().first < sp.s) {
            free_lanes.push(busy.top().second);
            busy.pop();
        }
        std::size_t lane;
        if (free_lanes.empty()) {
            lane = packing.lanes.size();
            packing.lanes.emplace_back();
        } else {
            lane = free_lanes.top();
            free_lanes.pop();
        }
        packing.lanes[lane].push_back(idx);
        busy.emplace(sp.f, lane);
    }
    return packing;
}

LanePacking pack_intervals(std::span<const BundleInterval> intervals) {
    std::vector<RowSpan> spans;
    spans.reserve(intervals.size());
    for (const BundleInterval& iv : intervals) spans.push_back(iv.span());
    return pack_intervals(spans);
}

std::vector<BundleInterval> extract_path_bundles(std::span<const VertexId> path, int path_index,
                                                 std::span<const Edge> transitive,
                                                 std::span<const int> y, Side side) {
    std::unordered_map<VertexId, std::size_t> local;
    local.reserve(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) local.emplace(path[i], i);

    std::vector<Edge> edges;
    for (const Edge& e : transitive) {
        if (local.contains(e.from) && local.contains(e.to)) edges.push_back(e);
    }
    const std::size_t k = path.size();
    std::vector<std::vector<std::size_t>> in_edges(k);
    std::vector<std::vector<std::size_t>> out_edges(k);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        out_edges[local.at(edges[i].from)].push_back(i);
        in_edges[local.at(edges[i].to)].push_back(i);
    }
    std::vector<int> in_deg(k);
    std::vector<int> out_deg(k);
    std::priority_queue<DegreeEntry, std::vector<DegreeEntry>, EntryLess> heap;
    for (std::size_t i = 0; i < k; ++i) {
        in_deg[i] = static_cast<int>(in_edges[i].size());
        out_deg[i] = static_cast<int>(out_edges[i].size());
        if (in_deg[i] > 0) heap.push({in_deg[i], BundleDirection::incoming, path[i]});
        if (out_deg[i] > 0) heap.push({out_deg[i], BundleDirection::outgoing, path[i]});
    }

    std::vector<bool> taken(edges.size(), false);
    std::vector<BundleInterval> out;
    while (!heap.empty()) {
        DegreeEntry top = heap.top();
        heap.pop();
        const std::size_t v = local.at(top.vertex);
        const bool incoming = top.direction == BundleDirection::incoming;
        int& current = incoming ? in_deg[v] : out_deg[v];
        if (current != top.degree || current == 0) continue;  // stale entry

        BundleInterval iv;
        iv.path_index = path_index;
        iv.anchor = top.vertex;
        iv.direction = top.direction;
        iv.side = side;
        for (std::size_t ei : incoming ? in_edges[v] : out_edges[v]) {
            if (taken[ei]) continue;
            taken[ei] = true;
            iv.members.push_back(edges[ei]);
            const std::size_t other = local.at(incoming ? edges[ei].from : edges[ei].to);
            int& other_deg = incoming ? out_deg[other] : in_deg[other];
            --other_deg;
            if (other_deg > 0) {
                heap.push({other_deg,
                           incoming ? BundleDirection::outgoing : BundleDirection::incoming,
                           path[other]});
            }
        }
        current = 0;
        std::sort(iv.members.begin(), iv.members.end());
        iv.s = y[static_cast<std::size_t>(iv.anchor)];
        iv.f = iv.s;
        for (const Edge& e : iv.members) {
            iv.member_rows.push_back(y[static_cast<std::size_t>(incoming ? e.from : e.to)]);
            for (VertexId w : {e.from, e.to}) {
                iv.s = std::min(iv.s, y[static_cast<std::size_t>(w)]);
                iv.f = std::max(iv.f, y[static_cast<std::size_t>(w)]);
            }
        }
        out.push_back(std::move(iv));
    }
    return out;
}

long long lane_order_cost(const LanePacking& packing, std::span<const BundleInterval> intervals) {
    std::vector<std::size_t> identity(packing.lane_count());
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    return order_cost(lane_cost_matrix(packing, intervals), identity);
}

LanePacking reorder_lanes(const LanePacking& packing, std::span<const BundleInterval> intervals) {
    const std::size_t lanes = packing.lane_count();
    if (lanes < 2) return packing;
    const auto cost = lane_cost_matrix(packing, intervals);

    std::vector<std::size_t> order(lanes);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::size_t> best = order;
    long long best_cost = order_cost(cost, order);

    if (lanes <= 6) {
        while (std::next_permutation(order.begin(), order.end())) {
            long long c = order_cost(cost, order);
            if (c < best_cost) {
                best_cost = c;
                best = order;
            }
        }
    } else {
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t i = 0; i + 1 < lanes; ++i) {
                std::size_t a = best[i];
                std::size_t b = best[i + 1];
                if (cost[b][a] < cost[a][b]) {
                    std::swap(best[i], best[i + 1]);
                    improved = true;
                }
            }
        }
    }

    LanePacking out;
    out.lanes.reserve(lanes);
    for (std::size_t l : best) out.lanes.push_back(packing.lanes[l]);
    return out;
}

TransitiveBundling bundle_transitive(const DiGraph& g, const PathDecomposition& d,
                                     const EdgeClassification& classification,
                                     const Layout& layout, bool reorder) {
    const int k = static_cast<int>(d.paths.size());
    TransitiveBundling result;
    result.layout = layout;
    result.packings.resize(static_cast<std::size_t>(k));
    Layout& out = result.layout;

    PathIndex idx = index_paths(g.vertex_count(), d);
    std::vector<std::vector<Edge>> per_path(static_cast<std::size_t>(k));
    for (const Edge& e : classification.transitive_edges) {
        per_path[static_cast<std::size_t>(idx.path_of[static_cast<std::size_t>(e.from)])]
            .push_back(e);
    }

    // Extract and pack per path; intervals of path p occupy a contiguous block.
    std::vector<std::size_t> first_interval(static_cast<std::size_t>(k) + 1, 0);
    for (int p = 0; p < k; ++p) {
        const Side side = p == k - 1 ? Side::right : Side::left;
        auto intervals = extract_path_bundles(d.paths[static_cast<std::size_t>(p)], p,
                                              per_path[static_cast<std::size_t>(p)], layout.y,
                                              side);
        LanePacking packing = pack_intervals(intervals);
        if (reorder) packing = reorder_lanes(packing, intervals);
        for (std::size_t lane = 0; lane < packing.lane_count(); ++lane) {
            for (std::size_t i : packing.lanes[lane]) intervals[i].lane = static_cast<int>(lane);
        }
        result.packings[static_cast<std::size_t>(p)] = std::move(packing);
        first_interval[static_cast<std::size_t>(p)] = result.intervals.size();
        for (auto& iv : intervals) result.intervals.push_back(std::move(iv));
    }
    first_interval[static_cast<std::size_t>(k)] = result.intervals.size();

    // Left lanes go directly before their spine, right lanes directly after.
    {
        const std::vector<int> spines = spine_columns(out);
        std::vector<std::vector<Column>> groups(out.columns.size() + 1);
        for (int p = 0; p < k; ++p) {
            const auto lanes = result.packings[static_cast<std::size_t>(p)].lane_count();
            if (lanes == 0) continue;
            const bool right = p == k - 1;
            const Column col{right ? ColumnKind::bundle_lane_right : ColumnKind::bundle_lane_left,
                             p};
            const int spine = spines[static_cast<std::size_t>(p)];
            groups[static_cast<std::size_t>(right ? spine + 1 : spine)].assign(lanes, col);
        }
        insert_column_groups(out, groups);
    }

    const std::vector<int> spines = spine_columns(out);
    int next_bundle_id = static_cast<int>(out.bundles.size());
    for (int p = 0; p < k; ++p) {
        const int spine = spines[static_cast<std::size_t>(p)];
        const bool right = p == k - 1;
        for (std::size_t i = first_interval[static_cast<std::size_t>(p)];
             i < first_interval[static_cast<std::size_t>(p) + 1]; ++i) {
            BundleInterval& iv = result.intervals[i];
            const int lane_x = right ? spine + 1 + iv.lane : spine - 1 - iv.lane;
            const int id = next_bundle_id++;
            for (const Edge& e : iv.members) {
                const int yu = out.y[static_cast<std::size_t>(e.from)];
                const int yv = out.y[static_cast<std::size_t>(e.to)];
                out.routes.push_back({e,
                                      EdgeCategory::transitive,
                                      {{spine, yu}, {lane_x, yu}, {lane_x, yv}, {spine, yv}},
                                      id});
            }
            out.bundles.push_back({id,
                                   iv.direction == BundleDirection::incoming
                                       ? BundleKind::transitive_in
                                       : BundleKind::transitive_out,
                                   iv.anchor, p, lane_x, iv.s, iv.f, iv.members});
        }
    }
    std::sort(out.routes.begin(), out.routes.end(),
              [](const EdgeRoute& a, const EdgeRoute& b) { return a.edge < b.edge; });
    return result;
}

}  // namespace pbf
