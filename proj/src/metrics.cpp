#include "pbf/metrics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace pbf {

namespace {

class Fenwick {
public:
    explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}

    void add(std::size_t i, int delta) {
        for (++i; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
    }
    // Sum over [0, i).
    std::int64_t prefix(std::size_t i) const {
        std::int64_t s = 0;
        for (; i > 0; i -= i & (~i + 1)) s += tree_[i];
        return s;
    }
    // Sum over the open index range (lo, hi).
    std::int64_t between(std::size_t lo, std::size_t hi) const {
        if (hi <= lo + 1) return 0;
        return prefix(hi) - prefix(lo + 1);
    }

private:
    std::vector<std::int64_t> tree_;
};

class Compressor {
public:
    void push(int v) { values_.push_back(v); }
    void finish() {
        std::sort(values_.begin(), values_.end());
        values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    }
    std::size_t operator()(int v) const {
        return static_cast<std::size_t>(std::lower_bound(values_.begin(), values_.end(), v) -
                                        values_.begin());
    }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<int> values_;
};

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

// Unit-height diagonal: top point at row `band`, bottom point at band + 1.
struct Diagonal {
    int band;
    int top_x;
    int bottom_x;
};

std::int64_t count_axis_pairs(std::span<const Segment> horizontal,
                              std::span<const Segment> vertical, const Compressor& ys) {
    // Sweep x: horizontals strictly left and right of a vertical are active.
    enum : int { remove = 0, query = 1, insert = 2 };
    std::vector<std::tuple<int, int, std::size_t>> events;
    events.reserve(horizontal.size() * 2 + vertical.size());
    for (std::size_t i = 0; i < horizontal.size(); ++i) {
        events.emplace_back(horizontal[i].p.x, insert, i);
        events.emplace_back(horizontal[i].q.x, remove, i);
    }
    for (std::size_t i = 0; i < vertical.size(); ++i) events.emplace_back(vertical[i].p.x, query, i);
    std::sort(events.begin(), events.end());

    Fenwick rows(ys.size());
    std::int64_t total = 0;
    for (const auto& [x, kind, i] : events) {
        if (kind == query) {
            total += rows.between(ys(vertical[i].p.y), ys(vertical[i].q.y));
        } else {
            rows.add(ys(horizontal[i].p.y), kind == insert ? 1 : -1);
        }
    }
    return total;
}

std::int64_t count_diagonal_vertical_pairs(std::span<const Diagonal> diagonals,
                                           std::span<const Segment> vertical,
                                           const Compressor& xs) {
    // Sweep bands: a vertical spans band b when p.y <= b < q.y.
    enum : int { remove = 0, insert = 1, query = 2 };
    std::vector<std::tuple<int, int, std::size_t>> events;
    events.reserve(vertical.size() * 2 + diagonals.size());
    for (std::size_t i = 0; i < vertical.size(); ++i) {
        events.emplace_back(vertical[i].p.y, insert, i);
        events.emplace_back(vertical[i].q.y, remove, i);
    }
    for (std::size_t i = 0; i < diagonals.size(); ++i) {
        events.emplace_back(diagonals[i].band, query, i);
    }
    std::sort(events.begin(), events.end());

    Fenwick columns(xs.size());
    std::int64_t total = 0;
    for (const auto& [band, kind, i] : events) {
        if (kind == query) {
            const Diagonal& d = diagonals[i];
            const auto [lo, hi] = std::minmax(d.top_x, d.bottom_x);
            total += columns.between(xs(lo), xs(hi));
        } else {
            columns.add(xs(vertical[i].p.x), kind == insert ? 1 : -1);
        }
    }
    return total;
}

std::int64_t count_diagonal_pairs(std::vector<Diagonal> diagonals, const Compressor& xs) {
    // Two diagonals of one band cross iff their order flips strictly
    // between the top and bottom rows.
    std::sort(diagonals.begin(), diagonals.end(), [](const Diagonal& a, const Diagonal& b) {
        return std::tie(a.band, a.top_x, a.bottom_x) < std::tie(b.band, b.top_x, b.bottom_x);
    });
    Fenwick bottoms(xs.size());
    std::int64_t total = 0;
    std::size_t band_start = 0;
    std::int64_t inserted = 0;
    std::size_t i = 0;
    while (i < diagonals.size()) {
        if (diagonals[i].band != diagonals[band_start].band) {
            for (std::size_t j = band_start; j < i; ++j) bottoms.add(xs(diagonals[j].bottom_x), -1);
            band_start = i;
            inserted = 0;
        }
        std::size_t group_end = i;
        while (group_end < diagonals.size() && diagonals[group_end].band == diagonals[i].band &&
               diagonals[group_end].top_x == diagonals[i].top_x) {
            ++group_end;
        }
        for (std::size_t j = i; j < group_end; ++j) {
            total += inserted - bottoms.prefix(xs(diagonals[j].bottom_x) + 1);
        }
        for (std::size_t j = i; j < group_end; ++j) {
            bottoms.add(xs(diagonals[j].bottom_x), 1);
            ++inserted;
        }
        i = group_end;
    }
    return total;
}

}  // namespace

std::vector<Segment> segments_of(const Layout& layout) {
    std::vector<Segment> out;
    for (std::size_t r = 0; r < layout.routes.size(); ++r) {
        const auto& pts = layout.routes[r].points;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            if (pts[i] != pts[i + 1]) out.push_back({pts[i], pts[i + 1], r});
        }
    }
    return out;
}

std::int64_t orientation(Point a, Point b, Point c) {
    return static_cast<std::int64_t>(b.x - a.x) * (c.y - a.y) -
           static_cast<std::int64_t>(b.y - a.y) * (c.x - a.x);
}

bool properly_intersect(const Segment& a, const Segment& b) {
    const int o1 = sign(orientation(a.p, a.q, b.p));
    const int o2 = sign(orientation(a.p, a.q, b.q));
    const int o3 = sign(orientation(b.p, b.q, a.p));
    const int o4 = sign(orientation(b.p, b.q, a.q));
    return o1 * o2 < 0 && o3 * o4 < 0;
}

std::int64_t count_crossings(const Layout& layout) {
    const std::vector<Segment> segments = segments_of(layout);
    std::vector<Segment> horizontal;
    std::vector<Segment> vertical;
    std::vector<Diagonal> diagonals;
    std::vector<Segment> general;
    Compressor xs;
    Compressor ys;
    for (Segment s : segments) {
        if (s.p.y > s.q.y || (s.p.y == s.q.y && s.p.x > s.q.x)) std::swap(s.p, s.q);
        xs.push(s.p.x);
        xs.push(s.q.x);
        ys.push(s.p.y);
        ys.push(s.q.y);
        if (s.p.y == s.q.y) {
            horizontal.push_back(s);
        } else if (s.p.x == s.q.x) {
            vertical.push_back(s);
        } else if (s.q.y - s.p.y == 1) {
            diagonals.push_back({s.p.y, s.p.x, s.q.x});
        } else {
            general.push_back(s);
        }
    }
    xs.finish();
    ys.finish();

    std::int64_t total = count_axis_pairs(horizontal, vertical, ys) +
                         count_diagonal_vertical_pairs(diagonals, vertical, xs) +
                         count_diagonal_pairs(diagonals, xs);
    for (std::size_t i = 0; i < general.size(); ++i) {
        for (const Segment& other : segments) {
            if (properly_intersect(general[i], other)) ++total;
        }
        // Pairs of general segments were counted from both sides.
        for (std::size_t j = 0; j < general.size(); ++j) {
            if (j != i && properly_intersect(general[i], general[j])) {
                if (j < i) --total;
            }
        }
    }

    // The sweeps also count pieces of one route crossing each other.
    std::size_t begin = 0;
    while (begin < segments.size()) {
        std::size_t end = begin;
        while (end < segments.size() && segments[end].owner == segments[begin].owner) ++end;
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = i + 1; j < end; ++j) {
                if (properly_intersect(segments[i], segments[j])) --total;
            }
        }
        begin = end;
    }
    return total;
}

int bends_of(std::span<const Point> polyline) {
    std::vector<Point> pts;
    for (const Point& p : polyline) {
        if (pts.empty() || pts.back() != p) pts.push_back(p);
    }
    auto direction = [](Point a, Point b) {
        int dx = b.x - a.x;
        int dy = b.y - a.y;
        int g = std::gcd(dx, dy);
        return Point{dx / g, dy / g};
    };
    int bends = 0;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        if (direction(pts[i - 1], pts[i]) != direction(pts[i], pts[i + 1])) ++bends;
    }
    return bends;
}

std::int64_t count_bends(const Layout& layout) {
    std::int64_t total = 0;
    for (const EdgeRoute& r : layout.routes) total += bends_of(r.points);
    return total;
}

MetricsReport measure(const Layout& layout) {
    std::vector<int> xs(layout.x.begin(), layout.x.end());
    std::vector<int> ys(layout.y.begin(), layout.y.end());
    for (const EdgeRoute& r : layout.routes) {
        for (const Point& p : r.points) {
            xs.push_back(p.x);
            ys.push_back(p.y);
        }
    }
    auto distinct = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        return static_cast<std::int64_t>(std::unique(v.begin(), v.end()) - v.begin());
    };
    MetricsReport m;
    m.crossings = count_crossings(layout);
    m.bends = count_bends(layout);
    m.width = distinct(xs);
    m.height = std::max<std::int64_t>(distinct(ys) - 1, 0);
    m.area = m.width * m.height;
    return m;
}

std::vector<VertexContact> find_vertex_contacts(const Layout& layout) {
    std::map<int, std::vector<std::pair<int, VertexId>>> by_column;
    std::map<int, std::vector<std::pair<int, VertexId>>> by_row;
    std::map<Point, std::vector<VertexId>> at;
    for (VertexId v = 0; v < layout.vertex_count(); ++v) {
        const Point p = layout.position(v);
        by_column[p.x].emplace_back(p.y, v);
        by_row[p.y].emplace_back(p.x, v);
        at[p].push_back(v);
    }
    for (auto* index : {&by_column, &by_row}) {
        for (auto& [key, list] : *index) std::sort(list.begin(), list.end());
    }

    std::set<VertexContact> contacts;
    auto report = [&](VertexId v, const Edge& e) {
        if (v != e.from && v != e.to) contacts.insert({v, e});
    };
    auto scan = [&](const auto& index, int key, int lo, int hi, const Edge& e) {
        auto it = index.find(key);
        if (it == index.end()) return;
        const auto& list = it->second;
        auto first = std::lower_bound(list.begin(), list.end(), std::pair{lo, -1});
        for (; first != list.end() && first->first <= hi; ++first) report(first->second, e);
    };
    for (const EdgeRoute& r : layout.routes) {
        const auto& pts = r.points;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const Point a = pts[i];
            const Point b = pts[i + 1];
            if (a.x == b.x) {
                scan(by_column, a.x, std::min(a.y, b.y), std::max(a.y, b.y), r.edge);
            } else if (a.y == b.y) {
                scan(by_row, a.y, std::min(a.x, b.x), std::max(a.x, b.x), r.edge);
            } else {
                const int g = std::gcd(b.x - a.x, b.y - a.y);
                const int sx = (b.x - a.x) / g;
                const int sy = (b.y - a.y) / g;
                for (int step = 0; step <= g; ++step) {
                    auto it = at.find({a.x + sx * step, a.y + sy * step});
                    if (it == at.end()) continue;
                    for (VertexId v : it->second) report(v, r.edge);
                }
            }
        }
    }
    return {contacts.begin(), contacts.end()};
}

}  // namespace pbf
