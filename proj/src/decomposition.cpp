#include "pbf/decomposition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace pbf {

namespace {

template <class T>
std::string join(const std::vector<T>& items, const auto& fmt) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ", ";
        out += fmt(items[i]);
    }
    return out;
}

// Maximum matching in the split graph: left copy of u joined to right copy
// of v for every edge (u, v). Returns match_left[u] = v or -1.
std::vector<VertexId> hopcroft_karp(const DiGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<VertexId> match_left(n, -1);
    std::vector<VertexId> match_right(n, -1);
    std::vector<int> dist(n);
    std::vector<std::size_t> cursor(n);
    std::vector<VertexId> queue;
    queue.reserve(n);

    // Greedy warm start in ascending id order.
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v : g.successors(u)) {
            if (match_right[static_cast<std::size_t>(v)] < 0) {
                match_left[static_cast<std::size_t>(u)] = v;
                match_right[static_cast<std::size_t>(v)] = u;
                break;
            }
        }
    }

    std::vector<VertexId> left_stack;
    std::vector<VertexId> right_stack;
    for (;;) {
        // BFS layering from all free left vertices.
        queue.clear();
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            if (match_left[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = 0;
                queue.push_back(u);
            } else {
                dist[static_cast<std::size_t>(u)] = kInf;
            }
        }
        int free_layer = kInf;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            VertexId u = queue[head];
            int du = dist[static_cast<std::size_t>(u)];
            if (du >= free_layer) continue;
            for (VertexId v : g.successors(u)) {
                VertexId w = match_right[static_cast<std::size_t>(v)];
                if (w < 0) {
                    free_layer = std::min(free_layer, du + 1);
                } else if (dist[static_cast<std::size_t>(w)] == kInf) {
                    dist[static_cast<std::size_t>(w)] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        if (free_layer == kInf) break;

        // Vertex-disjoint shortest augmenting paths, explored in ascending id order.
        std::fill(cursor.begin(), cursor.end(), 0);
        for (VertexId root = 0; root < g.vertex_count(); ++root) {
            if (match_left[static_cast<std::size_t>(root)] >= 0) continue;
            left_stack.assign(1, root);
            right_stack.clear();
            bool found = false;
            while (!left_stack.empty()) {
                VertexId x = left_stack.back();
                auto succ = g.successors(x);
                std::size_t& next = cursor[static_cast<std::size_t>(x)];
                if (next == succ.size()) {
                    dist[static_cast<std::size_t>(x)] = kInf;
                    left_stack.pop_back();
                    if (!right_stack.empty()) right_stack.pop_back();
                    continue;
                }
                VertexId v = succ[next++];
                VertexId w = match_right[static_cast<std::size_t>(v)];
                int step = dist[static_cast<std::size_t>(x)] + 1;
                if (w < 0) {
                    if (step == free_layer) {
                        right_stack.push_back(v);
                        found = true;
                        break;
                    }
                } else if (dist[static_cast<std::size_t>(w)] == step) {
                    right_stack.push_back(v);
                    left_stack.push_back(w);
                }
            }
            if (!found) continue;
            for (std::size_t i = 0; i < left_stack.size(); ++i) {
                match_left[static_cast<std::size_t>(left_stack[i])] = right_stack[i];
                match_right[static_cast<std::size_t>(right_stack[i])] = left_stack[i];
            }
        }
    }
    return match_left;
}

}  // namespace

PathIndex index_paths(int vertex_count, const PathDecomposition& d) {
    PathIndex idx;
    idx.path_of.assign(static_cast<std::size_t>(vertex_count), -1);
    idx.position.assign(static_cast<std::size_t>(vertex_count), -1);
    for (std::size_t p = 0; p < d.paths.size(); ++p) {
        for (std::size_t i = 0; i < d.paths[p].size(); ++i) {
            VertexId v = d.paths[p][i];
            idx.path_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
            idx.position[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    return idx;
}

std::string DecompositionReport::describe() const {
    auto id = [](VertexId v) { return std::to_string(v); };
    auto edge = [](const Edge& e) {
        return "(" + std::to_string(e.from) + "," + std::to_string(e.to) + ")";
    };
    std::vector<std::string> parts;
    if (!missing.empty()) parts.push_back("missing vertices: " + join(missing, id));
    if (!duplicated.empty()) parts.push_back("duplicated vertices: " + join(duplicated, id));
    if (!out_of_range.empty()) parts.push_back("ids out of range: " + join(out_of_range, id));
    if (!non_edges.empty()) parts.push_back("not an edge: " + join(non_edges, edge));
    if (empty_paths > 0) parts.push_back(std::to_string(empty_paths) + " empty path(s)");
    if (parts.empty()) return "ok";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += "; ";
        out += parts[i];
    }
    return out;
}

DecompositionReport validate_decomposition(const DiGraph& g, const PathDecomposition& d) {
    DecompositionReport report;
    const int n = g.vertex_count();
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const auto& path : d.paths) {
        if (path.empty()) ++report.empty_paths;
        for (std::size_t i = 0; i < path.size(); ++i) {
            VertexId v = path[i];
            if (v < 0 || v >= n) {
                report.out_of_range.push_back(v);
                continue;
            }
            if (++seen[static_cast<std::size_t>(v)] == 2) report.duplicated.push_back(v);
            if (i + 1 < path.size() && !g.has_edge(v, path[i + 1])) {
                report.non_edges.push_back({v, path[i + 1]});
            }
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (seen[static_cast<std::size_t>(v)] == 0) report.missing.push_back(v);
    }
    std::sort(report.duplicated.begin(), report.duplicated.end());
    return report;
}

std::string_view to_string(EdgeCategory c) {
    switch (c) {
        case EdgeCategory::path: return "path";
        case EdgeCategory::transitive: return "transitive";
        case EdgeCategory::cross: return "cross";
    }
    return "?";
}

EdgeClassification classify_edges(const DiGraph& g, const PathDecomposition& d) {
    PathIndex idx = index_paths(g.vertex_count(), d);
    EdgeClassification c;
    for (const Edge& e : g.edges()) {
        auto u = static_cast<std::size_t>(e.from);
        auto v = static_cast<std::size_t>(e.to);
        if (idx.path_of[u] != idx.path_of[v]) {
            c.cross_edges.push_back(e);
        } else if (idx.position[v] == idx.position[u] + 1) {
            c.path_edges.push_back(e);
        } else {
            c.transitive_edges.push_back(e);
        }
    }
    return c;
}

PathDecomposition min_path_cover(const DiGraph& g) {
    TopoOrder t = topo_sort(g);
    std::vector<VertexId> next = hopcroft_karp(g);
    std::vector<bool> has_pred(static_cast<std::size_t>(g.vertex_count()), false);
    for (VertexId v : next) {
        if (v >= 0) has_pred[static_cast<std::size_t>(v)] = true;
    }

    PathDecomposition d;
    for (VertexId start : t.order) {
        if (has_pred[static_cast<std::size_t>(start)]) continue;
        auto& path = d.paths.emplace_back();
        for (VertexId v = start; v >= 0; v = next[static_cast<std::size_t>(v)]) {
            path.push_back(v);
        }
    }
    return d;
}

PathDecomposition parse_decomposition(std::string_view text, const DiGraph& g) {
    PathDecomposition d;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::vector<VertexId> path;
        std::size_t i = 0;
        bool comment = false;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i == line.size()) break;
            if (line[i] == '#') {
                comment = path.empty();
                if (!comment) {
                    throw InputError("paths line " + std::to_string(line_no) +
                                     ": '#' must start a line");
                }
                break;
            }
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
            long long value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
            if (ec != std::errc{} || ptr != line.data() + j ||
                value > std::numeric_limits<int>::max() || value < 0) {
                throw InputError("paths line " + std::to_string(line_no) + ": bad vertex id '" +
                                 std::string(line.substr(i, j - i)) + "'");
            }
            path.push_back(static_cast<VertexId>(value));
            i = j;
        }
        if (!comment && !path.empty()) d.paths.push_back(std::move(path));
    }

    DecompositionReport report = validate_decomposition(g, d);
    if (!report.ok()) throw InputError("invalid path decomposition: " + report.describe());
    return d;
}

std::string serialize_decomposition(const PathDecomposition& d) {
    std::ostringstream out;
    for (const auto& path : d.paths) {
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (i > 0) out << ' ';
            out << path[i];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace pbf
