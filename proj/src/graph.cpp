#include "pbf/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <queue>
#include <sstream>

namespace pbf {

namespace {

void build_csr(int n, std::span<const Edge> edges, bool by_source,
               std::vector<std::size_t>& offsets, std::vector<VertexId>& targets) {
    offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : edges) {
        ++offsets[static_cast<std::size_t>(by_source ? e.from : e.to) + 1];
    }
    for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
    targets.resize(edges.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    // Edges are sorted by (from, to), so both lists come out ascending.
    for (const Edge& e : edges) {
        if (by_source) {
            targets[cursor[static_cast<std::size_t>(e.from)]++] = e.to;
        } else {
            targets[cursor[static_cast<std::size_t>(e.to)]++] = e.from;
        }
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_int(std::string_view token, long long& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& msg) {
    throw InputError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

DiGraph::DiGraph(int vertex_count, std::vector<Edge> edges, Duplicates policy)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw InputError("negative vertex count");
    for (const Edge& e : edges_) {
        if (e.from < 0 || e.from >= vertex_count_ || e.to < 0 || e.to >= vertex_count_) {
            throw InputError("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                             ") has an id out of range 0.." + std::to_string(vertex_count_ - 1));
        }
        if (e.from == e.to) {
            throw InputError("self-loop at vertex " + std::to_string(e.from));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        if (policy == Duplicates::reject) {
            throw InputError("duplicate edge (" + std::to_string(dup->from) + "," +
                             std::to_string(dup->to) + ")");
        }
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }
    build_csr(vertex_count_, edges_, true, out_offsets_, out_targets_);
    build_csr(vertex_count_, edges_, false, in_offsets_, in_sources_);
}

std::span<const VertexId> DiGraph::successors(VertexId v) const {
    auto i = static_cast<std::size_t>(v);
    return std::span<const VertexId>(out_targets_).subspan(out_offsets_[i],
                                                           out_offsets_[i + 1] - out_offsets_[i]);
}

std::span<const VertexId> DiGraph::predecessors(VertexId v) const {
    auto i = static_cast<std::size_t>(v);
    return std::span<const VertexId>(in_sources_).subspan(in_offsets_[i],
                                                          in_offsets_[i + 1] - in_offsets_[i]);
}

bool DiGraph::has_edge(VertexId from, VertexId to) const {
    if (from < 0 || from >= vertex_count_) return false;
    auto succ = successors(from);
    return std::binary_search(succ.begin(), succ.end(), to);
}

DiGraph parse_graph(std::string_view text, DiGraph::Duplicates policy) {
    long long n = -1;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        auto fields = split_fields(line);
        if (n < 0) {
            if (fields.size() != 1 || !parse_int(fields[0], n) || n < 0) {
                fail_line(line_no, "expected a vertex count, got '" + std::string(line) + "'");
            }
            continue;
        }
        long long u = 0;
        long long v = 0;
        if (fields.size() != 2 || !parse_int(fields[0], u) || !parse_int(fields[1], v)) {
            fail_line(line_no, "expected 'u v', got '" + std::string(line) + "'");
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            fail_line(line_no, "id out of range 0.." + std::to_string(n - 1));
        }
        if (u == v) fail_line(line_no, "self-loop at vertex " + std::to_string(u));
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    if (n < 0) throw InputError("missing vertex count line");
    return DiGraph(static_cast<int>(n), std::move(edges), policy);
}

std::string serialize_graph(const DiGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.from);
        out += ' ';
        out += std::to_string(e.to);
        out += '\n';
    }
    return out;
}

CycleRemovalResult remove_cycles(const DiGraph& g) {
    enum class Color : unsigned char { white, gray, black };
    const int n = g.vertex_count();
    std::vector<Color> color(static_cast<std::size_t>(n), Color::white);
    std::vector<Edge> reversed;

    // Iterative DFS: stack of (vertex, next successor index).
    std::vector<std::pair<VertexId, std::size_t>> stack;
    for (VertexId root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] != Color::white) continue;
        color[static_cast<std::size_t>(root)] = Color::gray;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            auto succ = g.successors(v);
            if (next == succ.size()) {
                color[static_cast<std::size_t>(v)] = Color::black;
                stack.pop_back();
                continue;
            }
            VertexId w = succ[next++];
            switch (color[static_cast<std::size_t>(w)]) {
                case Color::gray:
                    reversed.push_back({v, w});
                    break;
                case Color::white:
                    color[static_cast<std::size_t>(w)] = Color::gray;
                    stack.emplace_back(w, 0);
                    break;
                case Color::black:
                    break;
            }
        }
    }

    std::sort(reversed.begin(), reversed.end());
    std::vector<Edge> dag_edges;
    dag_edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        if (std::binary_search(reversed.begin(), reversed.end(), e)) {
            dag_edges.push_back({e.to, e.from});
        } else {
            dag_edges.push_back(e);
        }
    }
    return {DiGraph(n, std::move(dag_edges), DiGraph::Duplicates::merge), std::move(reversed)};
}

TopoOrder topo_sort(const DiGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> pending(n);
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        pending[static_cast<std::size_t>(v)] = g.in_degree(v);
        if (pending[static_cast<std::size_t>(v)] == 0) ready.push(v);
    }

    TopoOrder t;
    t.rank.assign(n, -1);
    t.order.reserve(n);
    while (!ready.empty()) {
        VertexId v = ready.top();
        ready.pop();
        t.rank[static_cast<std::size_t>(v)] = static_cast<int>(t.order.size());
        t.order.push_back(v);
        for (VertexId w : g.successors(v)) {
            if (--pending[static_cast<std::size_t>(w)] == 0) ready.push(w);
        }
    }
    if (t.order.size() == n) return t;

    // Every unranked vertex has an unranked predecessor; walking backwards
    // from any of them must revisit a vertex, and that vertex is on a cycle.
    VertexId v = 0;
    while (t.rank[static_cast<std::size_t>(v)] >= 0) ++v;
    std::vector<bool> seen(n, false);
    while (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        for (VertexId u : g.predecessors(v)) {
            if (t.rank[static_cast<std::size_t>(u)] < 0) {
                v = u;
                break;
            }
        }
    }
    throw CycleError(v, "graph has a directed cycle through vertex " + std::to_string(v));
}

std::vector<int> longest_path_ending_at(const DiGraph& g) {
    TopoOrder t = topo_sort(g);
    std::vector<int> len(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : t.order) {
        for (VertexId u : g.predecessors(v)) {
            len[static_cast<std::size_t>(v)] =
                std::max(len[static_cast<std::size_t>(v)], len[static_cast<std::size_t>(u)] + 1);
        }
    }
    return len;
}

}  // namespace pbf
