#include "pbf/io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace pbf {

namespace {

using Json = nlohmann::ordered_json;

Json edge_pair(const Edge& e) { return Json::array({e.from, e.to}); }

Edge pair_edge(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InputError("expected an [u, v] pair");
    return {j.at(0).get<VertexId>(), j.at(1).get<VertexId>()};
}

template <class T, class F>
T parse_enum(const Json& j, F&& from_string, const char* what) {
    auto v = from_string(j.get<std::string>());
    if (!v) throw InputError(std::string("unknown ") + what + " '" + j.get<std::string>() + "'");
    return *v;
}

std::optional<EdgeCategory> category_from_string(std::string_view s) {
    for (auto c : {EdgeCategory::path, EdgeCategory::transitive, EdgeCategory::cross}) {
        if (to_string(c) == s) return c;
    }
    return std::nullopt;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

LayoutDocument make_document(const PipelineResult& result, const PipelineOptions& options,
                             std::uint64_t seed) {
    LayoutDocument doc;
    doc.layout = result.layout;
    doc.metrics = result.metrics;
    doc.meta.seed = seed;
    doc.meta.toggles = options;
    doc.meta.reversed_edges = result.acyclic.reversed_edges;
    for (const VertexContact& c : result.contacts) {
        doc.meta.warnings.push_back("route of edge (" + std::to_string(c.edge.from) + "," +
                                    std::to_string(c.edge.to) + ") passes through vertex " +
                                    std::to_string(c.vertex));
    }
    return doc;
}

std::string render_json(const LayoutDocument& doc) {
    const Layout& l = doc.layout;
    Json root;
    Json vertices = Json::array();
    for (VertexId v = 0; v < l.vertex_count(); ++v) {
        const auto i = static_cast<std::size_t>(v);
        vertices.push_back({{"id", v},
                            {"x", l.x[i]},
                            {"y", l.y[i]},
                            {"path", l.path_of[i]},
                            {"order_in_path", l.order_in_path[i]}});
    }
    root["vertices"] = std::move(vertices);

    Json edges = Json::array();
    for (const EdgeRoute& r : l.routes) {
        Json route = Json::array();
        for (const Point& p : r.points) route.push_back(Json::array({p.x, p.y}));
        Json e = {{"u", r.edge.from},
                  {"v", r.edge.to},
                  {"category", std::string(to_string(r.category))},
                  {"route", std::move(route)}};
        if (r.bundle) e["bundle_id"] = *r.bundle;
        edges.push_back(std::move(e));
    }
    root["edges"] = std::move(edges);

    Json bundles = Json::array();
    for (const BundleRecord& b : l.bundles) {
        Json members = Json::array();
        for (const Edge& e : b.members) members.push_back(edge_pair(e));
        bundles.push_back({{"id", b.id},
                           {"kind", std::string(to_string(b.kind))},
                           {"anchor_or_target", b.anchor},
                           {"path", b.path},
                           {"lane", b.lane_x},
                           {"span", Json::array({b.s, b.f})},
                           {"members", std::move(members)}});
    }
    root["bundles"] = std::move(bundles);

    Json columns = Json::array();
    for (std::size_t i = 0; i < l.columns.size(); ++i) {
        columns.push_back({{"x", static_cast<int>(i)},
                           {"kind", std::string(to_string(l.columns[i].kind))},
                           {"path", l.columns[i].path}});
    }
    root["columns"] = std::move(columns);

    root["metrics"] = {{"crossings", doc.metrics.crossings},
                       {"bends", doc.metrics.bends},
                       {"width", doc.metrics.width},
                       {"height", doc.metrics.height},
                       {"area", doc.metrics.area}};

    Json reversed = Json::array();
    for (const Edge& e : doc.meta.reversed_edges) reversed.push_back(edge_pair(e));
    const PipelineOptions& t = doc.meta.toggles;
    root["meta"] = {{"seed", doc.meta.seed},
                    {"toggles",
                     {{"compact", t.compact},
                      {"bundle_transitive", t.bundle_transitive},
                      {"bundle_cross", t.bundle_cross},
                      {"reorder", t.reorder}}},
                    {"version", doc.meta.version},
                    {"reversed_edges", std::move(reversed)},
                    {"warnings", doc.meta.warnings}};
    return root.dump(2) + "\n";
}

LayoutDocument parse_layout_json(std::string_view text) {
    LayoutDocument doc;
    try {
        const Json root = Json::parse(text);
        Layout& l = doc.layout;
        const Json& vertices = root.at("vertices");
        const std::size_t n = vertices.size();
        l.x.resize(n);
        l.y.resize(n);
        l.path_of.resize(n);
        l.order_in_path.resize(n);
        for (const Json& v : vertices) {
            const int id = v.at("id").get<int>();
            if (id < 0 || static_cast<std::size_t>(id) >= n) {
                throw InputError("vertex id " + std::to_string(id) + " out of range");
            }
            const auto i = static_cast<std::size_t>(id);
            l.x[i] = v.at("x").get<int>();
            l.y[i] = v.at("y").get<int>();
            l.path_of[i] = v.at("path").get<int>();
            l.order_in_path[i] = v.at("order_in_path").get<int>();
        }
        for (const Json& e : root.at("edges")) {
            EdgeRoute r;
            r.edge = {e.at("u").get<VertexId>(), e.at("v").get<VertexId>()};
            r.category = parse_enum<EdgeCategory>(e.at("category"), category_from_string,
                                                  "edge category");
            for (const Json& p : e.at("route")) r.points.push_back(Point{p.at(0), p.at(1)});
            if (e.contains("bundle_id")) r.bundle = e.at("bundle_id").get<int>();
            l.routes.push_back(std::move(r));
        }
        std::sort(l.routes.begin(), l.routes.end(),
                  [](const EdgeRoute& a, const EdgeRoute& b) { return a.edge < b.edge; });
        for (const Json& b : root.at("bundles")) {
            BundleRecord rec;
            rec.id = b.at("id").get<int>();
            rec.kind = parse_enum<BundleKind>(
                b.at("kind"), [](std::string_view s) { return bundle_kind_from_string(s); },
                "bundle kind");
            rec.anchor = b.at("anchor_or_target").get<VertexId>();
            rec.path = b.at("path").get<int>();
            rec.lane_x = b.at("lane").get<int>();
            rec.s = b.at("span").at(0).get<int>();
            rec.f = b.at("span").at(1).get<int>();
            for (const Json& m : b.at("members")) rec.members.push_back(pair_edge(m));
            l.bundles.push_back(std::move(rec));
        }
        for (const Json& c : root.at("columns")) {
            l.columns.push_back(
                {parse_enum<ColumnKind>(
                     c.at("kind"), [](std::string_view s) { return column_kind_from_string(s); },
                     "column kind"),
                 c.at("path").get<int>()});
        }
        const Json& m = root.at("metrics");
        doc.metrics = {m.at("crossings"), m.at("bends"), m.at("width"), m.at("height"),
                       m.at("area")};
        const Json& meta = root.at("meta");
        doc.meta.seed = meta.at("seed").get<std::uint64_t>();
        const Json& t = meta.at("toggles");
        doc.meta.toggles = {t.at("compact"), t.at("bundle_transitive"), t.at("bundle_cross"),
                            t.at("reorder")};
        doc.meta.version = meta.at("version").get<std::string>();
        for (const Json& e : meta.at("reversed_edges")) doc.meta.reversed_edges.push_back(pair_edge(e));
        doc.meta.warnings = meta.at("warnings").get<std::vector<std::string>>();
    } catch (const Json::exception& e) {
        throw InputError(std::string("layout JSON: ") + e.what());
    }
    return doc;
}

std::string render_svg(const Layout& layout, const SvgOptions& options) {
    int max_x = 0;
    int max_y = 0;
    for (VertexId v = 0; v < layout.vertex_count(); ++v) {
        max_x = std::max(max_x, layout.x[static_cast<std::size_t>(v)]);
        max_y = std::max(max_y, layout.y[static_cast<std::size_t>(v)]);
    }
    for (const EdgeRoute& r : layout.routes) {
        for (const Point& p : r.points) {
            max_x = std::max(max_x, p.x);
            max_y = std::max(max_y, p.y);
        }
    }
    const int pitch = options.pitch;
    const int margin = pitch;
    const int width = max_x * pitch + 2 * margin;
    const int height = max_y * pitch + 2 * margin;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<style>\n"
           "polyline { fill: none; stroke-width: 1.5; vector-effect: non-scaling-stroke; }\n"
           ".path-edge { stroke: #222222; }\n"
           ".transitive-edge { stroke: #1f77b4; }\n"
           ".cross-edge { stroke: #d62728; }\n"
           ".node { fill: #ffffff; stroke: #222222; stroke-width: 1.5; "
           "vector-effect: non-scaling-stroke; }\n"
           "</style>\n";
    out << "<g transform=\"translate(" << margin << ' ' << margin << ") scale(" << pitch
        << ")\">\n";
    for (const EdgeRoute& r : layout.routes) {
        out << "<polyline class=\"" << to_string(r.category) << "-edge\" data-u=\""
            << r.edge.from << "\" data-v=\"" << r.edge.to << "\" points=\"";
        for (std::size_t i = 0; i < r.points.size(); ++i) {
            if (i > 0) out << ' ';
            out << r.points[i].x << ',' << r.points[i].y;
        }
        out << "\"/>\n";
    }
    const std::string radius = format_number(options.node_radius_px / pitch);
    for (VertexId v = 0; v < layout.vertex_count(); ++v) {
        const Point p = layout.position(v);
        out << "<circle class=\"node\" data-id=\"" << v << "\" cx=\"" << p.x << "\" cy=\""
            << p.y << "\" r=\"" << radius << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string render_metrics(const MetricsReport& m) {
    std::ostringstream out;
    out << "crossings=" << m.crossings << '\n'
        << "bends=" << m.bends << '\n'
        << "width=" << m.width << '\n'
        << "height=" << m.height << '\n'
        << "area=" << m.area << '\n';
    return out.str();
}

}  // namespace pbf
