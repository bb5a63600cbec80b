#include "pbf/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "pbf/bundling.hpp"
#include "pbf/generator.hpp"
#include "pbf/routing.hpp"

namespace pbf {

namespace {

template <class F>
auto stage(const char* name, F&& f) {
    try {
        return f();
    } catch (const InvariantError& e) {
        throw InvariantError(std::string(name) + ": " + e.what());
    } catch (const InputError& e) {
        throw InputError(std::string(name) + ": " + e.what());
    }
}

std::string edge_name(const Edge& e) {
    return "(" + std::to_string(e.from) + "," + std::to_string(e.to) + ")";
}

void check_routes(const DiGraph& dag, const EdgeClassification& c, const Layout& l,
                  bool transitive_drawn) {
    auto expect_route = [&](const Edge& e) -> const EdgeRoute& {
        const EdgeRoute* r = l.find_route(e);
        if (r == nullptr) throw InvariantError("edge " + edge_name(e) + " has no route");
        if (r->points.size() < 2 || r->points.front() != l.position(e.from) ||
            r->points.back() != l.position(e.to)) {
            throw InvariantError("route of " + edge_name(e) + " does not join its endpoints");
        }
        return *r;
    };
    for (const Edge& e : c.path_edges) expect_route(e);
    for (const Edge& e : c.cross_edges) {
        const EdgeRoute& r = expect_route(e);
        const int d = l.y[static_cast<std::size_t>(e.to)] - l.y[static_cast<std::size_t>(e.from)];
        if (bends_of(r.points) != required_bends(d)) {
            throw InvariantError("cross edge " + edge_name(e) + " at distance " +
                                 std::to_string(d) + " has " +
                                 std::to_string(bends_of(r.points)) + " bends");
        }
    }
    for (const Edge& e : c.transitive_edges) {
        if (transitive_drawn) {
            expect_route(e);
        } else if (l.find_route(e) != nullptr) {
            throw InvariantError("hidden transitive edge " + edge_name(e) + " has a route");
        }
    }
    const std::size_t drawn = c.path_edges.size() + c.cross_edges.size() +
                              (transitive_drawn ? c.transitive_edges.size() : 0);
    if (l.routes.size() != drawn || dag.edge_count() != c.path_edges.size() +
                                                            c.cross_edges.size() +
                                                            c.transitive_edges.size()) {
        throw InvariantError("route set does not match the edge classification");
    }
}

}  // namespace

PipelineResult run_pipeline(const DiGraph& g, const std::optional<PathDecomposition>& paths,
                            const PipelineOptions& options) {
    PipelineResult r;
    r.acyclic = stage("cycle removal", [&] { return remove_cycles(g); });
    const DiGraph& dag = r.acyclic.dag;
    const TopoOrder order = stage("topological sort", [&] { return topo_sort(dag); });
    r.decomposition = stage("decomposition", [&] {
        if (!paths) return min_path_cover(dag);
        DecompositionReport report = validate_decomposition(dag, *paths);
        if (!report.ok()) throw InputError("invalid path decomposition: " + report.describe());
        return *paths;
    });
    r.classification = classify_edges(dag, r.decomposition);

    Layout layout = stage("initial layout",
                          [&] { return initial_layout(dag, r.decomposition, order); });
    if (options.compact) {
        layout = stage("compaction", [&] {
            Layout c = compact(dag, layout);
            if (auto v = assert_properties(dag, c)) throw InvariantError(v->message);
            return c;
        });
    }
    if (options.bundle_transitive) {
        layout = stage("transitive bundling", [&] {
            return bundle_transitive(dag, r.decomposition, r.classification, layout,
                                     options.reorder)
                .layout;
        });
    }
    layout = stage("cross routing", [&] {
        CrossRouting routed = route_cross_edges(layout, r.classification);
        if (!options.bundle_cross) return std::move(routed.layout);
        return bundle_cross_edges(routed.layout, routed.routes).layout;
    });
    stage("self-check", [&] {
        check_routes(dag, r.classification, layout, options.bundle_transitive);
        return 0;
    });

    r.layout = std::move(layout);
    r.metrics = stage("metrics", [&] { return measure(r.layout); });
    r.contacts = find_vertex_contacts(r.layout);
    return r;
}

void PipelineConfig::validate() const {
    if (input_path.has_value() == generator.has_value()) {
        throw InputError("exactly one input source is required: a graph file or the generator");
    }
    if (paths_path && auto_cover) {
        throw InputError("--paths and --auto-cover are mutually exclusive");
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PipelineRun run_pipeline(const PipelineConfig& config) {
    config.validate();
    DiGraph g = stage("input", [&] {
        if (config.generator) {
            return generate_random_dag(config.generator->n, config.generator->degree,
                                       config.seed);
        }
        return parse_graph(read_text_file(*config.input_path));
    });
    std::optional<PathDecomposition> paths;
    if (config.paths_path) {
        // Validated against the graph after cycle removal.
        const DiGraph dag = remove_cycles(g).dag;
        paths = stage("paths", [&] {
            return parse_decomposition(read_text_file(*config.paths_path), dag);
        });
    }
    PipelineResult result = run_pipeline(g, paths, config.options);
    return {std::move(g), std::move(result)};
}

}  // namespace pbf
