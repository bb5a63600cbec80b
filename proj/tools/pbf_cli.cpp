#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pbf/bench.hpp"
#include "pbf/generator.hpp"
#include "pbf/io.hpp"
#include "pbf/pipeline.hpp"

namespace {

constexpr int kInputError = 2;
constexpr int kInvariantError = 3;

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pbf::InputError("cannot write " + path);
    out << text;
    if (!out) throw pbf::InputError("failed writing " + path);
}

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> sizes;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            int n = std::stoi(item, &used);
            if (used != item.size() || n < 1) throw std::invalid_argument(item);
            sizes.push_back(n);
        } catch (const std::exception&) {
            throw pbf::InputError("bad size '" + item + "' in --sizes");
        }
    }
    return sizes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Path-based hierarchical graph layout"};
    app.require_subcommand(1);

    pbf::PipelineConfig config;
    std::string input;
    int gen_n = 0;
    double gen_deg = 0;
    bool no_compact = false;
    bool no_bundle_transitive = false;
    bool no_bundle_cross = false;
    bool no_reorder = false;
    std::string paths;
    std::string svg;
    std::string json;

    auto* layout = app.add_subcommand("layout", "Lay out a graph file or a generated graph");
    layout->add_option("input", input, "Edge-list file");
    auto* paths_opt = layout->add_option("--paths", paths, "Path decomposition file");
    auto* cover_opt = layout->add_flag("--auto-cover", config.auto_cover,
                                       "Use a minimum path cover (default without --paths)");
    paths_opt->excludes(cover_opt);
    layout->add_flag("--no-compact", no_compact, "Keep topological ranks as rows");
    layout->add_flag("--no-bundle-transitive", no_bundle_transitive,
                     "Hide path-transitive edges instead of bundling them");
    layout->add_flag("--no-bundle-cross", no_bundle_cross, "Route every cross edge on its own");
    layout->add_flag("--no-reorder", no_reorder, "Keep transitive lanes in packing order");
    layout->add_option("--svg", svg, "Write SVG drawing");
    layout->add_option("--json", json, "Write JSON layout document");
    layout->add_flag("--metrics", config.print_metrics, "Print metrics to stdout");
    layout->add_option("--seed", config.seed, "Seed for the generator and recorded in output");
    layout->add_option("--gen-n", gen_n, "Generate a random DAG with N vertices instead of reading");
    layout->add_option("--gen-deg", gen_deg, "Edges per vertex for --gen-n")->default_val(1.6);

    int n = 0;
    double deg = 0;
    std::uint64_t seed = 1;
    std::string out_path;
    auto* gen = app.add_subcommand("gen", "Write a random DAG as an edge list");
    gen->add_option("--n", n, "Vertex count")->required();
    gen->add_option("--deg", deg, "Edges per vertex (m = round(n * deg))")->required();
    gen->add_option("--seed", seed, "Random seed")->default_val(1);
    gen->add_option("--out", out_path, "Output file (stdout when omitted)");

    std::string sizes = "20,50,100";
    double bench_deg = 1.6;
    int seeds = 2;
    std::string csv;
    auto* bench = app.add_subcommand("bench", "Time the pipeline on random DAGs");
    bench->add_option("--sizes", sizes, "Comma-separated vertex counts")->default_val("20,50,100");
    bench->add_option("--deg", bench_deg, "Edges per vertex")->default_val(1.6);
    bench->add_option("--seeds", seeds, "Graphs per size")->default_val(2);
    bench->add_option("--out", csv, "CSV output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kInputError;
    }

    try {
        if (*layout) {
            if (!input.empty()) config.input_path = input;
            if (gen_n > 0) config.generator = pbf::GeneratorParams{gen_n, gen_deg};
            if (!paths.empty()) config.paths_path = paths;
            if (!svg.empty()) config.svg_path = svg;
            if (!json.empty()) config.json_path = json;
            config.options = {!no_compact, !no_bundle_transitive, !no_bundle_cross, !no_reorder};
            const pbf::PipelineRun run = pbf::run_pipeline(config);
            for (const pbf::VertexContact& c : run.result.contacts) {
                std::cerr << "warning: route of edge (" << c.edge.from << "," << c.edge.to
                          << ") passes through vertex " << c.vertex << '\n';
            }
            const pbf::LayoutDocument doc =
                pbf::make_document(run.result, config.options, config.seed);
            if (config.json_path) write_text_file(*config.json_path, pbf::render_json(doc));
            if (config.svg_path) write_text_file(*config.svg_path, pbf::render_svg(doc.layout));
            if (config.print_metrics) std::cout << pbf::render_metrics(doc.metrics);
        } else if (*gen) {
            const std::string text = pbf::serialize_graph(pbf::generate_random_dag(n, deg, seed));
            if (out_path.empty()) {
                std::cout << text;
            } else {
                write_text_file(out_path, text);
            }
        } else if (*bench) {
            if (seeds < 0) throw pbf::InputError("--seeds must be non-negative");
            pbf::BenchSuite suite;
            suite.sizes = parse_sizes(sizes);
            suite.degree = bench_deg;
            suite.seeds = seeds;
            const pbf::BenchTable table = pbf::bench(suite);
            if (!csv.empty()) write_text_file(csv, pbf::to_csv(table));
            std::cout << pbf::format_medians(table);
        }
    } catch (const pbf::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const pbf::InvariantError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInvariantError;
    }
    return 0;
}
