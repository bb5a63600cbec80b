#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbf/decomposition.hpp"
#include "pbf/graph.hpp"
#include "pbf/layout.hpp"
#include "pbf/metrics.hpp"

namespace pbf {

struct PipelineOptions {
    bool compact = true;
    bool bundle_transitive = true;
    bool bundle_cross = true;
    bool reorder = true;

    bool operator==(const PipelineOptions&) const = default;
};

struct PipelineResult {
    CycleRemovalResult acyclic;
    PathDecomposition decomposition;
    EdgeClassification classification;
    Layout layout;
    MetricsReport metrics;
    std::vector<VertexContact> contacts;
};

/// cycle removal -> topological sort -> decomposition (given, or a minimum
/// path cover) -> initial layout -> compaction -> transitive bundling ->
/// cross routing and bundling -> metrics. A given decomposition must be
/// valid for the graph after cycle removal.
///
/// Errors are rethrown with the failing stage's name prefixed: InputError
/// for bad input, InvariantError when a self-check fails.
PipelineResult run_pipeline(const DiGraph& g, const std::optional<PathDecomposition>& paths,
                            const PipelineOptions& options = {});

struct GeneratorParams {
    int n = 0;
    double degree = 0;
};

/// Everything one `layout` invocation needs.
struct PipelineConfig {
    std::optional<std::string> input_path;
    std::optional<GeneratorParams> generator;
    std::optional<std::string> paths_path;
    bool auto_cover = false;
    PipelineOptions options;
    std::optional<std::string> svg_path;
    std::optional<std::string> json_path;
    bool print_metrics = false;
    std::uint64_t seed = 0;

    /// Throws InputError unless exactly one input source is set and at most
    /// one of paths_path / auto_cover.
    void validate() const;
};

struct PipelineRun {
    DiGraph graph;
    PipelineResult result;
};

/// Loads the input graph (file or generator, seeded by `seed`) and the
/// optional path file, then runs the pipeline. Writes no output.
PipelineRun run_pipeline(const PipelineConfig& config);

std::string read_text_file(const std::string& path);

}  // namespace pbf
