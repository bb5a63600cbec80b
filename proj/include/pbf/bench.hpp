#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pbf/metrics.hpp"
#include "pbf/pipeline.hpp"

namespace pbf {

struct BenchRow {
    std::string graph_id;
    int n = 0;
    std::int64_t m = 0;
    MetricsReport metrics;
    double wall_ms = 0;
};

/// One random graph per (size, seed index); seeds run base_seed ..
/// base_seed + seeds - 1.
struct BenchSuite {
    std::vector<int> sizes;
    double degree = 1.6;
    int seeds = 1;
    std::uint64_t base_seed = 1;
    PipelineOptions options;
};

struct BenchMedian {
    int n = 0;
    double crossings = 0;
    double bends = 0;
    double width = 0;
    double height = 0;
    double area = 0;
    double wall_ms = 0;
};

struct BenchTable {
    std::vector<BenchRow> rows;
    /// One entry per size, in suite order.
    std::vector<BenchMedian> medians;
};

/// Generates and lays out every graph of the suite. Wall time covers
/// run_pipeline only, not generation or output.
BenchTable bench(const BenchSuite& suite);

double median(std::vector<double> values);

/// Header plus one line per row:
/// graph_id,n,m,crossings,bends,width,height,area,wall_ms
std::string to_csv(const BenchTable& table);

std::string format_medians(const BenchTable& table);

}  // namespace pbf
