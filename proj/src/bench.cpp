#include "pbf/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "pbf/generator.hpp"

namespace pbf {

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

double median(std::vector<double> values) {
    if (values.empty()) return 0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return (values[mid - 1] + values[mid]) / 2;
}

BenchTable bench(const BenchSuite& suite) {
    using Clock = std::chrono::steady_clock;
    BenchTable table;
    for (int n : suite.sizes) {
        std::vector<std::vector<double>> columns(6);
        for (int s = 0; s < suite.seeds; ++s) {
            const std::uint64_t seed = suite.base_seed + static_cast<std::uint64_t>(s);
            const DiGraph g = generate_random_dag(n, suite.degree, seed);
            const auto start = Clock::now();
            const PipelineResult r = run_pipeline(g, std::nullopt, suite.options);
            const auto stop = Clock::now();

            BenchRow row;
            row.graph_id = "n" + std::to_string(n) + "-s" + std::to_string(seed);
            row.n = n;
            row.m = static_cast<std::int64_t>(g.edge_count());
            row.metrics = r.metrics;
            row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
            columns[0].push_back(static_cast<double>(row.metrics.crossings));
            columns[1].push_back(static_cast<double>(row.metrics.bends));
            columns[2].push_back(static_cast<double>(row.metrics.width));
            columns[3].push_back(static_cast<double>(row.metrics.height));
            columns[4].push_back(static_cast<double>(row.metrics.area));
            columns[5].push_back(row.wall_ms);
            table.rows.push_back(std::move(row));
        }
        if (suite.seeds > 0) {
            table.medians.push_back({n, median(columns[0]), median(columns[1]),
                                     median(columns[2]), median(columns[3]), median(columns[4]),
                                     median(columns[5])});
        }
    }
    return table;
}

std::string to_csv(const BenchTable& table) {
    std::ostringstream out;
    out << "graph_id,n,m,crossings,bends,width,height,area,wall_ms\n";
    for (const BenchRow& r : table.rows) {
        out << r.graph_id << ',' << r.n << ',' << r.m << ',' << r.metrics.crossings << ','
            << r.metrics.bends << ',' << r.metrics.width << ',' << r.metrics.height << ','
            << r.metrics.area << ',' << fixed(r.wall_ms, 3) << '\n';
    }
    return out.str();
}

std::string format_medians(const BenchTable& table) {
    std::ostringstream out;
    out << "n\tcrossings\tbends\twidth\theight\tarea\twall_ms\n";
    for (const BenchMedian& m : table.medians) {
        out << m.n << '\t' << fixed(m.crossings, 1) << '\t' << fixed(m.bends, 1) << '\t'
            << fixed(m.width, 1) << '\t' << fixed(m.height, 1) << '\t' << fixed(m.area, 1)
            << '\t' << fixed(m.wall_ms, 3) << '\n';
    }
    return out.str();
}

}  // namespace pbf
