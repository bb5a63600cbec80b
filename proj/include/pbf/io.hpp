#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pbf/layout.hpp"
#include "pbf/metrics.hpp"
#include "pbf/pipeline.hpp"

namespace pbf {

inline constexpr std::string_view kVersion = "1.0.0";

struct LayoutMeta {
    std::uint64_t seed = 0;
    PipelineOptions toggles;
    std::string version{kVersion};
    std::vector<Edge> reversed_edges;
    std::vector<std::string> warnings;

    bool operator==(const LayoutMeta&) const = default;
};

struct LayoutDocument {
    Layout layout;
    MetricsReport metrics;
    LayoutMeta meta;

    bool operator==(const LayoutDocument&) const = default;
};

/// Bundles a pipeline result with its run metadata. Vertex contacts become
/// warnings.
LayoutDocument make_document(const PipelineResult& result, const PipelineOptions& options,
                             std::uint64_t seed);

/// Two-space indented JSON with a fixed key order; the same document always
/// renders to the same bytes.
std::string render_json(const LayoutDocument& doc);

/// Inverse of render_json. Throws InputError on malformed documents.
LayoutDocument parse_layout_json(std::string_view text);

struct SvgOptions {
    int pitch = 24;
    double node_radius_px = 6;
};

/// Grid coordinates are emitted unscaled inside a scaled group, so polyline
/// points match the JSON routes exactly.
std::string render_svg(const Layout& layout, const SvgOptions& options = {});

/// "key=value" lines for crossings, bends, width, height, area.
std::string render_metrics(const MetricsReport& m);

}  // namespace pbf
