// Rendering layer: JSON (schema_version 1, arbitrary-precision values as
// decimal strings), CSV scan tables with a fixed header, and human-readable
// text. All output is deterministic: fixed key order, lexicographic (d, g)
// scan order, stable formatting.
#pragma once

#include "sarkisov/link_classifier.hpp"

#include <nlohmann/json.hpp>

#include <span>
#include <string>

namespace sarkisov {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

ordered_json classification_json(const LinkClassification& c);
std::string render_classification_text(const LinkClassification& c);

enum class OutputFormat { text, json, csv };

// Throws Error(usage_error) on unknown names.
OutputFormat parse_format(const std::string& name);

struct ScanRequest {
    Int d_min, d_max; // 5 <= d_min <= d_max
    Int g_min, g_max; // 0 <= g_min <= g_max
    std::string ambient = "P3";
    OutputFormat format = OutputFormat::text;
    ClassifyOptions options;
    int jobs = 1; // worker threads; output is identical for any value
};

// Fixed CSV header, one row per (d, g) in lexicographic order.
std::string scan_csv_header();

// Runs classify over the grid and renders per the request. Validation
// failures throw Error(usage_error).
std::string run_scan(const ScanRequest& request, std::span<const AmbientFano> catalog);

} // namespace sarkisov
