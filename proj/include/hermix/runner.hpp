#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hermix {

// Fully describes one CLI run; every run is reproducible from its config.
struct RunConfig {
    std::string input_path;          // fit/eda sample file
    std::string families;            // family grammar text (fit: --families, eda: --pool)
    std::vector<std::string> polys;  // roots: one entry per --poly
    std::string weights_text;        // gen: comma-separated weights
    unsigned moments = 0;            // 0 = default to the unknown count
    unsigned subset_size = 1;        // eda
    std::size_t n = 0;               // gen
    std::uint64_t seed = 0;
    std::string output_path;         // empty = stdout
    std::string emit_cdf_path;
    double real_tolerance = 1e-8;
};

struct RunResult {
    std::string output;  // JSON document (empty for gen)
    int exit_code = 0;
};

RunResult run_fit(const RunConfig& config);
RunResult run_eda(const RunConfig& config);
RunResult run_gen(const RunConfig& config);
RunResult run_roots(const RunConfig& config);

// Fixed formatting used across all reports: stable key order and 12
// significant digits for every number.
std::string format_number(double x);

}  // namespace hermix
