#pragma once

#include <string>

#include "ranklab/field.hpp"

namespace ranklab {

// Classical-multiplication cost models (leading terms) used to normalize
// measured counts. Square algorithms follow K3 * n^3; cup/ple follow the
// rank-sensitive 2mnr - (m+n)r^2 + (2/3)r^3.
double predicted_arith(const std::string& algo, std::size_t m, std::size_t n,
                       std::size_t r);

// One measurement: counter readings against the model.
struct BenchReport {
    std::string algo;
    std::size_t m = 0, n = 0, r = 0;
    std::uint32_t p = 0;
    std::uint64_t seed = 0;
    OpCounter ops;
    double predicted = 0;
    double ratio = 0; // ops.arith_total() / predicted
    double wall_ms = 0;
};

// Flat key=value line; wall time deliberately excluded so identical seeds
// and arguments give byte-identical lines.
std::string format_report_kv(const BenchReport& r);
std::string format_report_json(const BenchReport& r);

} // namespace ranklab
