#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ranklab/reference.hpp"
#include "ranklab/solvers.hpp"

namespace ranklab {

// Per-matrix verification bundle: factorizations, transforms and bundles of
// one input are recomputed and checked against their defining equations and
// the naive oracle. Returns false and fills `why` on the first violation.
bool verify_matrix(const Mat& a, std::string* why);

struct SelftestConfig {
    std::vector<std::uint32_t> fields = {2, 3};
    std::size_t max_dim = 3;
    std::uint64_t seed = 1;
    std::size_t random_trials = 300;
    // Leading-constant checks: measured/model within [1-tol, 1+tol] at
    // dimension const_n.
    bool run_constants = true;
    std::size_t const_n = 256;
    double const_tol = 0.08;
    // Allocation audit sizes; in-place ops may allocate at most this many
    // field elements.
    std::vector<std::size_t> alloc_dims = {16, 64, 128};
    std::uint64_t alloc_budget = 64;
    // Caps the exhaustive sweep per shape; larger spaces are sampled.
    std::uint64_t exhaustive_cap = 300000;
};

struct CheckFailure {
    std::string check;
    std::string detail;
    std::optional<Mat> counterexample;
};

// Runs the exhaustive small-field sweeps, seeded reconstruction suite,
// allocation audit and constant checks. `log` receives one line per
// sub-suite. Failures carry a minimized counterexample when one exists.
std::vector<CheckFailure> run_selftest(const SelftestConfig& cfg,
                                       const std::function<void(const std::string&)>& log);

} // namespace ranklab
