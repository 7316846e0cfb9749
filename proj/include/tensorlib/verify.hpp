#pragma once

// Randomized verification of the algorithm and contraction kernels against
// the brute-force oracle.

#include <tensorlib/json_io.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tl {

struct VerifyConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 100;
    std::size_t max_order = 4;
    std::size_t max_extent = 5;
    std::vector<ScalarKind> kinds{ScalarKind::int64, ScalarKind::float64};
    /// Relative tolerance (Frobenius norm of the difference over the norm of
    /// the expected result) for float64; int64 is compared exactly.
    double float_tolerance = 1e-12;
    /// Test hook: corrupts every ttv result before comparison.
    bool inject_fault = false;
};

struct FamilyResult {
    std::string name;
    ScalarKind kind = ScalarKind::int64;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::optional<nlohmann::json> counterexample; ///< first failure
};

struct VerifyReport {
    std::vector<FamilyResult> families;

    bool ok() const;
    /// One line per family and scalar kind, then a summary line.
    std::string text() const;
    nlohmann::json to_json() const;
};

std::vector<std::string> verify_family_names();

VerifyReport run_verification(const VerifyConfig& config);

const char* to_string(ScalarKind kind);

} // namespace tl
