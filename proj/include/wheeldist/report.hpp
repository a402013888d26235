#pragma once

#include "wheeldist/spectra.hpp"
#include "wheeldist/theorems.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace wheeldist {

inline constexpr const char* kToolVersion = "1.0.0";

struct VerifyOptions {
    std::size_t oracle_cutoff = 64;        // Gauss-Jordan comparisons only up to this n
    std::size_t cofactor_exhaustive = 16;  // all cofactors up to this n
    SpectralTolerances tol;
    unsigned threads = 1;
};

struct TimedCheck {
    TheoremCheck check;
    double wall_ms = 0.0;
};

/// Every check that applies to n. Odd n runs the determinant, BFS,
/// singularity and inertia checks and lists the inverse-formula family
/// as not-applicable.
std::vector<TimedCheck> run_checks(std::size_t n, const VerifyOptions& opts);

struct ReportSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t not_applicable = 0;
};

struct VerificationReport {
    std::string version = kToolVersion;
    nlohmann::json config;
    std::vector<TimedCheck> checks;  // sorted by (n, name)

    ReportSummary summary() const;
    bool all_passed() const { return summary().failed == 0; }
};

/// Runs run_checks for every n in [n_min, n_max] (possibly concurrently)
/// and sorts the result.
VerificationReport verify_range(std::size_t n_min, std::size_t n_max, const VerifyOptions& opts,
                                nlohmann::json config = nlohmann::json::object());

/// {"header": {...timing, timestamps...}, "tool", "version", "config",
/// "checks", "summary"}. Everything outside "header" is deterministic.
nlohmann::json to_json(const VerificationReport& r, bool include_header = true);

/// n,name,status,witness (witness JSON-encoded and quoted).
std::string to_csv(const VerificationReport& r);

}  // namespace wheeldist
