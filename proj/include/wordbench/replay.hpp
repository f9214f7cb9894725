#pragma once

#include <string>
#include <vector>

#include "wordbench/certificate.hpp"
#include "wordbench/search.hpp"

namespace wb {

enum class StepStatus { Pass, Fail, Flag, Skipped };

const char* to_string(StepStatus s);

struct ReplayOptions {
    bool strict = false;    // flags count as failures
    bool skip_slow = false; // skip SearchBound steps marked slow
    SearchCache* cache = nullptr;
};

struct ReplayEntry {
    std::string path;
    size_t step_index = 0;
    StepKind kind = StepKind::Terminal;
    StepStatus status = StepStatus::Pass;
    std::string measured;
    std::string claimed;
    std::string detail;
};

struct ReplayReport {
    std::vector<ReplayEntry> entries; // tree order
    size_t passes = 0, failures = 0, flags = 0, skipped = 0;
    size_t cases = 0;
    size_t contradiction_leaves = 0;
    size_t morphism_leaves = 0;          // Terminal(Morphism) count
    size_t distinct_morphism_rows = 0;   // distinct (table,row) pairs reached
    size_t covered_links = 0;

    bool all_green(bool strict) const {
        return failures == 0 && (!strict || flags == 0);
    }
};

// Re-verifies every step of the certificate against the search and structure
// engines. Failures and flags are report content, never exceptions.
ReplayReport replay(const Certificate& cert, const ReplayOptions& options = {});

} // namespace wb
