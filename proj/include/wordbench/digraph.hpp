#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wordbench/morphism.hpp"
#include "wordbench/word.hpp"

namespace wb {

// Digraph on {0,1,2} given by the length-2 factor set: edge x->y iff "xy".
struct TwoFactorDigraph {
    std::set<Word> edges;

    bool strongly_connected() const;
};

// S_i (present length-2 factors) and T_i (omitted ones), i = 1..7.
const std::vector<std::set<Word>>& canonical_s_sets();
const std::vector<std::vector<Word>>& canonical_t_sets();

// "T1".."T7" lookup; error UnknownCaseName.
const std::vector<Word>& t_set(const std::string& name);

struct CaseMatch {
    Permutation sigma; // sigma(input set) == S_index
    int index;         // 1..7
};

// For a 5-edge strongly connected factor set: the unique (sigma, i) with
// sigma(set) = S_i. Returns nullopt with *reason set otherwise.
std::optional<CaseMatch> canonical_case(const std::set<Word>& length2_factors,
                                        std::string* reason = nullptr);

struct CaseEnumerationReport {
    size_t five_edge_subsets = 0;       // always 126
    size_t strongly_connected = 0;      // labeled digraphs
    size_t orbit_count = 0;             // under the 6 alphabet permutations
    bool orbits_match_s_sets = false;   // reps are exactly S_1..S_7
    bool all_stabilizers_trivial = false;
    std::vector<std::string> failures;
};

// Brute-force check of the case classification; error StructureMismatch if an
// assertion fails (the report is still filled in for diagnostics).
CaseEnumerationReport enumerate_cases(bool throw_on_mismatch = true);

} // namespace wb
