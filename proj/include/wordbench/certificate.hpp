#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wordbench/rational.hpp"
#include "wordbench/word.hpp"

namespace wb {

// Machine-checkable encoding of a case analysis: an ordered tree of cases,
// each accumulating omitted words and carrying verifiable steps.

enum class StepKind {
    SearchBound,      // candidates, bound, mode exact|at_most
    ConcludeContains, // words licensed by earlier exhausted searches
    Pigeonhole,       // count of must-contain length-n words exceeds 2n+1
    OmitSplit,        // alternatives; spawns children (or defers to covering cases)
    DeduceOmitted,    // 2n+1 contained words pin C(n); a named word is omitted
    ExtensionForced,  // every occurrence of `from` extends to `to`; to omitted => from omitted
    ReturnWords,      // expected complete-return-word set for a factor x
    DiscardBlock,     // a block may only start the concatenation; context power witness
    Roll,             // conjugate the current block set by a common prefix/suffix
    Invoke,           // corollary hypotheses on the current blocks + table row identity
    Terminal,         // contradiction | morphism reached | covered by another case
};

const char* to_string(StepKind k);

enum class BoundMode { Exact, AtMost };
enum class TerminalKind { Contradiction, Morphism, CoveredBy };

struct Alternative {
    Word word;
    std::string covered_by; // empty: resolved by the next child case
};

struct Step {
    StepKind kind = StepKind::Terminal;

    // SearchBound
    std::vector<Word> candidates;
    size_t bound = 0;
    BoundMode mode = BoundMode::Exact;
    bool slow = false;

    // ConcludeContains
    std::vector<Word> words;

    // Pigeonhole / OmitSplit / DeduceOmitted
    size_t n = 0;
    std::vector<Alternative> alternatives;
    std::vector<Word> contained;
    Word omitted;

    // ExtensionForced
    Word from, to;

    // ReturnWords
    Word x;
    std::vector<Word> expected;

    // DiscardBlock
    Word block;
    Word witness;

    // Roll
    bool roll_left = true;
    Word piece;

    // Invoke / Terminal(Morphism)
    bool forward = true;
    std::vector<Word> triple;
    int table = 0;
    int row = 0;

    // Terminal
    TerminalKind terminal = TerminalKind::Contradiction;
    std::string covered_by;

    std::string note; // free-form remark carried through to reports
};

struct CaseNode {
    std::string name;        // path segment ("T1", "001", ...)
    std::vector<Word> omits; // words this node adds to the context
    std::vector<Step> steps;
    std::vector<CaseNode> children;
};

struct Certificate {
    std::string format;
    Rational threshold{5, 2};
    size_t search_cap = 200;
    size_t return_cap = 80;
    std::vector<CaseNode> cases;

    const CaseNode* find(const std::string& path) const; // "T1/001/00200"
};

// Parses and structurally validates certificate JSON. Errors: SchemaError.
Certificate parse_certificate(const std::string& text);

// The shipped certificate (embedded copy of data/certificate.json).
const Certificate& builtin_certificate();

} // namespace wb
