#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordbench/rational.hpp"
#include "wordbench/repetition.hpp"
#include "wordbench/word.hpp"

namespace wb {

// Forbidden factor set plus an exponent threshold; a word satisfies the spec
// when it contains no forbidden factor and no factor of exponent >= threshold.
struct AvoidanceSpec {
    std::vector<Word> forbidden; // kept sorted and deduplicated
    Rational threshold{5, 2};

    AvoidanceSpec() = default;
    AvoidanceSpec(std::vector<Word> f, Rational t = Rational(5, 2));

    void add(const Word& w);
    AvoidanceSpec extended(const Word& extra) const;
    AvoidanceSpec extended(const std::vector<Word>& extra) const;

    bool violates(const Word& w) const; // full (non-incremental) check
};

enum class SearchStatus { Exhausted, CapReached };

const char* to_string(SearchStatus s);

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    size_t max_length = 0;
    Word witness; // first deepest word in lexicographic order (0 < 1 < 2)
};

// Persistent memo for longest_avoiding, keyed by a content hash of
// (sorted forbidden set, threshold, cap). One record per line:
//   spec-hash TAB status TAB max_length TAB witness
class SearchCache {
public:
    SearchCache() = default;
    explicit SearchCache(std::string path); // loads existing records; error CorruptCache

    std::optional<SearchOutcome> lookup(const std::string& key) const;
    void store(const std::string& key, const SearchOutcome& out);

    size_t size() const { return records_.size(); }

    // Drops records whose hash does not match the current hashing version.
    // Returns the number evicted. Error: CorruptCache.
    static size_t gc(const std::string& path);

private:
    std::string path_;
    std::map<std::string, SearchOutcome> records_;
};

// Current hash version prefix is "v1:".
std::string spec_hash(const AvoidanceSpec& spec, size_t cap);

inline constexpr size_t kDefaultSearchCap = 200;
inline constexpr size_t kDefaultReturnCap = 80;

// Depth-first lexicographic backtracking with suffix-anchored pruning. If the
// tree exhausts below cap the reported max_length is exact.
SearchOutcome longest_avoiding(const AvoidanceSpec& spec, size_t cap,
                               SearchCache* cache = nullptr);

// For each u in words: longest_avoiding(spec + u, cap). Every listed word must
// itself avoid the spec (error ListedWordViolatesSpec). If an outcome is
// Exhausted, any infinite word obeying the spec contains u.
std::vector<std::pair<Word, SearchOutcome>> prove_all_contained(
    const AvoidanceSpec& spec, const std::vector<Word>& words, size_t cap,
    SearchCache* cache = nullptr);

struct ReturnWordsResult {
    SearchStatus status = SearchStatus::Exhausted; // Exhausted => set is complete
    std::vector<Word> words;                       // sorted
};

// All r starting with x such that r.x contains x exactly twice (as prefix and
// suffix) and r.x satisfies the spec; exhaustive up to cap on |r.x|.
// Requires x itself to avoid the spec.
ReturnWordsResult enumerate_return_words(const Word& x, const AvoidanceSpec& spec,
                                         size_t cap = kDefaultReturnCap);

// Justification for using block r at most once (initially) in any infinite
// concatenation of the given blocks: every non-initial occurrence of r is
// preceded by the longest common suffix s of all blocks and followed by the
// guaranteed continuation prefix of the block set, and s.r.<continuation>
// contains a factor of exponent >= threshold.
struct DiscardJustification {
    Word context;            // s + r + guaranteed prefix
    Word common_suffix;      // s (may be empty)
    Word guaranteed_prefix;  // longest common prefix of every block concatenation
    RepetitionWitness witness; // located inside context
};

// Error NotJustified when no witness exists; error BlockNotPresent when
// r is not one of the blocks.
DiscardJustification discard_initial_block(const std::vector<Word>& blocks, const Word& r,
                                           const Rational& threshold = Rational(5, 2));

// Longest word that is a prefix of every infinite concatenation of the blocks
// (capped; the cap only matters for degenerate block sets).
Word guaranteed_prefix(const std::vector<Word>& blocks, size_t cap = 256);

} // namespace wb
