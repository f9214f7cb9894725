#pragma once

#include <set>
#include <vector>

#include "wordbench/word.hpp"

namespace wb {

// All distinct length-n factors. Errors: LengthOutOfRange unless 0 <= n <= |w|.
std::set<Word> factor_set(const Word& w, size_t n);
size_t factor_count(const Word& w, size_t n);

// counts[n] for n = 1..n_max in one suffix-array pass.
std::vector<size_t> factor_count_all(const Word& w, size_t n_max);

struct ComplexityProfile {
    struct Entry {
        size_t n = 0;
        size_t count = 0;
        bool stabilized = false; // count on the first half equals count on the whole prefix
    };
    size_t source_prefix_length = 0;
    std::vector<Entry> entries; // n = 1..n_max
};

// Requires |prefix| >= 4*n_max (stabilization margin). Error: PrefixTooShort.
ComplexityProfile complexity_profile(const Word& prefix, size_t n_max);

} // namespace wb
