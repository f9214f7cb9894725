#pragma once

#include <string>
#include <vector>

#include "wordbench/error.hpp"

namespace wb {

// Finite words over the ternary alphabet are plain strings of '0', '1', '2'.
using Word = std::string;

inline bool is_ternary_letter(char c) { return c == '0' || c == '1' || c == '2'; }

inline bool is_ternary(const Word& w) {
    for (char c : w)
        if (!is_ternary_letter(c)) return false;
    return true;
}

inline const Word& require_ternary(const Word& w) {
    if (!is_ternary(w)) fail("BadLetter", "word '" + w + "' has letters outside {0,1,2}");
    return w;
}

inline Word reverse_word(Word w) {
    return Word(w.rbegin(), w.rend());
}

inline bool contains_factor(const Word& w, const Word& f) {
    return w.find(f) != Word::npos;
}

// Number of (possibly overlapping) occurrences of f in w.
inline size_t count_occurrences(const Word& w, const Word& f) {
    if (f.empty()) return 0;
    size_t n = 0;
    for (size_t pos = w.find(f); pos != Word::npos; pos = w.find(f, pos + 1)) ++n;
    return n;
}

Word longest_common_prefix(const Word& a, const Word& b);
Word longest_common_suffix(const Word& a, const Word& b);
Word longest_common_prefix(const std::vector<Word>& ws);
Word longest_common_suffix(const std::vector<Word>& ws);

} // namespace wb
