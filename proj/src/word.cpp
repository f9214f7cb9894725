#include "wordbench/word.hpp"

#include <algorithm>

namespace wb {

Word longest_common_prefix(const Word& a, const Word& b) {
    size_t n = std::min(a.size(), b.size());
    size_t i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return a.substr(0, i);
}

Word longest_common_suffix(const Word& a, const Word& b) {
    size_t n = std::min(a.size(), b.size());
    size_t i = 0;
    while (i < n && a[a.size() - 1 - i] == b[b.size() - 1 - i]) ++i;
    return a.substr(a.size() - i);
}

Word longest_common_prefix(const std::vector<Word>& ws) {
    if (ws.empty()) return {};
    Word p = ws.front();
    for (const Word& w : ws) p = longest_common_prefix(p, w);
    return p;
}

Word longest_common_suffix(const std::vector<Word>& ws) {
    if (ws.empty()) return {};
    Word s = ws.front();
    for (const Word& w : ws) s = longest_common_suffix(s, w);
    return s;
}

} // namespace wb
