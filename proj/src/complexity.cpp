#include "wordbench/complexity.hpp"

#include <algorithm>
#include <numeric>

namespace wb {

namespace {

// Prefix-doubling suffix array; robust on highly repetitive input.
std::vector<size_t> suffix_array(const Word& w) {
    const size_t n = w.size();
    std::vector<size_t> sa(n), rank(n), tmp(n);
    std::iota(sa.begin(), sa.end(), 0);
    for (size_t i = 0; i < n; ++i) rank[i] = static_cast<size_t>(w[i]);
    for (size_t k = 1;; k *= 2) {
        auto cmp = [&](size_t a, size_t b) {
            if (rank[a] != rank[b]) return rank[a] < rank[b];
            size_t ra = a + k < n ? rank[a + k] + 1 : 0;
            size_t rb = b + k < n ? rank[b + k] + 1 : 0;
            return ra < rb;
        };
        std::sort(sa.begin(), sa.end(), cmp);
        tmp[sa[0]] = 0;
        for (size_t i = 1; i < n; ++i)
            tmp[sa[i]] = tmp[sa[i - 1]] + (cmp(sa[i - 1], sa[i]) ? 1 : 0);
        rank = tmp;
        if (rank[sa[n - 1]] == n - 1) break;
    }
    return sa;
}

// Kasai: lcp[i] = longest common prefix of sa[i-1] and sa[i], lcp[0] = 0.
std::vector<size_t> lcp_array(const Word& w, const std::vector<size_t>& sa) {
    const size_t n = w.size();
    std::vector<size_t> rank(n), lcp(n, 0);
    for (size_t i = 0; i < n; ++i) rank[sa[i]] = i;
    size_t h = 0;
    for (size_t i = 0; i < n; ++i) {
        if (rank[i] == 0) { h = 0; continue; }
        size_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && w[i + h] == w[j + h]) ++h;
        lcp[rank[i]] = h;
        if (h > 0) --h;
    }
    return lcp;
}

} // namespace

std::set<Word> factor_set(const Word& w, size_t n) {
    if (n > w.size()) fail("LengthOutOfRange", "factor length exceeds word length");
    std::set<Word> out;
    if (n == 0) { out.insert(Word{}); return out; }
    for (size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
    return out;
}

size_t factor_count(const Word& w, size_t n) {
    if (n > w.size()) fail("LengthOutOfRange", "factor length exceeds word length");
    if (n == 0) return 1;
    return factor_count_all(w, n)[n];
}

std::vector<size_t> factor_count_all(const Word& w, size_t n_max) {
    if (n_max > w.size()) fail("LengthOutOfRange", "factor length exceeds word length");
    std::vector<size_t> counts(n_max + 1, 0);
    if (w.empty() || n_max == 0) return counts;
    auto sa = suffix_array(w);
    auto lcp = lcp_array(w, sa);
    // distinct factors of length n = windows(n) - #{adjacent suffix pairs with lcp >= n}
    std::vector<size_t> ge(n_max + 2, 0);
    for (size_t v : lcp) {
        size_t c = std::min(v, n_max);
        if (c > 0) ++ge[c]; // contributes to all n <= c
    }
    size_t suffix_sum = 0;
    for (size_t n = n_max; n >= 1; --n) {
        suffix_sum += ge[n];
        counts[n] = (w.size() - n + 1) - suffix_sum;
    }
    return counts;
}

ComplexityProfile complexity_profile(const Word& prefix, size_t n_max) {
    if (n_max == 0 || prefix.size() < 4 * n_max)
        fail("PrefixTooShort", "need |prefix| >= 4*n_max for a stabilization margin");
    ComplexityProfile profile;
    profile.source_prefix_length = prefix.size();
    auto full = factor_count_all(prefix, n_max);
    auto half = factor_count_all(prefix.substr(0, prefix.size() / 2), n_max);
    profile.entries.reserve(n_max);
    for (size_t n = 1; n <= n_max; ++n)
        profile.entries.push_back({n, full[n], full[n] == half[n]});
    return profile;
}

} // namespace wb
