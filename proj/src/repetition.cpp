#include "wordbench/repetition.hpp"

#include <algorithm>

namespace wb {

size_t minimal_period(const Word& w) {
    if (w.empty()) fail("EmptyWord", "minimal_period of empty word");
    for (size_t p = 1; p < w.size(); ++p) {
        bool ok = true;
        for (size_t i = 0; i + p < w.size(); ++i)
            if (w[i] != w[i + p]) { ok = false; break; }
        if (ok) return p;
    }
    return w.size();
}

Rational word_exponent(const Word& w) {
    if (w.empty()) fail("EmptyWord", "word_exponent of empty word");
    return Rational(static_cast<long long>(w.size()),
                    static_cast<long long>(minimal_period(w)));
}

std::optional<RepetitionWitness> contains_power_geq(const Word& w, const Rational& t) {
    const long long tn = t.num, td = t.den;
    const size_t n = w.size();
    if (n == 0) return std::nullopt;
    const size_t max_p = static_cast<size_t>(
        std::max<long long>(0, (static_cast<long long>(n) * td) / tn));
    if (max_p == 0) return std::nullopt;

    // runs[p] = longest p-periodic suffix of the prefix scanned so far.
    std::vector<size_t> runs(max_p + 1, 0);
    for (size_t d = 1; d <= n; ++d) {
        size_t lim = std::min(max_p, d - 1);
        for (size_t p = 1; p <= lim; ++p)
            runs[p] = (w[d - 1] == w[d - 1 - p]) ? runs[p] + 1 : p;
        for (size_t p = std::min(max_p, d); p > lim; --p) runs[p] = d;
        for (size_t p = 1; p <= lim; ++p)
            if (static_cast<long long>(runs[p]) * td >= tn * static_cast<long long>(p))
                return RepetitionWitness{d - runs[p], runs[p], p};
    }
    return std::nullopt;
}

std::optional<RepetitionWitness> suffix_power_check(const Word& w, const Rational& t) {
    const long long tn = t.num, td = t.den;
    const size_t n = w.size();
    for (size_t p = 1; static_cast<long long>(p) * tn <= static_cast<long long>(n) * td; ++p) {
        size_t len = p;
        size_t i = n;
        while (i > p && w[i - 1] == w[i - 1 - p]) { ++len, --i; }
        len = std::min(len, n);
        if (static_cast<long long>(len) * td >= tn * static_cast<long long>(p))
            return RepetitionWitness{n - len, len, p};
    }
    return std::nullopt;
}

std::pair<Rational, RepetitionWitness> max_exponent_factor(const Word& w) {
    if (w.empty()) fail("EmptyWord", "max_exponent_factor of empty word");
    const size_t n = w.size();
    Rational best(1);
    RepetitionWitness bw{0, 1, 1};
    for (size_t p = 1; 2 * p <= n; ++p) {
        size_t matched = 0; // consecutive positions i with w[i] == w[i-p]
        for (size_t i = p; i < n; ++i) {
            matched = (w[i] == w[i - p]) ? matched + 1 : 0;
            size_t len = matched + p;
            if (static_cast<long long>(len) * best.den >
                best.num * static_cast<long long>(p)) {
                best = Rational(static_cast<long long>(len), static_cast<long long>(p));
                bw = RepetitionWitness{i + 1 - len, len, p};
            }
        }
    }
    return {best, bw};
}

SuffixRunTable::SuffixRunTable(size_t cap, Rational threshold)
    : cap_(cap),
      max_period_(static_cast<size_t>(
          std::max<long long>(1, (static_cast<long long>(cap) * threshold.den) / threshold.num))),
      t_num_(threshold.num),
      t_den_(threshold.den),
      runs_(cap + 1, std::vector<uint16_t>(max_period_ + 1, 0)) {
    if (cap > 60000) fail("CapTooLarge", "search cap exceeds run-table range");
}

size_t SuffixRunTable::push(const char* w, size_t d) {
    auto& cur = runs_[d];
    const auto& prev = runs_[d - 1];
    const size_t lim = std::min(max_period_, d - 1);
    size_t trigger = 0;
    for (size_t p = 1; p <= lim; ++p) {
        uint16_t r = (w[d - 1] == w[d - 1 - p]) ? static_cast<uint16_t>(prev[p] + 1)
                                                : static_cast<uint16_t>(p);
        cur[p] = r;
        if (trigger == 0 &&
            static_cast<long long>(r) * t_den_ >= t_num_ * static_cast<long long>(p))
            trigger = p;
    }
    for (size_t p = lim + 1; p <= max_period_; ++p)
        cur[p] = static_cast<uint16_t>(std::min(p, d));
    return trigger;
}

} // namespace wb
