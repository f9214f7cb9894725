#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wordbench/rational.hpp"
#include "wordbench/word.hpp"

namespace wb {

// A periodic factor w[start .. start+length) with w[i] == w[i+period]
// throughout. The period need not be minimal; the exponent length/period is
// then a lower bound on the factor's true exponent.
struct RepetitionWitness {
    size_t start = 0;
    size_t length = 0;
    size_t period = 1;

    Rational exponent() const {
        return Rational(static_cast<long long>(length), static_cast<long long>(period));
    }
    Word factor(const Word& w) const { return w.substr(start, length); }
};

size_t minimal_period(const Word& w);     // error EmptyWord
Rational word_exponent(const Word& w);    // |w| / minimal_period(w)

// Smallest (end index, period) witness of a factor with exponent >= t, or
// nullopt. The witness length is the longest periodic run for that pair.
std::optional<RepetitionWitness> contains_power_geq(const Word& w, const Rational& t);

// contains_power_geq restricted to factors ending at the last position of w.
std::optional<RepetitionWitness> suffix_power_check(const Word& w, const Rational& t);

// Maximum of word_exponent over all nonempty factors, with a witness.
std::pair<Rational, RepetitionWitness> max_exponent_factor(const Word& w);

// Incremental periodic-suffix bookkeeping for the backtracking engine.
// run(d, p) = length of the longest p-periodic suffix of the current prefix of
// length d; maintained depth by depth so backtracking is a no-op.
class SuffixRunTable {
public:
    SuffixRunTable(size_t cap, Rational threshold);

    // Call with the word buffer after placing letter w[d-1]; returns the
    // smallest period triggering a suffix factor of exponent >= threshold, or
    // 0 when the suffix is clean.
    size_t push(const char* w, size_t d);

    size_t run_length(size_t d, size_t p) const { return runs_[d][p]; }
    size_t max_tracked_period() const { return max_period_; }

private:
    size_t cap_;
    size_t max_period_;
    long long t_num_, t_den_;
    std::vector<std::vector<uint16_t>> runs_;
};

} // namespace wb
