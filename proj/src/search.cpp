#include "wordbench/search.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

namespace wb {

AvoidanceSpec::AvoidanceSpec(std::vector<Word> f, Rational t) : threshold(t) {
    if (!(threshold > Rational(1))) fail("BadSpec", "threshold must exceed 1");
    for (const Word& w : f) add(w);
}

void AvoidanceSpec::add(const Word& w) {
    if (w.empty()) fail("BadSpec", "forbidden words must be nonempty");
    require_ternary(w);
    auto it = std::lower_bound(forbidden.begin(), forbidden.end(), w);
    if (it == forbidden.end() || *it != w) forbidden.insert(it, w);
}

AvoidanceSpec AvoidanceSpec::extended(const Word& extra) const {
    AvoidanceSpec out = *this;
    out.add(extra);
    return out;
}

AvoidanceSpec AvoidanceSpec::extended(const std::vector<Word>& extra) const {
    AvoidanceSpec out = *this;
    for (const Word& w : extra) out.add(w);
    return out;
}

bool AvoidanceSpec::violates(const Word& w) const {
    for (const Word& f : forbidden)
        if (contains_factor(w, f)) return true;
    return contains_power_geq(w, threshold).has_value();
}

const char* to_string(SearchStatus s) {
    return s == SearchStatus::Exhausted ? "exhausted" : "cap-reached";
}

namespace {

struct Searcher {
    const AvoidanceSpec& spec;
    size_t cap;
    Word buf;
    SuffixRunTable runs;
    size_t best_len = 0;
    Word best;
    bool cap_hit = false;

    Searcher(const AvoidanceSpec& s, size_t c)
        : spec(s), cap(c), buf(c, '0'), runs(c, s.threshold) {}

    bool forbidden_suffix(size_t d) const {
        for (const Word& f : spec.forbidden)
            if (d >= f.size() &&
                std::equal(f.begin(), f.end(), buf.begin() + static_cast<long>(d - f.size())))
                return true;
        return false;
    }

    void dfs(size_t d) {
        if (d > best_len) {
            best_len = d;
            best.assign(buf, 0, d);
        }
        if (d == cap) {
            cap_hit = true;
            return;
        }
        for (char c = '0'; c <= '2'; ++c) {
            buf[d] = c;
            if (runs.push(buf.data(), d + 1) != 0) continue;
            if (forbidden_suffix(d + 1)) continue;
            dfs(d + 1);
            if (cap_hit) return; // lex-first cap witness is enough
        }
    }
};

} // namespace

SearchOutcome longest_avoiding(const AvoidanceSpec& spec, size_t cap, SearchCache* cache) {
    if (cap < 1) fail("BadCap", "cap must be at least 1");
    std::string key;
    if (cache) {
        key = spec_hash(spec, cap);
        if (auto hit = cache->lookup(key)) return *hit;
    }
    Searcher s(spec, cap);
    s.dfs(0);
    SearchOutcome out{s.cap_hit ? SearchStatus::CapReached : SearchStatus::Exhausted,
                      s.best_len, s.best};
    // post-hoc full check, independent of the incremental pruning
    if (spec.violates(out.witness))
        fail("InternalError", "search witness violates its own spec");
    if (cache) cache->store(key, out);
    return out;
}

std::vector<std::pair<Word, SearchOutcome>> prove_all_contained(
    const AvoidanceSpec& spec, const std::vector<Word>& words, size_t cap,
    SearchCache* cache) {
    for (const Word& u : words)
        if (spec.violates(u))
            fail("ListedWordViolatesSpec", "'" + u + "' violates the spec; containment is vacuous");
    std::vector<std::pair<Word, SearchOutcome>> out;
    out.reserve(words.size());
    for (const Word& u : words)
        out.emplace_back(u, longest_avoiding(spec.extended(u), cap, cache));
    return out;
}

ReturnWordsResult enumerate_return_words(const Word& x, const AvoidanceSpec& spec, size_t cap) {
    if (x.empty()) fail("BadSeed", "return words need a nonempty base factor");
    if (spec.violates(x)) fail("SeedViolatesSpec", "'" + x + "' violates the spec");
    if (cap <= 2 * x.size()) fail("BadCap", "cap must exceed twice |x|");

    struct ReturnSearcher {
        const AvoidanceSpec& spec;
        const Word& x;
        size_t cap;
        Word buf;
        SuffixRunTable runs;
        std::vector<Word> found;
        bool cap_hit = false;

        ReturnSearcher(const AvoidanceSpec& s, const Word& x_, size_t c)
            : spec(s), x(x_), cap(c), buf(c, '0'), runs(c, s.threshold) {}

        bool forbidden_suffix(size_t d) const {
            for (const Word& f : spec.forbidden)
                if (d >= f.size() &&
                    std::equal(f.begin(), f.end(), buf.begin() + static_cast<long>(d - f.size())))
                    return true;
            return false;
        }

        bool suffix_is_x(size_t d) const {
            return d >= x.size() &&
                   std::equal(x.begin(), x.end(), buf.begin() + static_cast<long>(d - x.size()));
        }

        // occ = occurrences of x completed so far
        void dfs(size_t d, size_t occ) {
            if (d == cap) {
                cap_hit = true;
                return;
            }
            for (char c = '0'; c <= '2'; ++c) {
                buf[d] = c;
                if (runs.push(buf.data(), d + 1) != 0) continue;
                if (forbidden_suffix(d + 1)) continue;
                size_t occ2 = occ + (suffix_is_x(d + 1) ? 1 : 0);
                if (occ2 == 2) {
                    // second occurrence must be the suffix of r.x right now
                    size_t rlen = d + 1 - x.size();
                    if (rlen >= x.size()) found.push_back(buf.substr(0, rlen));
                    continue; // any extension would carry a non-final second occurrence
                }
                dfs(d + 1, occ2);
                if (cap_hit) return;
            }
        }
    };

    ReturnSearcher rs(spec, x, cap);
    std::copy(x.begin(), x.end(), rs.buf.begin());
    size_t occ = 0;
    for (size_t d = 1; d <= x.size(); ++d) {
        if (rs.runs.push(rs.buf.data(), d) != 0 || rs.forbidden_suffix(d))
            fail("InternalError", "seed unexpectedly violates the spec");
        if (rs.suffix_is_x(d)) ++occ;
    }
    rs.dfs(x.size(), occ);
    std::sort(rs.found.begin(), rs.found.end());
    return ReturnWordsResult{
        rs.cap_hit ? SearchStatus::CapReached : SearchStatus::Exhausted, rs.found};
}

Word guaranteed_prefix(const std::vector<Word>& blocks, size_t cap) {
    if (blocks.empty()) return {};
    for (const Word& b : blocks)
        if (b.empty()) fail("BadBlocks", "blocks must be nonempty");
    std::set<Word> residuals(blocks.begin(), blocks.end());
    Word g;
    while (g.size() < cap) {
        if (residuals.erase(Word{}) > 0) residuals.insert(blocks.begin(), blocks.end());
        char c = (*residuals.begin())[0];
        bool same = std::all_of(residuals.begin(), residuals.end(),
                                [&](const Word& r) { return r[0] == c; });
        if (!same) break;
        g += c;
        std::set<Word> next;
        for (const Word& r : residuals) next.insert(r.substr(1));
        residuals = std::move(next);
    }
    return g;
}

DiscardJustification discard_initial_block(const std::vector<Word>& blocks, const Word& r,
                                           const Rational& threshold) {
    if (std::find(blocks.begin(), blocks.end(), r) == blocks.end())
        fail("BlockNotPresent", "'" + r + "' is not one of the blocks");
    Word s = longest_common_suffix(blocks);
    Word gp = guaranteed_prefix(blocks);
    Word context = s + r + gp;
    auto witness = contains_power_geq(context, threshold);
    if (!witness)
        fail("NotJustified", "no factor of exponent >= " + threshold.str() + " in context '" +
                                 context + "' (common suffix '" + s + "', guaranteed prefix '" +
                                 gp + "')");
    return DiscardJustification{context, s, gp, *witness};
}

std::string spec_hash(const AvoidanceSpec& spec, size_t cap) {
    std::string canonical = spec.threshold.str() + "|" + std::to_string(cap) + "|";
    for (const Word& w : spec.forbidden) {
        canonical += w;
        canonical += ',';
    }
    uint64_t h = 1469598103934665603ull;
    for (char ch : canonical) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("v1:") + buf;
}

namespace {

SearchOutcome parse_cache_record(const std::string& line, size_t lineno,
                                 std::string* key) {
    std::array<std::string, 4> fields;
    size_t start = 0, slot = 0;
    for (; slot < 3; ++slot) {
        size_t tab = line.find('\t', start);
        if (tab == std::string::npos)
            fail("CorruptCache", "line " + std::to_string(lineno) + ": expected 4 fields");
        fields[slot] = line.substr(start, tab - start);
        start = tab + 1;
    }
    fields[3] = line.substr(start);
    if (fields[3].find('\t') != std::string::npos)
        fail("CorruptCache", "line " + std::to_string(lineno) + ": too many fields");
    SearchOutcome out;
    if (fields[1] == "exhausted")
        out.status = SearchStatus::Exhausted;
    else if (fields[1] == "cap-reached")
        out.status = SearchStatus::CapReached;
    else
        fail("CorruptCache", "line " + std::to_string(lineno) + ": bad status '" + fields[1] + "'");
    try {
        out.max_length = std::stoul(fields[2]);
    } catch (const std::logic_error&) {
        fail("CorruptCache", "line " + std::to_string(lineno) + ": bad length");
    }
    if (!is_ternary(fields[3]))
        fail("CorruptCache", "line " + std::to_string(lineno) + ": bad witness");
    out.witness = fields[3];
    *key = fields[0];
    return out;
}

} // namespace

SearchCache::SearchCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return; // fresh cache
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::string key;
        SearchOutcome out = parse_cache_record(line, lineno, &key);
        records_[key] = out;
    }
}

std::optional<SearchOutcome> SearchCache::lookup(const std::string& key) const {
    auto it = records_.find(key);
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

void SearchCache::store(const std::string& key, const SearchOutcome& out) {
    if (records_.count(key)) return;
    records_[key] = out;
    if (path_.empty()) return;
    std::ofstream f(path_, std::ios::app);
    f << key << '\t' << to_string(out.status) << '\t' << out.max_length << '\t' << out.witness
      << '\n';
}

size_t SearchCache::gc(const std::string& path) {
    std::ifstream in(path);
    if (!in) return 0;
    std::string line;
    size_t lineno = 0, evicted = 0;
    std::vector<std::string> kept;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::string key;
        parse_cache_record(line, lineno, &key);
        if (key.starts_with("v1:"))
            kept.push_back(line);
        else
            ++evicted;
    }
    in.close();
    if (evicted > 0) {
        std::ofstream out(path, std::ios::trunc);
        for (const std::string& l : kept) out << l << '\n';
    }
    return evicted;
}

} // namespace wb
