#include "wordbench/replay.hpp"

#include <algorithm>
#include <set>

#include "wordbench/roles.hpp"
#include "wordbench/tables.hpp"

namespace wb {

const char* to_string(StepStatus s) {
    switch (s) {
        case StepStatus::Pass: return "pass";
        case StepStatus::Fail: return "fail";
        case StepStatus::Flag: return "flag";
        case StepStatus::Skipped: return "skipped";
    }
    return "?";
}

namespace {

std::string join(const std::vector<Word>& ws) {
    std::string out;
    for (size_t i = 0; i < ws.size(); ++i) {
        if (i) out += ",";
        out += ws[i];
    }
    return out;
}

// full context of a case node: all omits on the path to it
std::vector<Word> context_of(const Certificate& cert, const std::string& path) {
    std::vector<Word> ctx;
    const std::vector<CaseNode>* level = &cert.cases;
    size_t start = 0;
    while (start <= path.size()) {
        size_t end = path.find('/', start);
        if (end == std::string::npos) end = path.size();
        std::string name = path.substr(start, end - start);
        const CaseNode* found = nullptr;
        for (const CaseNode& c : *level)
            if (c.name == name) { found = &c; break; }
        if (!found) return ctx;
        ctx.insert(ctx.end(), found->omits.begin(), found->omits.end());
        level = &found->children;
        if (end == path.size()) break;
        start = end + 1;
    }
    return ctx;
}

struct Replayer {
    const Certificate& cert;
    const ReplayOptions& opts;
    ReplayReport report;
    std::set<std::pair<int, int>> rows_reached;

    Replayer(const Certificate& c, const ReplayOptions& o) : cert(c), opts(o) {}

    ReplayEntry& add(const std::string& path, size_t idx, const Step& s, StepStatus status) {
        report.entries.push_back(ReplayEntry{path, idx, s.kind, status, "", "", s.note});
        switch (status) {
            case StepStatus::Pass: ++report.passes; break;
            case StepStatus::Fail: ++report.failures; break;
            case StepStatus::Flag: ++report.flags; break;
            case StepStatus::Skipped: ++report.skipped; break;
        }
        return report.entries.back();
    }

    // target case context must be implied by the local context: every word the
    // target omits contains some locally omitted word
    bool covers(const std::string& target, const std::vector<Word>& local_ctx,
                std::string* why) {
        if (!cert.find(target)) {
            *why = "target '" + target + "' not found";
            return false;
        }
        for (const Word& t : context_of(cert, target)) {
            bool implied = false;
            for (const Word& c : local_ctx)
                if (contains_factor(t, c)) { implied = true; break; }
            if (!implied) {
                *why = "target omits '" + t + "' which the local context does not imply";
                return false;
            }
        }
        return true;
    }

    struct State {
        AvoidanceSpec spec;
        std::set<Word> licensed;     // candidates of exhausted (or skipped) searches
        std::set<Word> must_contain; // concluded contained words
    };

    void run_case(const CaseNode& node, const std::string& prefix, State state) {
        std::string path = prefix.empty() ? node.name : prefix + "/" + node.name;
        ++report.cases;
        for (const Word& w : node.omits) state.spec.add(w);

        std::vector<Word> blocks;
        bool have_blocks = false;
        std::optional<std::pair<int, int>> invoked;
        bool pigeonhole_ok = false;

        for (size_t idx = 0; idx < node.steps.size(); ++idx) {
            const Step& s = node.steps[idx];
            switch (s.kind) {
                case StepKind::SearchBound: {
                    if (opts.skip_slow && s.slow) {
                        auto& e = add(path, idx, s, StepStatus::Skipped);
                        e.claimed = std::to_string(s.bound) +
                                    (s.mode == BoundMode::Exact ? " (exact)" : " (at most)");
                        e.measured = "skipped";
                        // conclusions downstream assume the claimed outcome
                        for (const Word& u : s.candidates) state.licensed.insert(u);
                        break;
                    }
                    size_t measured_max = 0;
                    bool all_exhausted = true;
                    std::string first_bad;
                    try {
                        auto results =
                            prove_all_contained(state.spec, s.candidates, cert.search_cap,
                                                opts.cache);
                        for (const auto& [u, out] : results) {
                            measured_max = std::max(measured_max, out.max_length);
                            if (out.status != SearchStatus::Exhausted) {
                                all_exhausted = false;
                                if (first_bad.empty()) first_bad = u + " hit the cap";
                            }
                        }
                    } catch (const Error& err) {
                        auto& e = add(path, idx, s, StepStatus::Fail);
                        e.claimed = std::to_string(s.bound);
                        e.detail = err.what();
                        break;
                    }
                    bool bound_ok = s.mode == BoundMode::Exact ? measured_max == s.bound
                                                               : measured_max <= s.bound;
                    StepStatus st =
                        (all_exhausted && bound_ok) ? StepStatus::Pass : StepStatus::Fail;
                    auto& e = add(path, idx, s, st);
                    e.claimed = std::to_string(s.bound) +
                                (s.mode == BoundMode::Exact ? " (exact)" : " (at most)");
                    e.measured = std::to_string(measured_max);
                    if (!first_bad.empty()) e.detail = first_bad;
                    if (all_exhausted)
                        for (const Word& u : s.candidates) state.licensed.insert(u);
                    break;
                }
                case StepKind::ConcludeContains: {
                    std::vector<Word> unlicensed;
                    for (const Word& u : s.words)
                        if (!state.licensed.count(u)) unlicensed.push_back(u);
                    auto& e = add(path, idx, s,
                                  unlicensed.empty() ? StepStatus::Pass : StepStatus::Fail);
                    e.claimed = std::to_string(s.words.size()) + " words contained";
                    if (!unlicensed.empty())
                        e.detail = "no exhausted search licenses: " + join(unlicensed);
                    for (const Word& u : s.words)
                        if (state.licensed.count(u)) state.must_contain.insert(u);
                    break;
                }
                case StepKind::Pigeonhole: {
                    size_t count = 0;
                    for (const Word& u : state.must_contain)
                        if (u.size() == s.n) ++count;
                    bool ok = count > 2 * s.n + 1;
                    pigeonhole_ok = ok;
                    auto& e = add(path, idx, s, ok ? StepStatus::Pass : StepStatus::Fail);
                    e.claimed = "> " + std::to_string(2 * s.n + 1) + " length-" +
                                std::to_string(s.n) + " factors";
                    e.measured = std::to_string(count);
                    break;
                }
                case StepKind::OmitSplit: {
                    size_t count = 0;
                    for (const Word& u : state.must_contain)
                        if (u.size() == s.n) ++count;
                    std::string problem;
                    for (const Alternative& a : s.alternatives) {
                        if (a.word.size() != s.n) problem = "alternative length mismatch";
                        if (state.must_contain.count(a.word))
                            problem = "alternative '" + a.word + "' is known to be contained";
                    }
                    if (count + s.alternatives.size() <= 2 * s.n + 1 && problem.empty())
                        problem = "only " + std::to_string(count) + " contained + " +
                                  std::to_string(s.alternatives.size()) +
                                  " alternatives; no overflow of 2n+1";
                    std::vector<Word> local_ctx = state.spec.forbidden;
                    for (const Alternative& a : s.alternatives) {
                        if (!a.covered_by.empty() && problem.empty()) {
                            std::vector<Word> child_ctx = local_ctx;
                            child_ctx.push_back(a.word);
                            std::string why;
                            if (!covers(a.covered_by, child_ctx, &why))
                                problem = "covered_by " + a.covered_by + ": " + why;
                        }
                    }
                    auto& e =
                        add(path, idx, s, problem.empty() ? StepStatus::Pass : StepStatus::Fail);
                    e.claimed = "one of " + std::to_string(s.alternatives.size()) +
                                " length-" + std::to_string(s.n) + " words omitted";
                    e.measured = std::to_string(count) + " contained";
                    e.detail = problem;
                    break;
                }
                case StepKind::DeduceOmitted: {
                    std::string problem;
                    if (s.contained.size() != 2 * s.n + 1)
                        problem = "contained list is not 2n+1 words";
                    for (const Word& u : s.contained) {
                        if (u.size() != s.n) problem = "contained word of wrong length";
                        else if (!state.must_contain.count(u))
                            problem = "'" + u + "' is not an established factor";
                    }
                    if (s.omitted.size() != s.n) problem = "omitted word has wrong length";
                    if (std::find(s.contained.begin(), s.contained.end(), s.omitted) !=
                        s.contained.end())
                        problem = "omitted word appears in the contained list";
                    auto& e =
                        add(path, idx, s, problem.empty() ? StepStatus::Pass : StepStatus::Fail);
                    e.claimed = "C(" + std::to_string(s.n) + ") pinned; '" + s.omitted +
                                "' omitted";
                    e.measured = std::to_string(s.contained.size()) + " established";
                    e.detail = problem;
                    if (problem.empty()) state.spec.add(s.omitted);
                    break;
                }
                case StepKind::ExtensionForced: {
                    std::string problem;
                    bool to_omitted = false;
                    for (const Word& f : state.spec.forbidden)
                        if (contains_factor(s.to, f)) { to_omitted = true; break; }
                    if (!to_omitted) problem = "'" + s.to + "' is not omitted in this context";
                    for (size_t i = s.from.size(); i < s.to.size() && problem.empty(); ++i) {
                        for (char c = '0'; c <= '2'; ++c) {
                            if (c == s.to[i]) continue;
                            Word alt = s.to.substr(0, i) + c;
                            if (!state.spec.violates(alt)) {
                                problem = "extension '" + alt + "' is not excluded";
                                break;
                            }
                        }
                    }
                    auto& e =
                        add(path, idx, s, problem.empty() ? StepStatus::Pass : StepStatus::Fail);
                    e.claimed = "'" + s.from + "' forces '" + s.to + "'";
                    e.detail = problem;
                    if (problem.empty()) state.spec.add(s.from);
                    break;
                }
                case StepKind::ReturnWords: {
                    std::string problem;
                    std::vector<Word> found;
                    try {
                        auto res = enumerate_return_words(s.x, state.spec, cert.return_cap);
                        found = res.words;
                        if (res.status != SearchStatus::Exhausted)
                            problem = "enumeration hit the cap; set not proven complete";
                    } catch (const Error& err) {
                        problem = err.what();
                    }
                    std::vector<Word> expected = s.expected;
                    std::sort(expected.begin(), expected.end());
                    if (problem.empty() && found != expected) problem = "sets differ";
                    auto& e =
                        add(path, idx, s, problem.empty() ? StepStatus::Pass : StepStatus::Fail);
                    e.claimed = join(expected);
                    e.measured = join(found);
                    e.detail = problem;
                    blocks = s.expected;
                    have_blocks = true;
                    break;
                }
                case StepKind::DiscardBlock: {
                    std::string problem;
                    std::string measured;
                    if (!have_blocks ||
                        std::find(blocks.begin(), blocks.end(), s.block) == blocks.end()) {
                        problem = "block '" + s.block + "' is not in play";
                    } else {
                        try {
                            auto just = discard_initial_block(blocks, s.block,
                                                              state.spec.threshold);
                            measured = just.witness.factor(just.context);
                            if (measured != s.witness)
                                problem = "witness differs";
                        } catch (const Error& err) {
                            problem = err.what();
                        }
                    }
                    auto& e =
                        add(path, idx, s, problem.empty() ? StepStatus::Pass : StepStatus::Fail);
                    e.claimed = s.witness;
                    e.measured = measured;
                    e.detail = problem;
                    std::erase(blocks, s.block);
                    break;
                }
                case StepKind::Roll: {
                    std::string problem;
                    try {
                        if (!have_blocks) fail("NoBlocks", "no block set in play");
                        blocks = s.roll_left ? conjugate_left(blocks, s.piece)
                                             : conjugate_right(blocks, s.piece);
                    } catch (const Error& err) {
                        problem = err.what();
                    }
                    auto& e =
                        add(path, idx, s, problem.empty() ? StepStatus::Pass : StepStatus::Fail);
                    e.claimed = std::string(s.roll_left ? "left" : "right") + " by '" + s.piece +
                                "'";
                    e.measured = join(blocks);
                    e.detail = problem;
                    break;
                }
                case StepKind::Invoke: {
                    std::vector<Word> sorted_triple = s.triple;
                    std::sort(sorted_triple.begin(), sorted_triple.end());
                    std::vector<Word> sorted_blocks = blocks;
                    std::sort(sorted_blocks.begin(), sorted_blocks.end());
                    if (!have_blocks || sorted_triple != sorted_blocks) {
                        auto& e = add(path, idx, s, StepStatus::Fail);
                        e.claimed = join(s.triple);
                        e.measured = join(blocks);
                        e.detail = "invoke triple does not match the blocks in play";
                        break;
                    }
                    std::string diag;
                    bool hyp_ok = false, row_ok = false;
                    try {
                        RoleTriple rt = assign_roles(
                            s.triple, s.forward ? Orientation::Forward : Orientation::Reverse);
                        RoleCheck chk = s.forward ? check_forward(rt) : check_reverse(rt);
                        hyp_ok = chk.ok();
                        if (!hyp_ok) diag = "hypotheses fail on blocks (" + chk.describe() + ")";
                        const TableRow& row = table_row(s.table, s.row);
                        std::vector<Word> row_imgs(row.morphism.img.begin(),
                                                   row.morphism.img.end());
                        std::sort(row_imgs.begin(), row_imgs.end());
                        row_ok = row_imgs == sorted_triple;
                        if (!row_ok) {
                            if (!diag.empty()) diag += "; ";
                            diag += "block set differs from " + row.id() +
                                    " (unverified-by-table)";
                        }
                    } catch (const Error& err) {
                        auto& e = add(path, idx, s, StepStatus::Fail);
                        e.detail = err.what();
                        break;
                    }
                    StepStatus st = (hyp_ok && row_ok) ? StepStatus::Pass : StepStatus::Flag;
                    auto& e = add(path, idx, s, st);
                    e.claimed = (s.forward ? std::string("g") : std::string("h")) +
                                std::to_string(s.row);
                    e.measured = join(s.triple);
                    e.detail = diag;
                    invoked = std::make_pair(s.table, s.row);
                    break;
                }
                case StepKind::Terminal: {
                    std::string problem;
                    if (s.terminal == TerminalKind::Contradiction) {
                        if (!pigeonhole_ok) problem = "no passing pigeonhole in this case";
                        else ++report.contradiction_leaves;
                    } else if (s.terminal == TerminalKind::Morphism) {
                        if (!invoked || invoked->first != s.table || invoked->second != s.row)
                            problem = "no matching invoke step in this case";
                        else {
                            ++report.morphism_leaves;
                            rows_reached.insert({s.table, s.row});
                        }
                    } else {
                        std::string why;
                        if (!covers(s.covered_by, state.spec.forbidden, &why))
                            problem = why;
                        else
                            ++report.covered_links;
                    }
                    auto& e =
                        add(path, idx, s, problem.empty() ? StepStatus::Pass : StepStatus::Fail);
                    e.claimed = s.terminal == TerminalKind::Contradiction ? "contradiction"
                                : s.terminal == TerminalKind::Morphism
                                    ? (s.table == 1 ? "g" : "h") + std::to_string(s.row)
                                    : "covered by " + s.covered_by;
                    e.detail = problem;
                    break;
                }
            }
        }

        // children follow the open alternatives of the final omit_split
        if (!node.steps.empty() && node.steps.back().kind == StepKind::OmitSplit) {
            size_t child = 0;
            for (const Alternative& a : node.steps.back().alternatives) {
                if (!a.covered_by.empty()) continue;
                run_case(node.children[child++], path, state);
            }
        }
    }
};

} // namespace

ReplayReport replay(const Certificate& cert, const ReplayOptions& options) {
    Replayer r(cert, options);
    for (const CaseNode& c : cert.cases) {
        Replayer::State state;
        state.spec.threshold = cert.threshold;
        r.run_case(c, "", state);
    }
    r.report.distinct_morphism_rows = r.rows_reached.size();
    if (options.strict) {
        r.report.failures += r.report.flags;
        for (auto& e : r.report.entries)
            if (e.status == StepStatus::Flag) e.status = StepStatus::Fail;
        r.report.flags = 0;
    }
    return r.report;
}

} // namespace wb
