#include "wordbench/digraph.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace wb {

bool TwoFactorDigraph::strongly_connected() const {
    std::array<std::array<bool, 3>, 3> adj{};
    for (const Word& e : edges) adj[static_cast<size_t>(e[0] - '0')][static_cast<size_t>(e[1] - '0')] = true;
    // reachability in both directions from every vertex
    auto reaches_all = [&](bool transpose) {
        for (int s = 0; s < 3; ++s) {
            std::array<bool, 3> seen{};
            seen[static_cast<size_t>(s)] = true;
            for (int pass = 0; pass < 3; ++pass)
                for (int u = 0; u < 3; ++u)
                    for (int v = 0; v < 3; ++v) {
                        bool edge = transpose ? adj[static_cast<size_t>(v)][static_cast<size_t>(u)]
                                              : adj[static_cast<size_t>(u)][static_cast<size_t>(v)];
                        if (seen[static_cast<size_t>(u)] && edge) seen[static_cast<size_t>(v)] = true;
                    }
            if (!(seen[0] && seen[1] && seen[2])) return false;
        }
        return true;
    };
    return reaches_all(false) && reaches_all(true);
}

const std::vector<std::set<Word>>& canonical_s_sets() {
    static const std::vector<std::set<Word>> s = {
        {"00", "01", "02", "10", "20"}, {"01", "02", "10", "11", "20"},
        {"01", "02", "10", "12", "20"}, {"00", "01", "11", "12", "20"},
        {"00", "01", "10", "12", "20"}, {"00", "01", "12", "20", "21"},
        {"00", "01", "02", "12", "20"}};
    return s;
}

const std::vector<std::vector<Word>>& canonical_t_sets() {
    static const std::vector<std::vector<Word>> t = {
        {"11", "12", "21", "22"}, {"00", "12", "21", "22"}, {"00", "11", "21", "22"},
        {"02", "10", "21", "22"}, {"02", "11", "21", "22"}, {"02", "10", "11", "22"},
        {"10", "11", "21", "22"}};
    return t;
}

const std::vector<Word>& t_set(const std::string& name) {
    if (name.size() == 2 && (name[0] == 'T' || name[0] == 't') && name[1] >= '1' && name[1] <= '7')
        return canonical_t_sets()[static_cast<size_t>(name[1] - '1')];
    fail("UnknownCaseName", "'" + name + "' is not one of T1..T7");
}

namespace {

std::set<Word> permute_set(const Permutation& s, const std::set<Word>& edges) {
    std::set<Word> out;
    for (const Word& e : edges) out.insert(permute(s, e));
    return out;
}

} // namespace

std::optional<CaseMatch> canonical_case(const std::set<Word>& length2_factors,
                                        std::string* reason) {
    auto why = [&](const std::string& r) {
        if (reason) *reason = r;
        return std::nullopt;
    };
    for (const Word& e : length2_factors) {
        if (e.size() != 2) return why("'" + e + "' is not a length-2 word");
        require_ternary(e);
    }
    if (length2_factors.size() != 5)
        return why("expected 5 length-2 factors, got " + std::to_string(length2_factors.size()));
    TwoFactorDigraph d{length2_factors};
    if (!d.strongly_connected()) return why("digraph is not strongly connected");
    for (const Permutation& sigma : all_permutations()) {
        std::set<Word> image = permute_set(sigma, length2_factors);
        for (size_t i = 0; i < canonical_s_sets().size(); ++i)
            if (image == canonical_s_sets()[i])
                return CaseMatch{sigma, static_cast<int>(i) + 1};
    }
    return why("no permutation maps the set onto any of S1..S7");
}

CaseEnumerationReport enumerate_cases(bool throw_on_mismatch) {
    CaseEnumerationReport report;
    std::vector<Word> all_edges;
    for (char x = '0'; x <= '2'; ++x)
        for (char y = '0'; y <= '2'; ++y) all_edges.push_back({x, y});

    std::vector<std::set<Word>> connected;
    std::vector<bool> pick(9, false);
    std::fill(pick.begin(), pick.begin() + 5, true);
    std::sort(pick.begin(), pick.end());
    do {
        std::set<Word> edges;
        for (size_t i = 0; i < 9; ++i)
            if (pick[i]) edges.insert(all_edges[i]);
        ++report.five_edge_subsets;
        if (TwoFactorDigraph{edges}.strongly_connected()) connected.push_back(edges);
    } while (std::next_permutation(pick.begin(), pick.end()));
    report.strongly_connected = connected.size();

    // group into orbits under the 6 permutations
    std::map<std::set<Word>, size_t> orbit_of;
    std::vector<std::set<std::set<Word>>> orbits;
    for (const auto& edges : connected) {
        if (orbit_of.count(edges)) continue;
        std::set<std::set<Word>> orbit;
        for (const Permutation& sigma : all_permutations()) orbit.insert(permute_set(sigma, edges));
        size_t id = orbits.size();
        for (const auto& member : orbit) orbit_of[member] = id;
        orbits.push_back(std::move(orbit));
    }
    report.orbit_count = orbits.size();

    if (report.orbit_count != 7)
        report.failures.push_back("expected 7 orbits, found " + std::to_string(report.orbit_count));

    // each canonical S_i must represent a distinct orbit
    std::set<size_t> seen;
    for (size_t i = 0; i < canonical_s_sets().size(); ++i) {
        auto it = orbit_of.find(canonical_s_sets()[i]);
        if (it == orbit_of.end()) {
            report.failures.push_back("S" + std::to_string(i + 1) +
                                      " is not strongly connected in the enumeration");
            continue;
        }
        if (!seen.insert(it->second).second)
            report.failures.push_back("S" + std::to_string(i + 1) + " repeats another orbit");
    }
    report.orbits_match_s_sets = seen.size() == 7 && report.orbit_count == 7;

    report.all_stabilizers_trivial = true;
    for (const auto& s : canonical_s_sets()) {
        size_t stab = 0;
        for (const Permutation& sigma : all_permutations())
            if (permute_set(sigma, s) == s) ++stab;
        if (stab != 1) {
            report.all_stabilizers_trivial = false;
            report.failures.push_back("non-trivial automorphism group");
        }
    }

    if (throw_on_mismatch && !report.failures.empty())
        fail("StructureMismatch", report.failures.front());
    return report;
}

} // namespace wb
