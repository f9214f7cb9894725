#include "wordbench/roles.hpp"

#include <algorithm>

namespace wb {

const char* to_string(Orientation o) {
    return o == Orientation::Forward ? "forward" : "reverse";
}

RoleTriple assign_roles(const std::vector<Word>& images, Orientation orientation) {
    if (images.size() != 3) fail("AmbiguousRoles", "role assignment needs exactly 3 words");
    std::vector<Word> sorted = images;
    std::sort(sorted.begin(), sorted.end(),
              [](const Word& x, const Word& y) { return x.size() < y.size(); });
    if (sorted[0].size() == sorted[1].size() || sorted[1].size() == sorted[2].size())
        fail("AmbiguousRoles", "tied lengths between blocks");
    return RoleTriple{sorted[1], sorted[0], sorted[2], orientation};
}

std::string RoleCheck::describe() const {
    std::string out;
    out += chain ? "chain ok" : "chain broken";
    out += length_ok ? ", 2|b|>=|c| ok" : ", 2|b|<|c|";
    out += overlap_ok ? ", 2|s|>=|b| ok (s='" + shared + "')"
                      : ", shared part too short (s='" + shared + "')";
    return out;
}

RoleCheck check_forward(const RoleTriple& rt) {
    RoleCheck r;
    r.chain = rt.a.starts_with(rt.b) && rt.c.starts_with(rt.a);
    r.length_ok = 2 * rt.b.size() >= rt.c.size();
    r.shared = longest_common_suffix(rt.b, rt.c);
    r.overlap_ok = 2 * r.shared.size() >= rt.b.size();
    return r;
}

RoleCheck check_reverse(const RoleTriple& rt) {
    RoleCheck r;
    r.chain = rt.a.ends_with(rt.b) && rt.c.ends_with(rt.a);
    r.length_ok = 2 * rt.b.size() >= rt.c.size();
    r.shared = longest_common_prefix(rt.b, rt.c);
    r.overlap_ok = 2 * r.shared.size() >= rt.b.size();
    return r;
}

bool closure_under_derivation(const RoleTriple& rt, std::string* detail) {
    auto note = [&](const std::string& msg) {
        if (detail) *detail = msg;
        return false;
    };
    if (!check_forward(rt).ok()) return note("input triple fails the forward conditions");
    Morphism g{{rt.a, rt.b, rt.c}};
    Morphism next = derive_next(g);
    RoleTriple derived{next(0), next(1), next(2), Orientation::Forward};
    RoleCheck chk = check_forward(derived);
    if (!chk.ok()) return note("derived triple fails: " + chk.describe());
    // the paper's explicit construction: S = s.a is a common suffix of B=ca, C=caba
    Word s = longest_common_suffix(rt.b, rt.c);
    Word sa = s + rt.a;
    if (!next(1).ends_with(sa) || !next(2).ends_with(sa))
        return note("s.a is not a common suffix of the derived pair");
    if (2 * sa.size() < next(1).size()) return note("s.a is shorter than |B|/2");
    if (detail) *detail = "ok";
    return true;
}

} // namespace wb
