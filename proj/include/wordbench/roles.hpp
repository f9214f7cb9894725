#pragma once

#include <string>
#include <vector>

#include "wordbench/morphism.hpp"
#include "wordbench/word.hpp"

namespace wb {

enum class Orientation { Forward, Reverse };

const char* to_string(Orientation o);

// Role assignment for a block triple: b shortest, a middle, c longest
// (lengths must be pairwise distinct).
struct RoleTriple {
    Word a, b, c;
    Orientation orientation = Orientation::Forward;
};

// Error AmbiguousRoles on tied lengths.
RoleTriple assign_roles(const std::vector<Word>& images, Orientation orientation);

struct RoleCheck {
    bool chain = false;      // b prefix of a prefix of c (or suffix chain, reversed)
    bool length_ok = false;  // 2|b| >= |c|
    bool overlap_ok = false; // 2|s| >= |b| for the longest common suffix/prefix s of b,c
    Word shared;             // the s (forward) or p (reverse) actually used

    bool ok() const { return chain && length_ok && overlap_ok; }
    std::string describe() const;
};

// Corollary-style hypothesis checks with exact integer arithmetic.
RoleCheck check_forward(const RoleTriple& rt); // prefix chain + common suffix
RoleCheck check_reverse(const RoleTriple& rt); // suffix chain + common prefix

// derive_next([a,b,c]) = [cab, ca, caba] keeps the forward conditions, and the
// new common suffix can be taken as s.a. Requires check_forward(rt) to hold.
bool closure_under_derivation(const RoleTriple& rt, std::string* detail = nullptr);

} // namespace wb
