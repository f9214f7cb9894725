#pragma once

#include <array>
#include <vector>

#include "wordbench/word.hpp"

namespace wb {

// Non-erasing morphism on {0,1,2}*, recorded as [m(0),m(1),m(2)].
struct Morphism {
    std::array<Word, 3> img;

    const Word& operator()(int a) const { return img[static_cast<size_t>(a)]; }

    friend bool operator==(const Morphism& a, const Morphism& b) { return a.img == b.img; }
    friend bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }
};

// Serialized exactly as the bracket notation "[01,2,02]".
Morphism parse_morphism(const std::string& s);
std::string format_morphism(const Morphism& m);

const Morphism& gamma();            // [01,2,02]
const Morphism& gamma_squared();    // [012,02,0102]
const Morphism& identity_morphism();

Word apply_morphism(const Morphism& m, const Word& w);

// compose(m1, m2)(a) = m1(m2(a))
Morphism compose(const Morphism& m1, const Morphism& m2);

// h^R = [h(0)^R, h(1)^R, h(2)^R]
Morphism reverse_morphism(const Morphism& m);

struct Permutation {
    std::array<int, 3> to{0, 1, 2}; // letter a maps to to[a]

    bool is_identity() const { return to[0] == 0 && to[1] == 1 && to[2] == 2; }
    Permutation inverse() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.to == b.to; }
};

Permutation compose(const Permutation& a, const Permutation& b); // a after b
const std::vector<Permutation>& all_permutations();              // the 6 elements of S3

Word permute(const Permutation& s, const Word& w);
// sigma . m . sigma^{-1}: domain and codomain re-indexed together.
Morphism permute(const Permutation& s, const Morphism& m);

// First n letters of the fixed point m^omega(seed).
// Requires m(seed) to start with seed and have length >= 2.
Word fixed_point_prefix(const Morphism& m, char seed, size_t n);

// "Rolling": replace each block u.t by t.u for a common prefix u
// (conjugate_left), or each t.u by u.t for a common suffix u (conjugate_right).
std::vector<Word> conjugate_left(const std::vector<Word>& blocks, const Word& u);
std::vector<Word> conjugate_right(const std::vector<Word>& blocks, const Word& u);

// g' = c (g o gamma^2) c^{-1} = [cab, ca, caba] for g = [a,b,c].
// Validates the conjugation identity g'(x).c == c.g(gamma^2(x)) and fails
// loudly on violation.
Morphism derive_next(const Morphism& g);

} // namespace wb
