#include "wordbench/morphism.hpp"

#include <algorithm>

namespace wb {

Morphism parse_morphism(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        fail("BadMorphism", "expected bracket notation [w0,w1,w2], got '" + s + "'");
    std::array<Word, 3> img;
    size_t pos = 1, slot = 0;
    while (slot < 3) {
        size_t end = s.find_first_of(",]", pos);
        if (end == std::string::npos) fail("BadMorphism", "unterminated image list in '" + s + "'");
        img[slot] = s.substr(pos, end - pos);
        require_ternary(img[slot]);
        if (img[slot].empty()) fail("BadMorphism", "erasing image in '" + s + "'");
        pos = end + 1;
        ++slot;
        if (slot < 3 && s[end] != ',') fail("BadMorphism", "expected three images in '" + s + "'");
    }
    if (pos != s.size()) fail("BadMorphism", "trailing characters in '" + s + "'");
    return Morphism{img};
}

std::string format_morphism(const Morphism& m) {
    return "[" + m.img[0] + "," + m.img[1] + "," + m.img[2] + "]";
}

const Morphism& gamma() {
    static const Morphism g{{"01", "2", "02"}};
    return g;
}

const Morphism& gamma_squared() {
    static const Morphism g2 = compose(gamma(), gamma());
    return g2;
}

const Morphism& identity_morphism() {
    static const Morphism id{{"0", "1", "2"}};
    return id;
}

Word apply_morphism(const Morphism& m, const Word& w) {
    size_t total = 0;
    for (char c : w) total += m(c - '0').size();
    Word out;
    out.reserve(total);
    for (char c : w) out += m(c - '0');
    return out;
}

Morphism compose(const Morphism& m1, const Morphism& m2) {
    return Morphism{{apply_morphism(m1, m2(0)), apply_morphism(m1, m2(1)),
                     apply_morphism(m1, m2(2))}};
}

Morphism reverse_morphism(const Morphism& m) {
    return Morphism{{reverse_word(m(0)), reverse_word(m(1)), reverse_word(m(2))}};
}

Permutation Permutation::inverse() const {
    Permutation inv;
    for (int a = 0; a < 3; ++a) inv.to[static_cast<size_t>(to[static_cast<size_t>(a)])] = a;
    return inv;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation r;
    for (int x = 0; x < 3; ++x)
        r.to[static_cast<size_t>(x)] = a.to[static_cast<size_t>(b.to[static_cast<size_t>(x)])];
    return r;
}

const std::vector<Permutation>& all_permutations() {
    static const std::vector<Permutation> perms = [] {
        std::vector<Permutation> out;
        std::array<int, 3> p{0, 1, 2};
        do {
            out.push_back(Permutation{p});
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return perms;
}

Word permute(const Permutation& s, const Word& w) {
    Word out = w;
    for (char& c : out) c = static_cast<char>('0' + s.to[static_cast<size_t>(c - '0')]);
    return out;
}

Morphism permute(const Permutation& s, const Morphism& m) {
    // result(s(a)) = s(m(a))
    Morphism out;
    for (int a = 0; a < 3; ++a)
        out.img[static_cast<size_t>(s.to[static_cast<size_t>(a)])] = permute(s, m(a));
    return out;
}

Word fixed_point_prefix(const Morphism& m, char seed, size_t n) {
    if (!is_ternary_letter(seed)) fail("BadLetter", "seed must be one of 0,1,2");
    const Word& first = m(seed - '0');
    for (int a = 0; a < 3; ++a)
        if (m(a).empty()) fail("NotProlongable", "morphism is erasing");
    if (first.size() < 2 || first[0] != seed)
        fail("NotProlongable",
             format_morphism(m) + " is not prolongable on " + std::string(1, seed));

    // Expand a growing prefix; each pass maps the current prefix through m,
    // so the buffer never holds much more than the final requested length.
    Word w(1, seed);
    while (w.size() < n) {
        Word next;
        next.reserve(2 * n);
        for (char c : w) {
            next += m(c - '0');
            if (next.size() >= n) break;
        }
        if (next.size() == w.size()) fail("NotProlongable", "fixed point does not grow");
        w = std::move(next);
    }
    w.resize(n);
    return w;
}

std::vector<Word> conjugate_left(const std::vector<Word>& blocks, const Word& u) {
    std::vector<Word> out;
    out.reserve(blocks.size());
    for (const Word& b : blocks) {
        if (!b.starts_with(u))
            fail("NotCommonPrefix", "'" + u + "' is not a prefix of block '" + b + "'");
        out.push_back(b.substr(u.size()) + u);
    }
    return out;
}

std::vector<Word> conjugate_right(const std::vector<Word>& blocks, const Word& u) {
    std::vector<Word> out;
    out.reserve(blocks.size());
    for (const Word& b : blocks) {
        if (!b.ends_with(u))
            fail("NotCommonSuffix", "'" + u + "' is not a suffix of block '" + b + "'");
        out.push_back(u + b.substr(0, b.size() - u.size()));
    }
    return out;
}

Morphism derive_next(const Morphism& g) {
    const Word& a = g(0);
    const Word& b = g(1);
    const Word& c = g(2);
    Morphism next{{c + a + b, c + a, c + a + b + a}};
    // g'(x).c == c.g(gamma^2(x)) for every letter; guards transcription errors.
    for (int x = 0; x < 3; ++x) {
        Word lhs = next(x) + c;
        Word rhs = c + apply_morphism(g, gamma_squared()(x));
        if (lhs != rhs)
            fail("ConjugationIdentity",
                 "derive_next identity violated for " + format_morphism(g) + " at letter " +
                     std::to_string(x));
    }
    return next;
}

} // namespace wb
