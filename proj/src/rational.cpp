#include "wordbench/rational.hpp"

#include <cstdlib>

namespace wb {

Rational parse_rational(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::logic_error&) {
        fail("BadRational", "cannot parse '" + s + "' as p/q");
    }
}

} // namespace wb
