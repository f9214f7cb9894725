#include "wordbench/limits.hpp"

#include <algorithm>
#include <cmath>

#include "wordbench/complexity.hpp"
#include "wordbench/error.hpp"

namespace wb {

namespace {

double cubic(double x) { return ((x - 2) * x + 1) * x - 1; } // x^3 - 2x^2 + x - 1
double cubic_deriv(double x) { return (3 * x - 4) * x + 1; }

} // namespace

Constants compute_constants() {
    // unique real root in (1,2): cubic(1) = -1 < 0 < 1 = cubic(2)
    double lo = 1.0, hi = 2.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (cubic(mid) < 0 ? lo : hi) = mid;
    }
    double lambda = 0.5 * (lo + hi);

    double newton = 1.75;
    for (int i = 0; i < 60; ++i) newton -= cubic(newton) / cubic_deriv(newton);
    if (std::fabs(newton - lambda) > 1e-12)
        fail("InternalError", "bisection and Newton disagree on lambda");

    Constants c;
    c.lambda = lambda;
    c.mu = 2.0 + 1.0 / (lambda * lambda - 1.0);
    c.cubic_residual = cubic(lambda);
    c.identity_residual = c.mu - 2.0 - 1.0 / (lambda * lambda - 1.0);
    return c;
}

FrequencyVector letter_frequencies_eigen() {
    double lambda = compute_constants().lambda;
    double denom = lambda * lambda + 1.0;
    FrequencyVector f;
    f.method = "eigenvector";
    f.rho = {lambda / denom, 1.0 / denom, lambda * (lambda - 1.0) / denom};
    return f;
}

FrequencyVector letter_frequencies_empirical(size_t n) {
    if (n < 10000) fail("PrefixTooShort", "empirical frequencies need n >= 10^4");
    Word prefix = fixed_point_prefix(gamma(), '0', n);
    std::array<size_t, 3> counts{};
    for (char ch : prefix) ++counts[static_cast<size_t>(ch - '0')];
    FrequencyVector f;
    f.method = "empirical(" + std::to_string(n) + ")";
    for (int a = 0; a < 3; ++a)
        f.rho[static_cast<size_t>(a)] =
            static_cast<double>(counts[static_cast<size_t>(a)]) / static_cast<double>(n);
    return f;
}

ScanReport conjecture_scan(const Morphism& m, Orientation orientation, size_t n_max,
                           size_t image_prefix_len, const std::string& id) {
    if (image_prefix_len < 4 * n_max)
        fail("PrefixTooShort", "image prefix cannot support the requested profile");
    ScanReport report;
    report.morphism_id = id.empty() ? format_morphism(m) : id;
    report.morphism = m;
    report.orientation = orientation;
    report.n_max = n_max;

    const Morphism used = orientation == Orientation::Forward ? m : reverse_morphism(m);
    // non-erasing, so a source prefix of the requested length is enough
    Word image = apply_morphism(used, fixed_point_prefix(gamma(), '0', image_prefix_len));
    image.resize(image_prefix_len);
    report.image_prefix_length = image.size();

    ComplexityProfile profile = complexity_profile(image, n_max);
    report.complexity_ok = true;
    for (const auto& e : profile.entries) {
        if (e.count == 2 * e.n + 1 && e.stabilized)
            report.complexity_ok_up_to = e.n;
        else {
            report.complexity_ok = false;
            break;
        }
    }
    report.complexity_ok = report.complexity_ok && report.complexity_ok_up_to == n_max;

    auto [exp, wit] = max_exponent_factor(image);
    report.max_exponent = exp;
    report.witness = wit;
    report.exponent_ok = exp < Rational(5, 2);
    report.mu_gap = compute_constants().mu - exp.value();
    return report;
}

TransferReport exponent_transfer_demo(const Morphism& m, double eps, size_t prefix_len) {
    for (int a = 0; a < 3; ++a)
        if (m(a).empty()) fail("BadMorphism", "transfer demo needs a non-erasing morphism");
    Constants c = compute_constants();
    Word prefix = fixed_point_prefix(gamma(), '0', prefix_len);
    auto [exp, wit] = max_exponent_factor(prefix);
    if (!(exp.value() > c.mu - eps))
        fail("NoWitnessFound", "best exponent in prefix is " + exp.str() + " = " +
                                   std::to_string(exp.value()) + ", need > mu - " +
                                   std::to_string(eps));
    // factor uuu' with |u| = period, u' = leftover prefix of u
    if (wit.length < 2 * wit.period)
        fail("InternalError", "witness with exponent > 2 expected");
    TransferReport t;
    t.source_exponent = exp;
    t.u = prefix.substr(wit.start, wit.period);
    t.u_tail = prefix.substr(wit.start, wit.length - 2 * wit.period);
    Word uuu = prefix.substr(wit.start, wit.length);

    auto counts = [](const Word& w) {
        std::array<long long, 3> n{};
        for (char ch : w) ++n[static_cast<size_t>(ch - '0')];
        return n;
    };
    auto cu = counts(t.u), cuu = counts(uuu);
    std::array<long long, 3> h{};
    for (int a = 0; a < 3; ++a) h[static_cast<size_t>(a)] = static_cast<long long>(m(a).size());

    long long img_u = 0, img_uuu = 0;
    for (size_t a = 0; a < 3; ++a) {
        img_u += h[a] * cu[a];
        img_uuu += h[a] * cuu[a];
    }
    t.image_u_len = static_cast<size_t>(img_u);
    t.image_exponent = Rational(img_uuu, img_u);

    // empirical eps_1: worst frequency deviation over u and uuu'
    FrequencyVector rho = letter_frequencies_eigen();
    double eps1 = 0;
    for (size_t a = 0; a < 3; ++a) {
        eps1 = std::max(eps1, std::fabs(static_cast<double>(cu[a]) / static_cast<double>(t.u.size()) -
                                        rho.rho[a]));
        eps1 = std::max(eps1, std::fabs(static_cast<double>(cuu[a]) / static_cast<double>(uuu.size()) -
                                        rho.rho[a]));
    }
    t.frequency_eps = eps1;
    double num = 0, den = 0;
    for (size_t a = 0; a < 3; ++a) {
        num += static_cast<double>(h[a]) * (rho.rho[a] - eps1);
        den += static_cast<double>(h[a]) * (rho.rho[a] + eps1);
    }
    t.ratio = num / den; // 1 - eps in the chain
    t.chain_bound = (c.mu - eps) * t.ratio;
    t.bound_met = t.image_exponent.value() > t.chain_bound;
    return t;
}

} // namespace wb
