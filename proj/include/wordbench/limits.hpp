#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "wordbench/morphism.hpp"
#include "wordbench/rational.hpp"
#include "wordbench/repetition.hpp"
#include "wordbench/roles.hpp"

namespace wb {

// lambda = real root of x^3 - 2x^2 + x - 1 in (1,2); mu = 2 + 1/(lambda^2-1).
// The paper prints the cubic as "x^3-2x+x-1"; the form used here is the one
// consistent with the printed value 1.7548777 and with the characteristic
// polynomial of gamma's incidence matrix.
struct Constants {
    double lambda = 0;
    double mu = 0;
    double cubic_residual = 0;    // lambda^3 - 2 lambda^2 + lambda - 1
    double identity_residual = 0; // mu - 2 - 1/(lambda^2 - 1)
};

// Bisection cross-validated against Newton iteration to 1e-12 agreement.
Constants compute_constants();

struct FrequencyVector {
    std::array<double, 3> rho{};
    std::string method;
};

// Dominant eigenvector of gamma's incidence matrix, in closed form:
// rho = (lambda, 1, lambda(lambda-1)) / (lambda^2 + 1).
FrequencyVector letter_frequencies_eigen();
// Letter counts in fixed_point_prefix(gamma, '0', n); requires n >= 10^4.
FrequencyVector letter_frequencies_empirical(size_t n);

struct ScanReport {
    std::string morphism_id; // "g9", "h11", "identity"
    Morphism morphism;
    Orientation orientation = Orientation::Forward;
    size_t image_prefix_length = 0;
    size_t n_max = 0;
    size_t complexity_ok_up_to = 0; // largest n <= n_max with C(n) == 2n+1, stabilized
    bool complexity_ok = false;
    Rational max_exponent{1};
    RepetitionWitness witness;
    bool exponent_ok = false; // max exponent < 5/2
    double mu_gap = 0;        // mu - observed max exponent

    bool ok() const { return complexity_ok && exponent_ok; }
};

// Desk-scale evidence for the conjectures: the image of a G-prefix under m
// (orientation Forward) or m^R (Reverse) is profiled up to n_max and scanned
// for (5/2)>= powers. Not a proof. Error PrefixTooShort if the image prefix
// cannot support the profile.
ScanReport conjecture_scan(const Morphism& m, Orientation orientation, size_t n_max,
                           size_t image_prefix_len, const std::string& id = "");

struct TransferReport {
    Rational source_exponent{1}; // exponent of the G-factor uuu' found
    Word u, u_tail;              // u and u' (u' a prefix of u)
    size_t image_u_len = 0;
    Rational image_exponent{1}; // |h(uuu')| / |h(u)|
    double frequency_eps = 0;   // empirical eps_1 over u and uuu'
    double ratio = 0;           // sum |h(a)|(rho_a - eps) / sum |h(a)|(rho_a + eps)
    double chain_bound = 0;     // (mu - eps2)(1 - eps)
    bool bound_met = false;     // image exponent > chain bound
};

// Locates a factor uuu' of a G-prefix with exponent > mu - eps and pushes it
// through m, verifying the frequency chain bound from the exponent-transfer
// argument. Error NoWitnessFound when the prefix has no such factor (the
// message reports the best achieved exponent).
TransferReport exponent_transfer_demo(const Morphism& m, double eps,
                                      size_t prefix_len = 20000);

} // namespace wb
