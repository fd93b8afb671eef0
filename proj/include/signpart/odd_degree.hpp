#pragma once

#include <cstdint>
#include <vector>

#include "signpart/mn.hpp"
#include "signpart/partition.hpp"

namespace signpart {

/// Census relating the binary-expansion class of n to the odd-degree
/// irreducible characters of S_n.
struct OddDegreeReport {
    int n = 0;
    std::vector<int> exponents;    // r_1 > ... > r_t >= 0 with sum of 2^{r_i} = n
    Partition mu;                  // (2^{r_1}, ..., 2^{r_t})
    bool mu_is_sd = false;
    std::uint64_t sylow_ab_order = 0;  // 2^{r_1 + ... + r_t} = |P/P'| for P a 2-Sylow
    std::uint64_t odd_count = 0;       // number of odd-degree characters
    bool support_matches = false;      // supp(mu) equals the odd-degree set
    bool theta_ok = false;             // Theta_mu vanishes off mu, value z_mu on mu

    bool ok() const {
        return mu_is_sd && support_matches && theta_ok &&
               odd_count == sylow_ab_order;
    }
};

/// Strictly decreasing exponents of the binary expansion of n >= 1.
std::vector<int> binary_decomposition(int n);

/// Builds the binary-expansion class of n and checks every claim in the
/// report. Failures are recorded in the report, never thrown.
OddDegreeReport verify_theorem5(int n);

/// All sign partitions of n whose parts are powers of 2 (1 included), by
/// brute-force sweep, in reverse-lexicographic order.
std::vector<Partition> two_element_sign_classes(int n);

/// The closed form the sweep is expected to match: the binary-expansion
/// class itself, plus (..., 1^2) when r_t = 1, plus (..., 2, 1^2) when
/// r_t = 2.
std::vector<Partition> two_element_closed_form(int n);

/// Exploratory odd-prime analogue: the p-ary expansion class of n versus the
/// characters of degree coprime to p. Informational only; at odd p the class
/// usually fails to be a sign class, so no unit-coefficient signed sum of the
/// coprime-degree characters can play the role Theta_mu plays at p = 2.
struct OddPrimeProbe {
    int n = 0;
    int p = 0;
    Partition mu;                    // digit c at p^r contributes c parts p^r
    std::uint64_t support_size = 0;  // lambda with [lambda](mu) != 0
    std::uint64_t coprime_count = 0; // lambda with p not dividing the degree
    bool match = false;              // the two sets coincide
    bool is_sign_class = false;      // all values of the sweep in {0, 1, -1}
};

OddPrimeProbe odd_prime_probe(int n, int p);

}  // namespace signpart
