#pragma once

#include <vector>

#include "signpart/mn.hpp"
#include "signpart/partition.hpp"

namespace signpart {

/// Signed support of the generalized character attached to a sign class mu:
/// Theta_mu = sum over supp(mu) of [lambda](mu) * [lambda], stored as the
/// two constituent lists rather than a dense class-function vector.
struct ThetaDecomposition {
    Partition mu;
    std::vector<Partition> plus;   // lambda with [lambda](mu) = +1
    std::vector<Partition> minus;  // lambda with [lambda](mu) = -1
    CharValue degree_plus;
    CharValue degree_minus;
};

/// Splits supp(mu) by the sign of [lambda](mu), constituents in
/// reverse-lexicographic order. Requires mu to be a sign partition; throws
/// std::invalid_argument naming the witness otherwise.
ThetaDecomposition theta_decompose(const Partition& mu);

/// Theta_mu evaluated on the class nu: sum over supp(mu) of
/// [lambda](mu) * [lambda](nu). Equals z_mu when nu == mu and 0 otherwise.
CharValue evaluate_theta(const Partition& mu, const Partition& nu);

/// Same, reusing an existing decomposition.
CharValue evaluate_theta(const ThetaDecomposition& theta, const Partition& nu);

}  // namespace signpart
