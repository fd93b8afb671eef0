#include "signpart/theta.hpp"

#include <stdexcept>

namespace signpart {

ThetaDecomposition theta_decompose(const Partition& mu) {
    ThetaDecomposition theta;
    theta.mu = mu;
    theta.degree_plus = 0;
    theta.degree_minus = 0;
    CharColumn column(mu);
    for_each_partition(mu.weight(), [&](const Partition& lambda) {
        const CharValue v = column.value(lambda);
        if (v == 0) return;
        if (v == 1) {
            theta.plus.push_back(lambda);
            theta.degree_plus += degree(lambda);
        } else if (v == -1) {
            theta.minus.push_back(lambda);
            theta.degree_minus += degree(lambda);
        } else {
            throw std::invalid_argument(
                "theta_decompose: " + mu.str() + " is not a sign partition: [" +
                lambda.str() + "](" + mu.str() + ") = " + v.str());
        }
    });
    return theta;
}

CharValue evaluate_theta(const ThetaDecomposition& theta, const Partition& nu) {
    if (theta.mu.weight() != nu.weight())
        throw std::invalid_argument("evaluate_theta: weight mismatch between " +
                                    theta.mu.str() + " and " + nu.str());
    CharColumn column(nu);
    CharValue sum = 0;
    for (const Partition& lambda : theta.plus) sum += column.value(lambda);
    for (const Partition& lambda : theta.minus) sum -= column.value(lambda);
    return sum;
}

CharValue evaluate_theta(const Partition& mu, const Partition& nu) {
    return evaluate_theta(theta_decompose(mu), nu);
}

}  // namespace signpart
