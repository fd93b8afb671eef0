#include "signpart/odd_degree.hpp"

#include <algorithm>
#include <stdexcept>

#include "signpart/classify.hpp"

namespace signpart {

std::vector<int> binary_decomposition(int n) {
    if (n < 1) throw std::invalid_argument("binary_decomposition requires n >= 1");
    std::vector<int> exponents;
    for (int r = 30; r >= 0; --r)
        if (n & (1 << r)) exponents.push_back(r);
    return exponents;
}

OddDegreeReport verify_theorem5(int n) {
    OddDegreeReport report;
    report.n = n;
    report.exponents = binary_decomposition(n);

    std::vector<int> parts;
    long long exponent_sum = 0;
    for (int r : report.exponents) {
        parts.push_back(1 << r);
        exponent_sum += r;
    }
    report.mu = Partition(std::move(parts));
    report.mu_is_sd = is_sd(report.mu);
    report.sylow_ab_order = std::uint64_t{1} << exponent_sum;

    // One sweep gives the support, the odd-degree census and the sign check.
    std::vector<Partition> support;
    std::vector<CharValue> support_values;
    bool values_ok = true;
    bool sets_match = true;
    std::uint64_t odd = 0;
    CharColumn column(report.mu);
    for_each_partition(n, [&](const Partition& lambda) {
        const CharValue v = column.value(lambda);
        const bool odd_degree = degree_is_odd(lambda);
        if (odd_degree) ++odd;
        if (v != 0) {
            support.push_back(lambda);
            support_values.push_back(v);
            if (v != 1 && v != -1) values_ok = false;
        }
        if ((v != 0) != odd_degree) sets_match = false;
    });
    report.odd_count = odd;
    report.support_matches = sets_match;

    report.theta_ok = values_ok;
    if (values_ok) {
        const CharValue z = centralizer_order(report.mu);
        for_each_partition(n, [&](const Partition& nu) {
            if (!report.theta_ok) return;
            CharColumn nu_column(nu);
            CharValue sum = 0;
            for (std::size_t i = 0; i < support.size(); ++i)
                sum += support_values[i] * nu_column.value(support[i]);
            const CharValue expected = nu == report.mu ? z : CharValue(0);
            if (sum != expected) report.theta_ok = false;
        });
    }
    return report;
}

std::vector<Partition> two_element_sign_classes(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& mu) {
        for (int part : mu.parts())
            if (part & (part - 1)) return;  // not a power of 2
        if (is_sign(mu).is_sign) out.push_back(mu);
    });
    return out;
}

std::vector<Partition> two_element_closed_form(int n) {
    const std::vector<int> exponents = binary_decomposition(n);
    std::vector<int> base;
    for (int r : exponents) base.push_back(1 << r);

    std::vector<Partition> out;
    out.emplace_back(base);
    const int rt = exponents.back();
    if (rt == 1 || rt == 2) {
        std::vector<int> extra(base.begin(), base.end() - 1);
        if (rt == 2) extra.push_back(2);
        extra.push_back(1);
        extra.push_back(1);
        out.emplace_back(std::move(extra));
    }
    return out;
}

OddPrimeProbe odd_prime_probe(int n, int p) {
    if (p < 2) throw std::invalid_argument("prime must be >= 2");
    OddPrimeProbe probe;
    probe.n = n;
    probe.p = p;

    std::vector<int> parts;
    int rest = n;
    long long power = 1;
    while (power * p <= n) power *= p;
    while (rest > 0) {
        while (power > rest) power /= p;
        parts.push_back(static_cast<int>(power));
        rest -= static_cast<int>(power);
    }
    probe.mu = Partition(std::move(parts));

    bool match = true;
    bool sign_class = true;
    CharColumn column(probe.mu);
    for_each_partition(n, [&](const Partition& lambda) {
        const CharValue v = column.value(lambda);
        const bool coprime = degree_coprime_to(lambda, p);
        if (v != 0) {
            ++probe.support_size;
            if (v != 1 && v != -1) sign_class = false;
        }
        if (coprime) ++probe.coprime_count;
        if ((v != 0) != coprime) match = false;
    });
    probe.match = match;
    probe.is_sign_class = sign_class;
    return probe;
}

}  // namespace signpart
