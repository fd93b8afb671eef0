#include "signpart/counting.hpp"

#include <algorithm>

#include "signpart/classify.hpp"

namespace signpart {

CountTable sd_counts(int max_n) {
    CountTable table;
    table.max_n = max_n;
    table.s.assign(static_cast<std::size_t>(max_n) + 1, 0);
    table.s[0] = 1;
    // s(n) = sum of s(0..floor((n-1)/2)); keep the prefix sums incremental.
    CharValue prefix = 1;  // s(0) + ... + s(top)
    int top = 0;
    for (int n = 1; n <= max_n; ++n) {
        const int bound = (n - 1) / 2;
        while (top < bound) {
            ++top;
            prefix += table.s[static_cast<std::size_t>(top)];
        }
        table.s[static_cast<std::size_t>(n)] = prefix;
    }
    return table;
}

CountTable binary_partition_counts(int max_n) {
    CountTable table;
    table.max_n = max_n;
    table.b.assign(static_cast<std::size_t>(max_n) + 1, 0);
    table.b[0] = 1;
    for (long long w = 1; w <= max_n; w *= 2)
        for (long long n = w; n <= max_n; ++n)
            table.b[static_cast<std::size_t>(n)] +=
                table.b[static_cast<std::size_t>(n - w)];
    return table;
}

bool is_non_squashing(const Partition& mu) {
    long long suffix = 0;
    for (std::size_t i = mu.size(); i-- > 1;) {
        suffix += mu[i];
        if (mu[i - 1] < suffix) return false;
    }
    return true;
}

CountTable non_squashing_counts(int max_n) {
    CountTable table;
    table.max_n = max_n;
    table.nsq.assign(static_cast<std::size_t>(max_n) + 1, 0);
    for (int n = 0; n <= max_n; ++n) {
        CharValue count = 0;
        for_each_partition(n, [&](const Partition& mu) {
            if (is_non_squashing(mu)) ++count;
        });
        table.nsq[static_cast<std::size_t>(n)] = count;
    }
    return table;
}

CountTable count_table(int max_n) {
    CountTable table = sd_counts(max_n);
    table.b = binary_partition_counts(max_n).b;
    table.nsq = non_squashing_counts(max_n).nsq;
    return table;
}

std::vector<std::string> verify_count_identities(int max_k) {
    std::vector<std::string> failures;
    const int max_n = 2 * max_k;
    const CountTable s = sd_counts(max_n);
    const CountTable b = binary_partition_counts(max_n);

    for (int k = 1; k <= max_k; ++k) {
        const auto& odd = s.s[static_cast<std::size_t>(2 * k - 1)];
        const auto& even = s.s[static_cast<std::size_t>(2 * k)];
        if (odd != even)
            failures.push_back("s(" + std::to_string(2 * k - 1) + ") = " + odd.str() +
                               " != s(" + std::to_string(2 * k) + ") = " + even.str());
        if (2 * even != b.b[static_cast<std::size_t>(2 * k)])
            failures.push_back("2*s(" + std::to_string(2 * k) + ") = " +
                               CharValue(2 * even).str() + " != b(" +
                               std::to_string(2 * k) + ") = " +
                               b.b[static_cast<std::size_t>(2 * k)].str());
    }
    for (int n = 1; n <= std::min(max_n, 30); ++n) {
        const std::size_t direct = enumerate_class(n, PartitionKind::Sd).size();
        if (s.s[static_cast<std::size_t>(n)] != direct)
            failures.push_back("s(" + std::to_string(n) + ") = " +
                               s.s[static_cast<std::size_t>(n)].str() +
                               " != direct sd count " + std::to_string(direct));
    }
    return failures;
}

}  // namespace signpart
