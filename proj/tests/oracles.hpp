// Test-only oracles, kept independent of the library's beta-set path.
#pragma once

#include <utility>
#include <vector>

#include "signpart/partition.hpp"

namespace oracles {

// Known values of the partition function p(0..30).
inline const std::vector<std::size_t> kPartitionCounts = {
    1,    1,    2,    3,    5,    7,    11,   15,   22,   30,   42,
    56,   77,   101,  135,  176,  231,  297,  385,  490,  627,  792,
    1002, 1255, 1575, 1958, 2436, 3010, 3718, 4565, 5604};

// Every rim-hook removal of length a, found cell by cell: a cell whose arm
// plus leg plus one equals a determines one rim hook, removed by the
// row-shift rule. Returns (result, leg) pairs in no particular order.
inline std::vector<std::pair<signpart::Partition, int>>
rim_hook_removals_bruteforce(const signpart::Partition& p, int a) {
    using signpart::Partition;
    std::vector<std::pair<Partition, int>> out;
    const auto& parts = p.parts();
    const Partition conj = signpart::conjugate(p);
    for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
        for (int j = 0; j < parts[static_cast<std::size_t>(i)]; ++j) {
            const int arm = parts[static_cast<std::size_t>(i)] - j - 1;
            const int leg = conj[static_cast<std::size_t>(j)] - i - 1;
            if (arm + leg + 1 != a) continue;
            std::vector<int> q(parts);
            const int last = i + leg;
            for (int r = i; r < last; ++r)
                q[static_cast<std::size_t>(r)] = parts[static_cast<std::size_t>(r) + 1] - 1;
            q[static_cast<std::size_t>(last)] = j;
            while (!q.empty() && q.back() == 0) q.pop_back();
            out.emplace_back(Partition(std::move(q)), leg);
        }
    }
    return out;
}

}  // namespace oracles
