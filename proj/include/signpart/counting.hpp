#pragma once

#include <string>
#include <vector>

#include "signpart/mn.hpp"
#include "signpart/partition.hpp"

namespace signpart {

/// Count columns indexed 0..max_n. A column not filled by the producing
/// operation is left empty.
struct CountTable {
    int max_n = 0;
    std::vector<CharValue> s;    // strongly decreasing partitions
    std::vector<CharValue> b;    // partitions into powers of 2
    std::vector<CharValue> nsq;  // non-squashing partitions
};

/// s(0) = 1 and s(n) = sum of s(i) for 0 <= i <= (n-1)/2.
CountTable sd_counts(int max_n);

/// b(n) = number of partitions of n with all parts in {1, 2, 4, 8, ...}.
CountTable binary_partition_counts(int max_n);

/// Direct enumeration with the defining predicate (each part at least the
/// sum of all later parts); deliberately not a bespoke generator.
CountTable non_squashing_counts(int max_n);

/// All three columns.
CountTable count_table(int max_n);

/// Every part is >= the sum of all later parts.
bool is_non_squashing(const Partition& mu);

/// Checks, for k <= max_k: s(2k-1) = s(2k) and 2*s(2k) = b(2k); and for
/// n <= min(2*max_k, 30): s(n) equals the direct sd-enumeration count.
/// Returns one line per failure; empty means all identities hold.
std::vector<std::string> verify_count_identities(int max_k);

}  // namespace signpart
