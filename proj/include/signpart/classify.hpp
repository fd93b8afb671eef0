#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "signpart/mn.hpp"
#include "signpart/partition.hpp"

namespace signpart {

enum class PartitionKind { Sign, Up, Sd };

struct Witness {
    Partition lambda;
    CharValue value;  // |value| >= 2
};

/// Verdict for one class mu. Exactly one of support_size / witness is set.
struct ClassificationReport {
    Partition mu;
    int n = 0;
    bool is_sign = false;
    bool is_up = false;
    bool is_sd = false;
    std::optional<std::uint64_t> support_size;  // set when is_sign
    std::optional<Witness> witness;             // set when !is_sign
    std::optional<Partition> up_witness;        // set when !is_up
};

/// Sweeps all lambda of weight |mu| in reverse-lexicographic order. The first
/// lambda with |[lambda](mu)| >= 2 becomes the witness; otherwise the support
/// size (number of nonzero values) is reported. Every value is computed
/// exactly; the witness is the smallest lambda in sweep order regardless of
/// worker count. Only the sign fields of the report are filled.
ClassificationReport is_sign(const Partition& mu, unsigned workers = 1,
                             CharStore* store = nullptr);

/// Number of ways to remove hooks of sizes mu_1, mu_2, ... from lambda down
/// to the empty partition, ignoring signs, saturating at cap.
std::uint64_t count_paths(const Partition& lambda, const Partition& mu,
                          std::uint64_t cap);

struct UpVerdict {
    bool is_up = false;
    std::optional<Partition> witness;  // first lambda with >= 2 paths
};

/// True iff every lambda of weight |mu| admits at most one mu-path.
UpVerdict is_up(const Partition& mu, unsigned workers = 1);

/// True iff every part strictly exceeds the sum of all later parts.
bool is_sd(const Partition& mu);

/// Full report: sign sweep, up sweep, sd check.
ClassificationReport classify(const Partition& mu, unsigned workers = 1,
                              CharStore* store = nullptr);

/// All partitions of n passing the predicate, in reverse-lexicographic order.
std::vector<Partition> enumerate_class(int n, PartitionKind kind,
                                       unsigned workers = 1,
                                       CharStore* store = nullptr);

/// mu = (a, a_1, ..., a_r) with r >= 2 is exceptional when a <= a_1 + ... + a_r
/// and mu together with every tail (a_i, ..., a_r) is a sign partition.
/// Throws std::invalid_argument when mu has fewer than 3 parts.
bool is_exceptional(const Partition& mu, CharStore* store = nullptr);

/// The classification predicate: mu is predicted to be a sign partition iff
///  (1) mu is sd, or
///  (2) the first k-2 parts satisfy the sd inequality and mu ends in (1,1), or
///  (3) the first k-3 parts satisfy it and mu ends in (a, a-1, 1), a >= 2, or
///  (4) the first k-4 parts satisfy it and mu ends in (a, a-1, 2, 1) with
///      a >= 4, (a, a-1, 3, 1) with a >= 5, (3,2,1,1) or (5,3,2,1).
/// The conditions are an inclusive or.
bool conjecture_predicate(const Partition& mu);

struct ConjectureDiscrepancy {
    Partition mu;
    bool predicted = false;    // conjecture_predicate
    bool brute_force = false;  // is_sign sweep
};

/// Compares the predicate against the brute-force sweep for every partition
/// of n. Empty result means full agreement.
std::vector<ConjectureDiscrepancy> verify_conjecture(int n, unsigned workers = 1,
                                                     CharStore* store = nullptr);

}  // namespace signpart
