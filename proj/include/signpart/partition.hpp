#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace signpart {

/// Weakly decreasing list of positive integers. A partition of n labels both
/// an irreducible character of S_n (shape) and a conjugacy class (cycle type).
/// The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Parses `item ("," item)*` with `item := INT | INT "^" INT`
    /// (value^multiplicity). Whitespace is ignored. "4,1^2" -> (4,1,1).
    /// Throws std::invalid_argument naming the offending token.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int weight() const noexcept { return weight_; }

    /// Canonical rendering: comma-separated, repeats exponent-compressed.
    /// (5,2,1,1) -> "5,2,1^2". The empty partition renders as "".
    std::string str() const;

    bool operator==(const Partition&) const = default;
    /// Lexicographic on the part lists. Among partitions of equal weight,
    /// descending `<` order is exactly the enumeration order below.
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

/// Streaming form of enumerate_partitions, same order.
template <class F>
void for_each_partition(int n, F&& visit) {
    if (n < 0) return;
    if (n == 0) {
        visit(Partition{});
        return;
    }
    std::vector<int> p{n};
    for (;;) {
        visit(Partition(p));
        int i = static_cast<int>(p.size()) - 1;
        int rest = 0;
        while (i >= 0 && p[static_cast<std::size_t>(i)] == 1) {
            ++rest;
            --i;
        }
        if (i < 0) break;
        p[static_cast<std::size_t>(i)] -= 1;
        ++rest;
        const int v = p[static_cast<std::size_t>(i)];
        p.resize(static_cast<std::size_t>(i) + 1);
        while (rest > 0) {
            const int take = rest < v ? rest : v;
            p.push_back(take);
            rest -= take;
        }
    }
}

/// First-column hook lengths padded to a declared number of beads:
/// betas[i] = parts[i] + (length - 1 - i), missing parts read as 0.
struct BetaSet {
    std::vector<int> betas;  // strictly decreasing, all >= 0

    Partition to_partition() const;
};

/// Requires length >= number of parts; throws std::invalid_argument otherwise.
BetaSet to_beta(const Partition& p, int length);

struct HookRemoval {
    Partition result;
    int leg_length = 0;
    int hook_length = 0;
};

/// All ways to remove a single a-hook from p, one per bead b with b >= a and
/// b - a unoccupied. leg_length counts the beads strictly between b - a and b.
/// Ordered by descending b. Empty when no a-hook exists.
std::vector<HookRemoval> remove_hooks(const Partition& p, int a);

struct HookAddition {
    Partition result;
    int leg_length = 0;
};

/// All ways to add a single a-hook to p (bead b -> b + a on an abacus with
/// enough padding beads that every landing row exists).
std::vector<HookAddition> add_hooks(const Partition& p, int a);

/// Hook lengths of every cell of the Young diagram, row-major. n values.
std::vector<int> hook_lengths(const Partition& p);

Partition conjugate(const Partition& p);

/// When p = (n-k, 1^k), returns the leg k; otherwise nullopt.
/// The empty partition is not considered a hook.
std::optional<int> is_hook_shape(const Partition& p);

}  // namespace signpart
