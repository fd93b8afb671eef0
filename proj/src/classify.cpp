#include "signpart/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "signpart/parallel.hpp"

namespace signpart {

namespace {

// Per-lambda outcome of a sign sweep chunk.
enum class ValueKind : unsigned char { Zero, PlusMinusOne, Witness };

}  // namespace

ClassificationReport is_sign(const Partition& mu, unsigned workers,
                             CharStore* store) {
    ClassificationReport report;
    report.mu = mu;
    report.n = mu.weight();

    const std::vector<Partition> lambdas = enumerate_partitions(mu.weight());
    std::vector<ValueKind> kind(lambdas.size(), ValueKind::Zero);
    std::vector<CharValue> big(lambdas.size());

    parallel_chunks(lambdas.size(), workers, [&](std::size_t begin, std::size_t end) {
        CharColumn column(mu, store);
        for (std::size_t i = begin; i < end; ++i) {
            const CharValue v = column.value(lambdas[i]);
            if (v == 0) {
                kind[i] = ValueKind::Zero;
            } else if (v == 1 || v == -1) {
                kind[i] = ValueKind::PlusMinusOne;
            } else {
                kind[i] = ValueKind::Witness;
                big[i] = v;
                // Later lambdas in this chunk cannot produce a smaller
                // witness and the support count is moot once one exists.
                break;
            }
        }
    });

    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (kind[i] == ValueKind::Witness) {
            report.is_sign = false;
            report.witness = Witness{lambdas[i], big[i]};
            return report;
        }
    }
    std::uint64_t support = 0;
    for (const ValueKind k : kind)
        if (k == ValueKind::PlusMinusOne) ++support;
    report.is_sign = true;
    report.support_size = support;
    return report;
}

namespace {

// Session counterpart of CharColumn for path counting: number of ways to
// peel the parts of mu off a shape, signs ignored, saturating at cap.
class PathCounter {
public:
    PathCounter(Partition mu, std::uint64_t cap)
        : mu_(std::move(mu)), cap_(cap) {}

    std::uint64_t count(const Partition& lambda) {
        if (lambda.weight() != mu_.weight())
            throw std::invalid_argument(
                "count_paths: weight mismatch: |" + lambda.str() + "| = " +
                std::to_string(lambda.weight()) + " but |" + mu_.str() +
                "| = " + std::to_string(mu_.weight()));
        return eval(lambda, 0);
    }

private:
    struct Key {
        Partition shape;
        int suffix = 0;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            return PartitionHash{}(k.shape) * 31 + static_cast<std::size_t>(k.suffix);
        }
    };

    std::uint64_t eval(const Partition& shape, int i) {
        if (i == static_cast<int>(mu_.size())) return 1;
        Key key{shape, i};
        if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::uint64_t total = 0;
        for (const HookRemoval& h :
             remove_hooks(shape, mu_[static_cast<std::size_t>(i)])) {
            total += eval(h.result, i + 1);
            if (total >= cap_) {
                total = cap_;
                break;
            }
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    Partition mu_;
    std::uint64_t cap_;
    std::unordered_map<Key, std::uint64_t, KeyHash> memo_;
};

}  // namespace

std::uint64_t count_paths(const Partition& lambda, const Partition& mu,
                          std::uint64_t cap) {
    PathCounter counter(mu, cap);
    return counter.count(lambda);
}

UpVerdict is_up(const Partition& mu, unsigned workers) {
    const std::vector<Partition> lambdas = enumerate_partitions(mu.weight());
    std::vector<unsigned char> multi(lambdas.size(), 0);

    parallel_chunks(lambdas.size(), workers, [&](std::size_t begin, std::size_t end) {
        PathCounter counter(mu, 2);
        for (std::size_t i = begin; i < end; ++i) {
            if (counter.count(lambdas[i]) >= 2) {
                multi[i] = 1;
                break;
            }
        }
    });

    for (std::size_t i = 0; i < lambdas.size(); ++i)
        if (multi[i]) return {false, lambdas[i]};
    return {true, std::nullopt};
}

bool is_sd(const Partition& mu) {
    long long suffix = 0;
    for (std::size_t i = mu.size(); i-- > 1;) {
        suffix += mu[i];
        if (mu[i - 1] <= suffix) return false;
    }
    return true;
}

ClassificationReport classify(const Partition& mu, unsigned workers,
                              CharStore* store) {
    ClassificationReport report = is_sign(mu, workers, store);
    const UpVerdict up = is_up(mu, workers);
    report.is_up = up.is_up;
    report.up_witness = up.witness;
    report.is_sd = is_sd(mu);
    return report;
}

std::vector<Partition> enumerate_class(int n, PartitionKind kind,
                                       unsigned workers, CharStore* store) {
    const std::vector<Partition> all = enumerate_partitions(n);
    std::vector<unsigned char> keep(all.size(), 0);
    switch (kind) {
        case PartitionKind::Sd:
            for (std::size_t i = 0; i < all.size(); ++i) keep[i] = is_sd(all[i]);
            break;
        case PartitionKind::Up:
            parallel_for(all.size(), workers,
                         [&](std::size_t i) { keep[i] = is_up(all[i]).is_up; });
            break;
        case PartitionKind::Sign:
            parallel_for(all.size(), workers, [&](std::size_t i) {
                keep[i] = is_sign(all[i], 1, store).is_sign;
            });
            break;
    }
    std::vector<Partition> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (keep[i]) out.push_back(all[i]);
    return out;
}

bool is_exceptional(const Partition& mu, CharStore* store) {
    if (mu.size() < 3)
        throw std::invalid_argument("is_exceptional requires at least 3 parts, got " +
                                    mu.str());
    const int a = mu[0];
    const int t = mu.weight() - a;
    if (a > t) return false;
    // Tails from the shortest up: cheap rejections first.
    for (std::size_t i = mu.size() - 1; i >= 1; --i) {
        const Partition tail(std::vector<int>(
            mu.parts().begin() + static_cast<std::ptrdiff_t>(i), mu.parts().end()));
        if (!is_sign(tail, 1, store).is_sign) return false;
    }
    return is_sign(mu, 1, store).is_sign;
}

bool conjecture_predicate(const Partition& mu) {
    const auto& a = mu.parts();
    const int k = static_cast<int>(a.size());

    std::vector<long long> tail_sum(static_cast<std::size_t>(k) + 1, 0);
    for (int i = k - 1; i >= 0; --i)
        tail_sum[static_cast<std::size_t>(i)] =
            tail_sum[static_cast<std::size_t>(i) + 1] + a[static_cast<std::size_t>(i)];

    // a_1 > a_2 + ... for the first `depth` parts (1-based i = 1..depth).
    const auto sd_prefix = [&](int depth) {
        for (int i = 0; i < depth; ++i)
            if (a[static_cast<std::size_t>(i)] <= tail_sum[static_cast<std::size_t>(i) + 1])
                return false;
        return true;
    };

    if (sd_prefix(k - 1)) return true;
    if (k >= 2 && a[static_cast<std::size_t>(k) - 2] == 1 &&
        a[static_cast<std::size_t>(k) - 1] == 1 && sd_prefix(k - 2))
        return true;
    if (k >= 3) {
        const int x = a[static_cast<std::size_t>(k) - 3];
        const int y = a[static_cast<std::size_t>(k) - 2];
        const int z = a[static_cast<std::size_t>(k) - 1];
        if (x >= 2 && y == x - 1 && z == 1 && sd_prefix(k - 3)) return true;
    }
    if (k >= 4) {
        const int w = a[static_cast<std::size_t>(k) - 4];
        const int x = a[static_cast<std::size_t>(k) - 3];
        const int y = a[static_cast<std::size_t>(k) - 2];
        const int z = a[static_cast<std::size_t>(k) - 1];
        const bool tail_match =
            (w >= 4 && x == w - 1 && y == 2 && z == 1) ||
            (w >= 5 && x == w - 1 && y == 3 && z == 1) ||
            (w == 3 && x == 2 && y == 1 && z == 1) ||
            (w == 5 && x == 3 && y == 2 && z == 1);
        if (tail_match && sd_prefix(k - 4)) return true;
    }
    return false;
}

std::vector<ConjectureDiscrepancy> verify_conjecture(int n, unsigned workers,
                                                     CharStore* store) {
    const std::vector<Partition> all = enumerate_partitions(n);
    std::vector<unsigned char> predicted(all.size(), 0);
    std::vector<unsigned char> actual(all.size(), 0);
    parallel_for(all.size(), workers, [&](std::size_t i) {
        predicted[i] = conjecture_predicate(all[i]);
        actual[i] = is_sign(all[i], 1, store).is_sign;
    });
    std::vector<ConjectureDiscrepancy> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (predicted[i] != actual[i])
            out.push_back({all[i], predicted[i] != 0, actual[i] != 0});
    return out;
}

}  // namespace signpart
