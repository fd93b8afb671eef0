#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "signpart/partition.hpp"

namespace signpart {

/// A character-table entry [lambda](mu). Exact at every n.
using CharValue = boost::multiprecision::cpp_int;

CharValue factorial(int n);

/// Order of the centralizer of an element of cycle type mu:
/// product over distinct part values v with multiplicity m of v^m * m!.
CharValue centralizer_order(const Partition& mu);

/// The centralizer of cycle type mu is abelian iff every part > 1 occurs
/// once and the part 1 occurs at most twice.
bool centralizer_is_abelian(const Partition& mu);

/// n! divided by the product of all hook lengths of lambda.
CharValue degree(const Partition& lambda);

/// 2-adic valuation test: degree(lambda) is odd iff v2(n!) equals the sum of
/// v2 over hook lengths. Never forms the full degree.
bool degree_is_odd(const Partition& lambda);

/// True iff p does not divide degree(lambda), by p-adic valuations.
bool degree_coprime_to(const Partition& lambda, int p);

/// Persistent (shape, remaining class) -> value store backing CharColumn
/// sessions across runs. The on-disk format is a versioned binary blob; a
/// missing, truncated or otherwise corrupt file loads as an empty store.
class CharStore {
public:
    std::optional<CharValue> find(const Partition& shape, const Partition& cls) const;
    void put(const Partition& shape, const Partition& cls, const CharValue& value);
    std::size_t size() const;

    bool load(const std::filesystem::path& file);
    bool save(const std::filesystem::path& file) const;

private:
    struct Key {
        Partition shape;
        Partition cls;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            const std::size_t a = PartitionHash{}(k.shape);
            const std::size_t b = PartitionHash{}(k.cls);
            return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
        }
    };

    mutable std::mutex mutex_;
    std::unordered_map<Key, CharValue, KeyHash> map_;
};

/// One evaluation session for a fixed class mu. Repeated queries against the
/// same mu share the memo, which is keyed by (remaining shape, suffix index)
/// so the class itself stays out of the key. Not thread-safe; use one column
/// per worker. Results never depend on cache state.
class CharColumn {
public:
    explicit CharColumn(Partition mu, CharStore* store = nullptr);

    const Partition& mu() const noexcept { return mu_; }

    /// [lambda](mu). Throws std::invalid_argument on weight mismatch.
    CharValue value(const Partition& lambda);

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

    CharValue eval(const Partition& shape, int i);

    Partition mu_;
    std::vector<Partition> suffixes_;  // suffixes_[i] = (a_i, ..., a_k)
    std::unordered_map<Key, CharValue, KeyHash> memo_;
    CharStore* store_ = nullptr;
};

/// One-shot [lambda](mu) via a fresh session.
CharValue char_value(const Partition& lambda, const Partition& mu);

/// Sum over all lambda of weight n of [lambda](mu) * [lambda](nu).
CharValue orthogonality_sum(const Partition& mu, const Partition& nu);

/// Column orthogonality: the sum above equals z_mu when mu == nu, else 0.
bool orthogonality_check(const Partition& mu, const Partition& nu);

}  // namespace signpart
