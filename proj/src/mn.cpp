#include "signpart/mn.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <utility>

namespace signpart {

CharValue factorial(int n) {
    CharValue f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

CharValue centralizer_order(const Partition& mu) {
    CharValue z = 1;
    const auto& parts = mu.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const std::size_t m = j - i;
        for (std::size_t l = 1; l <= m; ++l) z *= parts[i] * static_cast<int>(l);
        i = j;
    }
    return z;
}

bool centralizer_is_abelian(const Partition& mu) {
    const auto& parts = mu.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const std::size_t m = j - i;
        if (parts[i] > 1 && m > 1) return false;
        if (parts[i] == 1 && m > 2) return false;
        i = j;
    }
    return true;
}

CharValue degree(const Partition& lambda) {
    CharValue d = factorial(lambda.weight());
    for (int h : hook_lengths(lambda)) d /= h;
    return d;
}

namespace {

int valuation(int x, int p) {
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// Legendre: v_p(n!) = sum over i >= 1 of floor(n / p^i).
long long factorial_valuation(int n, int p) {
    long long v = 0;
    for (long long q = p; q <= n; q *= p) v += n / q;
    return v;
}

}  // namespace

bool degree_is_odd(const Partition& lambda) {
    const int n = lambda.weight();
    const long long vn =
        n - static_cast<long long>(std::popcount(static_cast<unsigned>(n)));
    long long vh = 0;
    for (int h : hook_lengths(lambda)) vh += valuation(h, 2);
    return vn == vh;
}

bool degree_coprime_to(const Partition& lambda, int p) {
    if (p < 2) throw std::invalid_argument("prime must be >= 2");
    long long vh = 0;
    for (int h : hook_lengths(lambda)) vh += valuation(h, p);
    return factorial_valuation(lambda.weight(), p) == vh;
}

std::optional<CharValue> CharStore::find(const Partition& shape,
                                         const Partition& cls) const {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = map_.find(Key{shape, cls});
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void CharStore::put(const Partition& shape, const Partition& cls,
                    const CharValue& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    map_.emplace(Key{shape, cls}, value);
}

std::size_t CharStore::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return map_.size();
}

namespace {

constexpr char kStoreMagic[4] = {'S', 'P', 'C', 'V'};
constexpr std::uint32_t kStoreVersion = 1;

void write_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void write_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void write_partition(std::string& out, const Partition& p) {
    write_u32(out, static_cast<std::uint32_t>(p.size()));
    for (int part : p.parts()) write_u32(out, static_cast<std::uint32_t>(part));
}

void write_value(std::string& out, const CharValue& v) {
    out.push_back(v < 0 ? 1 : 0);
    std::vector<std::uint8_t> mag;
    if (v != 0) {
        const CharValue abs = v < 0 ? CharValue(-v) : v;
        boost::multiprecision::export_bits(abs, std::back_inserter(mag), 8);
    }
    write_u32(out, static_cast<std::uint32_t>(mag.size()));
    out.append(reinterpret_cast<const char*>(mag.data()), mag.size());
}

struct Cursor {
    const unsigned char* data;
    std::size_t size;
    std::size_t pos = 0;

    bool take(void* out, std::size_t n) {
        if (size - pos < n) return false;
        std::memcpy(out, data + pos, n);
        pos += n;
        return true;
    }
    bool u32(std::uint32_t& v) {
        unsigned char b[4];
        if (!take(b, 4)) return false;
        v = 0;
        for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
        return true;
    }
    bool u64(std::uint64_t& v) {
        unsigned char b[8];
        if (!take(b, 8)) return false;
        v = 0;
        for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
        return true;
    }
};

bool read_partition(Cursor& c, Partition& out) {
    std::uint32_t len = 0;
    if (!c.u32(len)) return false;
    if (len > 1u << 20) return false;
    std::vector<int> parts;
    parts.reserve(len);
    for (std::uint32_t i = 0; i < len; ++i) {
        std::uint32_t part = 0;
        if (!c.u32(part)) return false;
        if (part == 0 || part > 1u << 20) return false;
        parts.push_back(static_cast<int>(part));
    }
    try {
        out = Partition(std::move(parts));
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

bool read_value(Cursor& c, CharValue& out) {
    unsigned char sign = 0;
    if (!c.take(&sign, 1) || sign > 1) return false;
    std::uint32_t len = 0;
    if (!c.u32(len)) return false;
    if (c.size - c.pos < len) return false;
    if (len == 0) {
        out = 0;
        if (sign != 0) return false;
        return true;
    }
    CharValue v;
    boost::multiprecision::import_bits(v, c.data + c.pos, c.data + c.pos + len, 8);
    c.pos += len;
    out = sign ? CharValue(-v) : v;
    return true;
}

}  // namespace

bool CharStore::load(const std::filesystem::path& file) {
    std::lock_guard<std::mutex> lock(mutex_);
    map_.clear();
    std::ifstream in(file, std::ios::binary);
    if (!in) return false;
    std::string buf((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    Cursor c{reinterpret_cast<const unsigned char*>(buf.data()), buf.size()};

    char magic[4];
    if (!c.take(magic, 4) || std::memcmp(magic, kStoreMagic, 4) != 0) return false;
    std::uint32_t version = 0;
    if (!c.u32(version) || version != kStoreVersion) return false;
    std::uint64_t count = 0;
    if (!c.u64(count)) return false;

    std::unordered_map<Key, CharValue, KeyHash> loaded;
    loaded.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        Key key;
        CharValue value;
        if (!read_partition(c, key.shape) || !read_partition(c, key.cls) ||
            !read_value(c, value))
            return false;
        if (key.shape.weight() != key.cls.weight()) return false;
        loaded.emplace(std::move(key), std::move(value));
    }
    if (c.pos != c.size) return false;
    map_ = std::move(loaded);
    return true;
}

bool CharStore::save(const std::filesystem::path& file) const {
    std::vector<std::pair<Key, CharValue>> entries;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        entries.assign(map_.begin(), map_.end());
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.first.cls != b.first.cls) return a.first.cls < b.first.cls;
        return a.first.shape < b.first.shape;
    });

    std::string out;
    out.append(kStoreMagic, 4);
    write_u32(out, kStoreVersion);
    write_u64(out, entries.size());
    for (const auto& [key, value] : entries) {
        write_partition(out, key.shape);
        write_partition(out, key.cls);
        write_value(out, value);
    }

    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    if (!os) return false;
    os.write(out.data(), static_cast<std::streamsize>(out.size()));
    return static_cast<bool>(os);
}

CharColumn::CharColumn(Partition mu, CharStore* store)
    : mu_(std::move(mu)), store_(store) {
    suffixes_.reserve(mu_.size() + 1);
    for (std::size_t i = 0; i <= mu_.size(); ++i)
        suffixes_.emplace_back(
            std::vector<int>(mu_.parts().begin() + static_cast<std::ptrdiff_t>(i),
                             mu_.parts().end()));
}

CharValue CharColumn::value(const Partition& lambda) {
    if (lambda.weight() != mu_.weight())
        throw std::invalid_argument(
            "char_value: weight mismatch: |" + lambda.str() + "| = " +
            std::to_string(lambda.weight()) + " but |" + mu_.str() + "| = " +
            std::to_string(mu_.weight()));
    return eval(lambda, 0);
}

CharValue CharColumn::eval(const Partition& shape, int i) {
    if (i == static_cast<int>(mu_.size())) return 1;  // shape is empty here
    Key key{shape, i};
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (store_) {
        if (auto hit = store_->find(shape, suffixes_[static_cast<std::size_t>(i)])) {
            memo_.emplace(std::move(key), *hit);
            return *hit;
        }
    }
    CharValue total = 0;
    for (const HookRemoval& h : remove_hooks(shape, mu_[static_cast<std::size_t>(i)])) {
        const CharValue sub = eval(h.result, i + 1);
        if (h.leg_length % 2)
            total -= sub;
        else
            total += sub;
    }
    if (store_) store_->put(shape, suffixes_[static_cast<std::size_t>(i)], total);
    memo_.emplace(std::move(key), total);
    return total;
}

CharValue char_value(const Partition& lambda, const Partition& mu) {
    CharColumn column(mu);
    return column.value(lambda);
}

CharValue orthogonality_sum(const Partition& mu, const Partition& nu) {
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("orthogonality: weight mismatch between " +
                                    mu.str() + " and " + nu.str());
    CharColumn cmu(mu);
    CharColumn cnu(nu);
    CharValue sum = 0;
    for_each_partition(mu.weight(), [&](const Partition& lambda) {
        sum += cmu.value(lambda) * cnu.value(lambda);
    });
    return sum;
}

bool orthogonality_check(const Partition& mu, const Partition& nu) {
    const CharValue expected = mu == nu ? centralizer_order(mu) : CharValue(0);
    return orthogonality_sum(mu, nu) == expected;
}

}  // namespace signpart
