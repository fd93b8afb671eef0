#include "signpart/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace signpart {

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::string_view token,
                             const char* reason) {
    throw std::invalid_argument("invalid partition \"" + std::string(text) +
                                "\": " + reason + " at token \"" +
                                std::string(token) + "\"");
}

int parse_int(std::string_view text, std::string_view token,
              std::string_view digits) {
    int value = 0;
    const char* first = digits.data();
    const char* last = digits.data() + digits.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || digits.empty())
        parse_fail(text, token, "malformed token");
    return value;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
    std::string stripped;
    stripped.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') stripped.push_back(c);
    if (stripped.empty())
        throw std::invalid_argument("invalid partition \"" + std::string(text) +
                                    "\": empty");

    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= stripped.size()) {
        const std::size_t comma = stripped.find(',', pos);
        const std::string_view token =
            std::string_view(stripped).substr(pos, comma == std::string::npos
                                                       ? std::string::npos
                                                       : comma - pos);
        const std::size_t caret = token.find('^');
        int value = 0;
        int mult = 1;
        if (caret == std::string_view::npos) {
            value = parse_int(text, token, token);
        } else {
            value = parse_int(text, token, token.substr(0, caret));
            mult = parse_int(text, token, token.substr(caret + 1));
            if (mult < 1) parse_fail(text, token, "multiplicity must be positive");
        }
        if (value < 1) parse_fail(text, token, "parts must be positive");
        if (!parts.empty() && parts.back() < value)
            parse_fail(text, token, "parts must be weakly decreasing");
        parts.insert(parts.end(), static_cast<std::size_t>(mult), value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == stripped.size())
            parse_fail(text, "", "malformed token");
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string out;
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!out.empty()) out.push_back(',');
        out += std::to_string(parts_[i]);
        if (j - i > 1) {
            out.push_back('^');
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int part : p.parts()) {
        h ^= static_cast<std::size_t>(part);
        h *= 0x100000001b3ULL;
    }
    return h ^ (p.size() << 1);
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

BetaSet to_beta(const Partition& p, int length) {
    if (length < static_cast<int>(p.size()))
        throw std::invalid_argument("beta-set length too small: " +
                                    std::to_string(length) + " beads for " +
                                    std::to_string(p.size()) + " parts");
    BetaSet bs;
    bs.betas.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
        const int part = i < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i)] : 0;
        bs.betas.push_back(part + (length - 1 - i));
    }
    return bs;
}

Partition BetaSet::to_partition() const {
    const int r = static_cast<int>(betas.size());
    std::vector<int> parts;
    parts.reserve(betas.size());
    for (int i = 0; i < r; ++i) {
        const int part = betas[static_cast<std::size_t>(i)] - (r - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

std::vector<HookRemoval> remove_hooks(const Partition& p, int a) {
    if (a < 1) throw std::invalid_argument("hook length must be positive");
    std::vector<HookRemoval> out;
    if (p.empty()) return out;
    const BetaSet bs = to_beta(p, static_cast<int>(p.size()));
    const auto& b = bs.betas;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const int target = b[i] - a;
        if (target < 0) continue;
        if (std::find(b.begin(), b.end(), target) != b.end()) continue;
        int leg = 0;
        for (int x : b)
            if (x > target && x < b[i]) ++leg;
        BetaSet moved = bs;
        moved.betas[i] = target;
        std::sort(moved.betas.begin(), moved.betas.end(), std::greater<int>());
        out.push_back({moved.to_partition(), leg, a});
    }
    return out;
}

std::vector<HookAddition> add_hooks(const Partition& p, int a) {
    if (a < 1) throw std::invalid_argument("hook length must be positive");
    // Padding by a beads makes every landing row representable.
    const BetaSet bs = to_beta(p, static_cast<int>(p.size()) + a);
    const auto& b = bs.betas;
    std::vector<HookAddition> out;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const int target = b[i] + a;
        if (std::find(b.begin(), b.end(), target) != b.end()) continue;
        int leg = 0;
        for (int x : b)
            if (x > b[i] && x < target) ++leg;
        BetaSet moved = bs;
        moved.betas[i] = target;
        std::sort(moved.betas.begin(), moved.betas.end(), std::greater<int>());
        out.push_back({moved.to_partition(), leg});
    }
    return out;
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(p[0]), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

std::vector<int> hook_lengths(const Partition& p) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p.weight()));
    const Partition conj = conjugate(p);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j)
            out.push_back(p[i] - j + conj[static_cast<std::size_t>(j)] -
                          static_cast<int>(i) - 1);
    return out;
}

std::optional<int> is_hook_shape(const Partition& p) {
    if (p.empty()) return std::nullopt;
    if (p.size() > 1 && p[1] != 1) return std::nullopt;
    return static_cast<int>(p.size()) - 1;
}

}  // namespace signpart
