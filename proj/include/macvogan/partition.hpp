#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "macvogan/errors.hpp"

namespace macvogan {

/// Integer partition, parts weakly decreasing and positive. Empty = size 0.
struct Partition {
    std::vector<int64_t> parts;

    Partition() = default;
    explicit Partition(std::vector<int64_t> p) : parts(std::move(p)) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        for (int64_t x : parts)
            if (x < 1) throw domain_error("Partition: parts must be >= 1");
    }
    Partition(std::initializer_list<int64_t> p) : Partition(std::vector<int64_t>(p)) {}

    int64_t size() const { return std::accumulate(parts.begin(), parts.end(), int64_t{0}); }
    bool empty() const { return parts.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts <=> b.parts;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts[i]);
        return s + "]";
    }
};

/// Standard dominance: a <= b iff |a| = |b| and every prefix sum of a is at
/// most the matching prefix sum of b (so [1,1] <= [2]).
inline bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    int64_t pa = 0, pb = 0;
    std::size_t k = std::max(a.parts.size(), b.parts.size());
    for (std::size_t i = 0; i < k; ++i) {
        pa += i < a.parts.size() ? a.parts[i] : 0;
        pb += i < b.parts.size() ? b.parts[i] : 0;
        if (pa > pb) return false;
    }
    return true;
}

inline bool dominance_geq(const Partition& a, const Partition& b) { return dominance_leq(b, a); }

inline std::vector<Partition> partitions_of(int64_t n) {
    if (n < 0) throw domain_error("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int64_t> current;
    auto rec = [&](auto&& self, int64_t remaining, int64_t max_part) -> void {
        if (remaining == 0) {
            out.emplace_back();
            out.back().parts = current;
            return;
        }
        for (int64_t p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// The dominance lower set { mu : mu <= lambda }.
inline std::vector<Partition> dominance_lower_set(const Partition& lambda) {
    std::vector<Partition> out;
    for (auto& mu : partitions_of(lambda.size()))
        if (dominance_leq(mu, lambda)) out.push_back(std::move(mu));
    return out;
}

} // namespace macvogan
