#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "macvogan/cuspidal.hpp"
#include "macvogan/errors.hpp"
#include "macvogan/fin_ab_group.hpp"
#include "macvogan/partition.hpp"

namespace macvogan {

/// Finitely supported map from cuspidal data to partitions. Labels an
/// irreducible of GL_N(F_q) (N = degree) and, equally, an inertial
/// parameter class. Empty partitions are never stored.
struct PartitionFn {
    int64_t q = 2;
    std::vector<std::pair<CuspidalDatum, Partition>> entries;  // sorted by cuspidal, unique

    static PartitionFn make(const FieldParams& field,
                            std::vector<std::pair<CuspidalDatum, Partition>> entries) {
        PartitionFn fn;
        fn.q = field.q;
        for (auto& [tau, lambda] : entries) {
            if (tau.q != field.q) throw domain_error("PartitionFn: mixed field sizes");
            if (!lambda.empty()) fn.entries.emplace_back(tau, std::move(lambda));
        }
        std::sort(fn.entries.begin(), fn.entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < fn.entries.size(); ++i)
            if (fn.entries[i - 1].first == fn.entries[i].first)
                throw domain_error("PartitionFn: duplicate cuspidal entry");
        fn.degree_ = 0;
        for (const auto& [tau, lambda] : fn.entries) fn.degree_ += tau.d * lambda.size();
        return fn;
    }

    int64_t degree() const { return degree_; }

    Partition value_at(const CuspidalDatum& tau) const {
        for (const auto& [t, lambda] : entries)
            if (t == tau) return lambda;
        return Partition{};
    }

    friend bool operator==(const PartitionFn& a, const PartitionFn& b) {
        return a.q == b.q && a.entries == b.entries;
    }

    /// Total order for canonical orbit representatives: compare supports
    /// first, then the partition lists.
    friend bool operator<(const PartitionFn& a, const PartitionFn& b) {
        if (a.q != b.q) return a.q < b.q;
        std::vector<CuspidalDatum> sa, sb;
        for (const auto& e : a.entries) sa.push_back(e.first);
        for (const auto& e : b.entries) sb.push_back(e.first);
        if (sa != sb) return sa < sb;
        std::vector<Partition> pa, pb;
        for (const auto& e : a.entries) pa.push_back(e.second);
        for (const auto& e : b.entries) pb.push_back(e.second);
        return pa < pb;
    }

    std::string str() const {
        std::string s;
        for (const auto& [tau, lambda] : entries)
            s += (s.empty() ? "" : ";") + tau.str() + "->" + lambda.str();
        return s.empty() ? "0" : s;
    }

  private:
    int64_t degree_ = 0;
};

/// Pointwise dominance with equal per-class sizes. Conventions for which
/// end of the order carries the "head" label differ across the literature
/// by partition conjugation, so both directions are exposed; in this
/// encoding constituent sets of parahoric-restriction heads are lower sets
/// for dominance_leq.
inline bool dominance_leq(const PartitionFn& a, const PartitionFn& b) {
    if (a.q != b.q) throw domain_error("dominance_leq: mixed field sizes");
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        if (a.entries[i].first != b.entries[i].first) return false;
        if (!dominance_leq(a.entries[i].second, b.entries[i].second)) return false;
    }
    return true;
}

inline bool dominance_geq(const PartitionFn& a, const PartitionFn& b) {
    return dominance_leq(b, a);
}

/// (chi M)(tau) = M(tau tensor chi^{-1} o det): every support point moves by
/// the character twist, partitions ride along. Degree is preserved.
inline PartitionFn twist_fn(const PartitionFn& m, const ResidueCharacter& chi) {
    if (chi.modulus != m.q - 1) throw domain_error("twist_fn: character modulus mismatch");
    std::vector<std::pair<CuspidalDatum, Partition>> twisted;
    twisted.reserve(m.entries.size());
    for (const auto& [tau, lambda] : m.entries)
        twisted.emplace_back(twist_cuspidal(tau, chi), lambda);
    return PartitionFn::make(FieldParams::make(m.q), std::move(twisted));
}

/// { b in Z/(q-1) : twist_fn(M, b) = M }, by exhaustive sweep.
inline FinAbGroup stabilizer(const PartitionFn& m) {
    IntMat gens;
    for (int64_t b = 0; b < m.q - 1; ++b)
        if (twist_fn(m, Residue(b, m.q - 1)) == m) gens.push_back({b});
    return snf_reduce(std::move(gens), {m.q - 1});
}

namespace detail {

inline std::vector<int64_t> truncated_poly_mul(const std::vector<int64_t>& a,
                                               const std::vector<int64_t>& b, std::size_t top) {
    std::vector<int64_t> c(top + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= top; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= top; ++j) c[i + j] += a[i] * b[j];
    return c;
}

} // namespace detail

/// Number of degree-N partition functions, via generating-function DP.
/// Serves as the capacity guard and as a census cross-check.
inline int64_t count_degree(const FieldParams& field, int64_t n) {
    if (n < 0) throw domain_error("count_degree: degree must be >= 0");
    std::vector<int64_t> total{1};  // polynomial in x, coefficient of x^w
    for (int64_t d = 1; d <= n; ++d) {
        int64_t slots = cuspidal_count_necklace(field, d);
        std::size_t top = static_cast<std::size_t>(n / d);
        std::vector<int64_t> per_slot(top + 1, 0);
        for (std::size_t w = 0; w <= top; ++w)
            per_slot[w] = static_cast<int64_t>(partitions_of(static_cast<int64_t>(w)).size());
        // per_slot^slots, truncated
        std::vector<int64_t> power{1};
        std::vector<int64_t> base = per_slot;
        int64_t e = slots;
        while (e > 0) {
            if (e & 1) power = detail::truncated_poly_mul(power, base, top);
            base = detail::truncated_poly_mul(base, base, top);
            e >>= 1;
        }
        // weight w at degree d costs d*w
        std::vector<int64_t> lifted(static_cast<std::size_t>(n) + 1, 0);
        for (std::size_t w = 0; w < power.size() && static_cast<int64_t>(w) * d <= n; ++w)
            lifted[w * d] = power[w];
        total = detail::truncated_poly_mul(total, lifted, static_cast<std::size_t>(n));
    }
    return total[static_cast<std::size_t>(n)];
}

/// The complete duplicate-free census of degree-N partition functions,
/// sorted by the canonical total order.
inline std::vector<PartitionFn> enumerate_degree(const FieldParams& field, int64_t n,
                                                 int64_t budget = 2000000) {
    if (n < 1) throw domain_error("enumerate_degree: degree must be >= 1");
    if (count_degree(field, n) > budget)
        throw capacity_error("enumerate_degree: census larger than budget");

    std::vector<CuspidalDatum> cuspidals;
    for (int64_t d = 1; d <= n; ++d)
        for (const auto& tau : enumerate_cuspidals(field, d)) cuspidals.push_back(tau);

    std::vector<PartitionFn> out;
    std::vector<std::pair<CuspidalDatum, Partition>> current;
    auto rec = [&](auto&& self, std::size_t from, int64_t remaining) -> void {
        if (remaining == 0) {
            out.push_back(PartitionFn::make(field, current));
            return;
        }
        for (std::size_t i = from; i < cuspidals.size(); ++i) {
            int64_t d = cuspidals[i].d;
            if (d > remaining) continue;
            for (int64_t w = 1; w * d <= remaining; ++w)
                for (const auto& lambda : partitions_of(w)) {
                    current.emplace_back(cuspidals[i], lambda);
                    self(self, i + 1, remaining - w * d);
                    current.pop_back();
                }
        }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

/// One canonical representative per character-twist orbit, with its
/// stabilizer. Orbit length times stabilizer order is q - 1 throughout.
inline std::vector<std::pair<PartitionFn, FinAbGroup>> orbits_and_stabilizers(
    const FieldParams& field, int64_t n, int64_t budget = 2000000) {
    auto census = enumerate_degree(field, n, budget);
    std::vector<std::pair<PartitionFn, FinAbGroup>> out;
    std::vector<bool> used(census.size(), false);
    for (std::size_t i = 0; i < census.size(); ++i) {
        if (used[i]) continue;
        // orbit of census[i]; census is sorted, so the first unused member
        // is the canonical (minimal) representative
        std::vector<PartitionFn> orbit;
        for (int64_t b = 0; b < field.q - 1; ++b)
            orbit.push_back(twist_fn(census[i], Residue(b, field.q - 1)));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        for (const auto& m : orbit) {
            auto it = std::lower_bound(census.begin(), census.end(), m);
            used[static_cast<std::size_t>(it - census.begin())] = true;
        }
        auto stab = stabilizer(census[i]);
        if (static_cast<int64_t>(orbit.size()) * stab.order() != field.q - 1)
            throw domain_error("orbits_and_stabilizers: orbit-stabilizer identity violated");
        out.emplace_back(census[i], std::move(stab));
    }
    return out;
}

} // namespace macvogan
