#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "macvogan/cuspidal.hpp"
#include "macvogan/errors.hpp"
#include "macvogan/partition_fn.hpp"

namespace macvogan {

struct Segment {
    CuspidalDatum tau;
    int64_t length = 1;

    friend bool operator==(const Segment&, const Segment&) = default;
    friend auto operator<=>(const Segment& a, const Segment& b) {
        if (auto c = a.tau <=> b.tau; c != 0) return c;
        return a.length <=> b.length;
    }
};

/// Depth-0 representation of GL_N(F) at the combinatorial level: a multiset
/// of segments (cuspidal class, length), with unramified twist anchors
/// already forgotten.
struct Multisegment {
    int64_t q = 2;
    std::vector<Segment> segments;  // canonical sorted multiset

    static Multisegment make(const FieldParams& field, std::vector<Segment> segments) {
        Multisegment ms;
        ms.q = field.q;
        for (const auto& s : segments) {
            if (s.tau.q != field.q) throw domain_error("Multisegment: mixed field sizes");
            if (s.length < 1) throw domain_error("Multisegment: segment length must be >= 1");
        }
        std::sort(segments.begin(), segments.end());
        ms.segments = std::move(segments);
        return ms;
    }

    int64_t degree() const {
        int64_t n = 0;
        for (const auto& s : segments) n += s.tau.d * s.length;
        return n;
    }

    friend bool operator==(const Multisegment&, const Multisegment&) = default;
};

/// The partition function collecting, per cuspidal class, the lengths of
/// all segments supported on it.
inline PartitionFn lambda_of(const Multisegment& ms) {
    std::map<CuspidalDatum, std::vector<int64_t>> grouped;
    for (const auto& s : ms.segments) grouped[s.tau].push_back(s.length);
    std::vector<std::pair<CuspidalDatum, Partition>> entries;
    for (auto& [tau, lengths] : grouped) entries.emplace_back(tau, Partition(std::move(lengths)));
    return PartitionFn::make(FieldParams::make(ms.q), std::move(entries));
}

/// Label of the head of the parahoric restriction. In this encoding it is
/// the same value as lambda_of; it is exposed under its own name because it
/// plays a different role (a representation label, not a p-adic datum).
inline PartitionFn hp_gl(const Multisegment& ms) { return lambda_of(ms); }

/// All labels <= the given one in the componentwise order: a superset of
/// the parahoric-restriction constituents, exact when the input is
/// tempered. The head itself appears exactly once.
inline std::vector<PartitionFn> constituent_lower_set(const PartitionFn& head) {
    std::vector<std::vector<std::pair<CuspidalDatum, Partition>>> stack{{}};
    for (const auto& [tau, lambda] : head.entries) {
        std::vector<std::vector<std::pair<CuspidalDatum, Partition>>> next;
        for (const auto& mu : dominance_lower_set(lambda))
            for (const auto& prefix : stack) {
                auto extended = prefix;
                extended.emplace_back(tau, mu);
                next.push_back(std::move(extended));
            }
        stack = std::move(next);
    }
    std::vector<PartitionFn> out;
    out.reserve(stack.size());
    auto field = FieldParams::make(head.q);
    for (auto& entries : stack) out.push_back(PartitionFn::make(field, std::move(entries)));
    std::sort(out.begin(), out.end());
    return out;
}

inline Multisegment twist_multisegment(const Multisegment& ms, const ResidueCharacter& chi) {
    std::vector<Segment> twisted;
    twisted.reserve(ms.segments.size());
    for (const auto& s : ms.segments) twisted.push_back({twist_cuspidal(s.tau, chi), s.length});
    return Multisegment::make(FieldParams::make(ms.q), std::move(twisted));
}

} // namespace macvogan
