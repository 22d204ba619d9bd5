#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "macvogan/fin_ab_group.hpp"
#include "macvogan/group_hom.hpp"
#include "macvogan/partition_fn.hpp"
#include "macvogan/tame_parameter.hpp"

namespace macvogan {

/// Character-twist orbit of a GL label: the SL-side inertial parameter
/// class. Canonical representative plus its stabilizer in Z/(q-1).
struct MVClass {
    PartitionFn representative;
    FinAbGroup stab;

    friend bool operator==(const MVClass& a, const MVClass& b) {
        return a.representative == b.representative;
    }
};

inline MVClass mv_class_of(const PartitionFn& m) {
    PartitionFn best = m;
    for (int64_t b = 1; b < m.q - 1; ++b) {
        auto twisted = twist_fn(m, Residue(b, m.q - 1));
        if (twisted < best) best = twisted;
    }
    auto stab = stabilizer(best);
    return MVClass{std::move(best), std::move(stab)};
}

/// Label of one irreducible of SL_N(F_q): a class plus a torsor coordinate
/// in the dual of its stabilizer, relative to the canonical base point.
struct SLIrrepLabel {
    MVClass cls;
    IntVec torsor_index;

    friend bool operator==(const SLIrrepLabel& a, const SLIrrepLabel& b) {
        return a.cls == b.cls && a.torsor_index == b.torsor_index;
    }
};

/// The fiber over a class: exactly |stab| labels, one per dual element.
inline std::vector<SLIrrepLabel> mv_fiber(const MVClass& c) {
    std::vector<SLIrrepLabel> out;
    for (const auto& psi : dual_group(c.stab).elements()) out.push_back({c, psi});
    return out;
}

/// Number of irreducibles of SL_N(F_q): the fibers are torsors, so the
/// census is the sum of stabilizer orders over the twist orbits.
inline int64_t sl_census(const FieldParams& field, int64_t n, int64_t budget = 2000000) {
    int64_t total = 0;
    for (const auto& [rep, stab] : orbits_and_stabilizers(field, n, budget)) total += stab.order();
    return total;
}

/// Full-character-group orbit of a tame parameter, as a canonical
/// representative. The orbit is infinite in the unramified direction; the
/// search is cut down to the finitely many twists that put some block's
/// phase at zero, which always includes the lexicographic minimum.
struct SLParameterClass {
    TameParameter canonical;

    friend bool operator==(const SLParameterClass&, const SLParameterClass&) = default;
};

inline SLParameterClass sl_canonicalize(const TameParameter& p) {
    std::optional<TameParameter> best;
    for (int64_t b = 0; b < p.q - 1; ++b) {
        auto shifted = twist_parameter(p, TameCharacter{Residue(b, p.q - 1), Phase(0, 1)});
        for (const auto& blk : shifted.blocks) {
            // solutions of d*v = -u: v = (-num + k*den) / (den*d)
            for (int64_t k = 0; k < blk.tau.d; ++k) {
                Phase v(-blk.u.num + k * blk.u.den, blk.u.den * blk.tau.d);
                auto candidate =
                    twist_parameter(shifted, TameCharacter{Residue(0, p.q - 1), v});
                if (!best || candidate < *best) best = std::move(candidate);
            }
        }
    }
    return SLParameterClass{std::move(*best)};
}

/// Label of one L-packet member: the class plus a character of the full
/// stabilizer, relative to the canonical base point.
struct LPacketLabel {
    SLParameterClass cls;
    IntVec packet_index;

    friend bool operator==(const LPacketLabel&, const LPacketLabel&) = default;
};

inline std::vector<LPacketLabel> l_packet(const SLParameterClass& c) {
    std::vector<LPacketLabel> out;
    for (const auto& psi : dual_group(stab_full(c.canonical)).elements())
        out.push_back({c, psi});
    return out;
}

/// The packet-level compatibility identity: extracting the inertial label
/// of the canonical parameter and canonicalizing the head label of the
/// dropped parameter land on the same class.
inline bool check_compatibility_packet(const TameParameter& p) {
    auto via_segments = mv_class_of(hp_gl(drop_phases(p)));
    auto via_parameter = mv_class_of(inertial_class(sl_canonicalize(p).canonical));
    return via_segments == via_parameter;
}

/// The class receiving the head of parahoric restriction of the whole
/// packet; its full fiber is the label-level head.
inline MVClass hp_sl_packet(const SLParameterClass& c) {
    return mv_class_of(inertial_class(c.canonical));
}

/// Head labels attached to the single packet member psi: the torsor indices
/// in the iota-hat preimage of psi, possibly empty.
inline std::vector<SLIrrepLabel> hp_sl_member(const SLParameterClass& c, const IntVec& psi) {
    auto hat = iota_hat(c.canonical);
    auto cls = hp_sl_packet(c);
    auto pre = hom_preimage_coset(hat, psi);
    if (!pre) return {};
    std::vector<SLIrrepLabel> out;
    for (const auto& x : pre->elements()) out.push_back({cls, x});
    std::sort(out.begin(), out.end(),
              [](const SLIrrepLabel& a, const SLIrrepLabel& b) {
                  return a.torsor_index < b.torsor_index;
              });
    return out;
}

/// The member heads, over all packet members, are pairwise disjoint and
/// exhaust the fiber.
inline bool check_finalcomp(const SLParameterClass& c) {
    auto hat = iota_hat(c.canonical);
    auto fiber = mv_fiber(hp_sl_packet(c));
    auto torsor = hat.source.elements();  // the fiber's index group
    std::vector<IntVec> seen;
    for (const auto& psi : hat.target.elements())
        for (const auto& x : torsor)
            if (hat.apply(x) == psi) {
                if (std::find(seen.begin(), seen.end(), x) != seen.end())
                    return false;  // overlap between members
                seen.push_back(x);
            }
    if (seen.size() != fiber.size()) return false;
    for (const auto& label : fiber)
        if (std::find(seen.begin(), seen.end(), label.torsor_index) == seen.end()) return false;
    return true;
}

} // namespace macvogan
