#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "macvogan/cuspidal.hpp"
#include "macvogan/errors.hpp"
#include "macvogan/fin_ab_group.hpp"
#include "macvogan/group_hom.hpp"
#include "macvogan/multisegment.hpp"
#include "macvogan/partition_fn.hpp"
#include "macvogan/phase.hpp"

namespace macvogan {

/// Tamely ramified character: an inertial index b mod q-1 together with an
/// unramified phase in Q/Z.
struct TameCharacter {
    ResidueCharacter b;
    Phase u;

    friend bool operator==(const TameCharacter&, const TameCharacter&) = default;
};

/// Indecomposable summand of a tame parameter: a degree-d inertial
/// character orbit, the Frobenius eigen-phase of the block, and the size of
/// the Jordan block carried on it. Dimension d * length.
struct TameSegmentParam {
    CuspidalDatum tau;
    Phase u;
    int64_t length = 1;

    friend bool operator==(const TameSegmentParam&, const TameSegmentParam&) = default;
    friend auto operator<=>(const TameSegmentParam& a, const TameSegmentParam& b) {
        if (auto c = a.tau <=> b.tau; c != 0) return c;
        if (auto c = a.u <=> b.u; c != 0) return c;
        return a.length <=> b.length;
    }
};

/// Tame parameter for GL_N: a multiset of blocks with total dimension N.
struct TameParameter {
    int64_t q = 2;
    int64_t n = 0;
    std::vector<TameSegmentParam> blocks;  // canonical sorted multiset

    static TameParameter make(const FieldParams& field, std::vector<TameSegmentParam> blocks) {
        TameParameter p;
        p.q = field.q;
        for (const auto& blk : blocks) {
            if (blk.tau.q != field.q) throw domain_error("TameParameter: mixed field sizes");
            if (blk.length < 1) throw domain_error("TameParameter: block length must be >= 1");
            p.n += blk.tau.d * blk.length;
        }
        std::sort(blocks.begin(), blocks.end());
        p.blocks = std::move(blocks);
        if (p.n < 1) throw domain_error("TameParameter: empty parameter");
        return p;
    }

    friend bool operator==(const TameParameter&, const TameParameter&) = default;
    friend auto operator<=>(const TameParameter& a, const TameParameter& b) {
        if (auto c = a.q <=> b.q; c != 0) return c;
        if (auto c = a.n <=> b.n; c != 0) return c;
        return a.blocks <=> b.blocks;
    }
};

/// Twist by a tame character: inertial orbits move by b, the eigen-phase of
/// a degree-d block moves by d * v (an unramified character multiplies the
/// Fr^d-eigenvalue of an induced block by its value taken d times).
inline TameParameter twist_parameter(const TameParameter& p, const TameCharacter& chi) {
    std::vector<TameSegmentParam> blocks;
    blocks.reserve(p.blocks.size());
    for (const auto& blk : p.blocks)
        blocks.push_back({twist_cuspidal(blk.tau, chi.b), blk.u + chi.u.times(blk.tau.d),
                          blk.length});
    return TameParameter::make(FieldParams::make(p.q), std::move(blocks));
}

/// Least common multiple of the phase denominators appearing in p.
inline int64_t phase_denominator_lcm(const TameParameter& p) {
    int64_t l = 1;
    for (const auto& blk : p.blocks) {
        l = std::lcm(l, blk.u.den);
        if (l > 1000000000) throw capacity_error("phase denominators too large to sweep");
    }
    return l;
}

/// Modulus of the unramified sweep for stab_full: a stabilizing twist must
/// send every phase to another phase of the parameter, which confines v to
/// (1/L)Z/Z for L = N * lcm(denominators). Elements of the stabilizer are
/// stored as pairs (b, k) with v = k/L.
inline int64_t stab_sweep_modulus(const TameParameter& p) {
    return p.n * phase_denominator_lcm(p);
}

/// stab_{(b,v)}(P) inside Z/(q-1) x (1/L)Z/Z, by exhaustive sweep.
inline FinAbGroup stab_full(const TameParameter& p) {
    int64_t l = stab_sweep_modulus(p);
    if ((p.q - 1) * l > 10000000)
        throw capacity_error("stab_full: twist sweep larger than budget");
    IntMat gens;
    for (int64_t b = 0; b < p.q - 1; ++b)
        for (int64_t k = 0; k < l; ++k)
            if (twist_parameter(p, TameCharacter{Residue(b, p.q - 1), Phase(k, l)}) == p)
                gens.push_back({b, k});
    return snf_reduce(std::move(gens), {p.q - 1, l});
}

/// Forget Frobenius data: group Jordan lengths by inertial cuspidal orbit.
inline PartitionFn inertial_class(const TameParameter& p) {
    std::map<CuspidalDatum, std::vector<int64_t>> grouped;
    for (const auto& blk : p.blocks) grouped[blk.tau].push_back(blk.length);
    std::vector<std::pair<CuspidalDatum, Partition>> entries;
    for (auto& [tau, lengths] : grouped) entries.emplace_back(tau, Partition(std::move(lengths)));
    return PartitionFn::make(FieldParams::make(p.q), std::move(entries));
}

/// Forget Frobenius phases only, keeping the segment structure.
inline Multisegment drop_phases(const TameParameter& p) {
    std::vector<Segment> segments;
    segments.reserve(p.blocks.size());
    for (const auto& blk : p.blocks) segments.push_back({blk.tau, blk.length});
    return Multisegment::make(FieldParams::make(p.q), std::move(segments));
}

enum class ComponentKind { LPacket, Inertial };

/// Component group of a centralizer, realized through the stabilizer
/// subgroup it is canonically isomorphic to. `group` is the abstract form
/// (canonical presentation on the invariant factors), `witness` the
/// concrete stabilizer.
struct ComponentGroup {
    FinAbGroup group;
    ComponentKind kind = ComponentKind::LPacket;
    FinAbGroup witness;

    int64_t order() const { return group.order(); }
};

namespace detail {

inline FinAbGroup abstract_form(const FinAbGroup& g) {
    return snf_reduce(int_identity(g.invariant_factors().size()), g.invariant_factors());
}

} // namespace detail

/// Component group attached to the L-packet of p, as the full stabilizer.
inline ComponentGroup component_group_L(const TameParameter& p) {
    auto witness = stab_full(p);
    return ComponentGroup{detail::abstract_form(witness), ComponentKind::LPacket,
                          std::move(witness)};
}

/// Component group attached to the inertial class of p, as the residue
/// character stabilizer of its label.
inline ComponentGroup component_group_inertial(const TameParameter& p) {
    auto witness = stabilizer(inertial_class(p));
    return ComponentGroup{detail::abstract_form(witness), ComponentKind::Inertial,
                          std::move(witness)};
}

/// Restriction (b, v) -> b from the full stabilizer to the inertial one.
/// Well-defined: a twist fixing the parameter fixes its inertial label.
inline GroupHom iota(const TameParameter& p) {
    auto source = stab_full(p);
    auto target = stabilizer(inertial_class(p));
    IntMat images;
    for (const auto& g : source.generators()) images.push_back({g[0]});
    return GroupHom::make(std::move(source), std::move(target), std::move(images));
}

/// Dual of iota: characters of the inertial stabilizer pulled back to
/// characters of the full stabilizer.
inline GroupHom iota_hat(const TameParameter& p) { return dual_hom(iota(p)); }

/// Parameter with trivial inertia and Frobenius a regular N-cycle of
/// N-th roots of unity: N blocks (d=1, a=0, u=j/N, l=1).
inline TameParameter make_example1(const FieldParams& field, int64_t n) {
    if (n < 2) throw domain_error("make_example1: requires N >= 2");
    std::vector<TameSegmentParam> blocks;
    for (int64_t j = 0; j < n; ++j)
        blocks.push_back({make_cuspidal(field, 1, 0), Phase(j, n), 1});
    return TameParameter::make(field, std::move(blocks));
}

inline bool is_prime(int64_t m) {
    if (m < 2) return false;
    for (int64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

inline int64_t least_prime_greater(int64_t n) {
    int64_t m = n + 1;
    while (!is_prime(m)) ++m;
    return m;
}

/// Parameter whose inertia has e isotypic pieces (characters of order
/// dividing e, each with multiplicity N/e) and whose Frobenius is a regular
/// diagonal element. Requires e > 1 and e | gcd(q-1, N).
///
/// The phase schedule is u_{i,j} = (i + j*e) / anchor_den with anchor_den a
/// prime > N (default the least one). Any prime > N gives pairwise distinct
/// phases with no translation symmetry compatible with the inertial
/// pattern, which is what regularity of Frobenius requires; the invariants
/// below are schedule-independent and the tests re-run with a second prime.
inline TameParameter make_example2(const FieldParams& field, int64_t n, int64_t e,
                                   int64_t anchor_den = 0) {
    if (e <= 1 || n % e != 0 || (field.q - 1) % e != 0)
        throw domain_error("make_example2: e must be a common divisor > 1 of q-1 and N");
    if (anchor_den == 0) anchor_den = least_prime_greater(n);
    if (anchor_den <= n || !is_prime(anchor_den))
        throw domain_error("make_example2: anchor denominator must be a prime > N");
    std::vector<TameSegmentParam> blocks;
    for (int64_t i = 0; i < e; ++i)
        for (int64_t j = 0; j < n / e; ++j)
            blocks.push_back({make_cuspidal(field, 1, i * (field.q - 1) / e),
                              Phase(i + j * e, anchor_den), 1});
    return TameParameter::make(field, std::move(blocks));
}

} // namespace macvogan
