#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "macvogan/errors.hpp"
#include "macvogan/fin_ab_group.hpp"

namespace macvogan {

using Subgroup = FinAbGroup;

/// Homomorphism between finite abelian groups, stored as the image of each
/// canonical generator of the source (an ambient tuple of the target).
struct GroupHom {
    FinAbGroup source;
    FinAbGroup target;
    IntMat images;  // one target element per source canonical generator

    static GroupHom make(FinAbGroup source, FinAbGroup target, IntMat images) {
        if (images.size() != source.rank())
            throw domain_error("GroupHom: one image per canonical generator required");
        for (std::size_t i = 0; i < images.size(); ++i) {
            images[i] = target.reduce(std::move(images[i]));
            if (!target.contains(images[i]))
                throw domain_error("GroupHom: image not in target group");
            // order of image must divide order of generator
            IntVec scaled(images[i].size());
            for (std::size_t j = 0; j < scaled.size(); ++j)
                scaled[j] = mod_reduce(images[i][j] * source.invariant_factors()[i],
                                       target.ambient()[j]);
            if (scaled != target.zero_element())
                throw domain_error("GroupHom: image order incompatible with generator order");
        }
        return GroupHom{std::move(source), std::move(target), std::move(images)};
    }

    IntVec apply(const IntVec& x) const {
        auto t = source.coords_of(x);
        if (!t) throw domain_error("GroupHom: element not in source");
        IntVec acc = target.zero_element();
        for (std::size_t i = 0; i < images.size(); ++i)
            for (std::size_t j = 0; j < acc.size(); ++j)
                acc[j] = mod_reduce(acc[j] + (*t)[i] * images[i][j], target.ambient()[j]);
        return acc;
    }
};

inline std::pair<Subgroup, Subgroup> hom_kernel_image(const GroupHom& f) {
    IntMat kernel_gens;
    for (const auto& x : f.source.elements())
        if (f.apply(x) == f.target.zero_element()) kernel_gens.push_back(x);
    Subgroup kernel = snf_reduce(std::move(kernel_gens), f.source.ambient());
    Subgroup image = snf_reduce(f.images, f.target.ambient());
    return {std::move(kernel), std::move(image)};
}

/// A coset x + K inside the ambient of K.
struct Coset {
    IntVec representative;
    Subgroup kernel;

    std::vector<IntVec> elements(int64_t limit = 1000000) const {
        std::vector<IntVec> out;
        for (const auto& k : kernel.elements(limit)) out.push_back(kernel.add(representative, k));
        return out;
    }

    int64_t size() const { return kernel.order(); }
};

/// Preimage f^{-1}(y): empty when y is outside the image, otherwise a coset
/// of the kernel.
inline std::optional<Coset> hom_preimage_coset(const GroupHom& f, const IntVec& y) {
    IntVec target = f.target.reduce(y);
    if (!f.target.contains(target)) throw domain_error("hom_preimage_coset: y not in target");
    for (const auto& x : f.source.elements())
        if (f.apply(x) == target)
            return Coset{x, hom_kernel_image(f).first};
    return std::nullopt;
}

/// Dual of f: Hom(target, Q/Z) -> Hom(source, Q/Z), psi -> psi o f.
/// Both duals are in canonical presentation, so the image coordinates are
/// read off the evaluation pairing.
inline GroupHom dual_hom(const GroupHom& f) {
    FinAbGroup dsrc = dual_group(f.target);
    FinAbGroup dtgt = dual_group(f.source);
    IntMat images;
    for (const auto& psi : dsrc.generators()) {
        IntVec img;
        for (std::size_t j = 0; j < f.source.rank(); ++j) {
            Phase p = pair_eval(f.target, psi, f.images[j]);
            int64_t dj = f.source.invariant_factors()[j];
            if (dj % p.den != 0) throw domain_error("dual_hom: pairing outside dual lattice");
            img.push_back(mod_reduce(p.num * (dj / p.den), dj));
        }
        images.push_back(std::move(img));
    }
    return GroupHom::make(std::move(dsrc), std::move(dtgt), std::move(images));
}

} // namespace macvogan
