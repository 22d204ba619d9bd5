#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "macvogan/brute_oracle.hpp"
#include "macvogan/sampling.hpp"
#include "macvogan/sl_correspondence.hpp"

namespace macvogan {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

using CheckList = std::vector<CheckResult>;

namespace detail {

inline void check(CheckList& out, const std::string& name, bool pass,
                  const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

} // namespace detail

/// Census identities against the brute-force matrix oracle.
inline CheckList verify_counting(const FieldParams& field, int64_t n) {
    CheckList out;
    auto table = field_arithmetic(field.q);

    int64_t gl_oracle = conj_class_count({MatrixKind::GL, static_cast<int>(n), field.q});
    int64_t gl_census = static_cast<int64_t>(enumerate_degree(field, n).size());
    detail::check(out, "gl-census-vs-oracle", gl_census == gl_oracle,
                  "census " + std::to_string(gl_census) + ", oracle " + std::to_string(gl_oracle));

    int64_t sl_oracle = conj_class_count({MatrixKind::SL, static_cast<int>(n), field.q});
    int64_t sl = sl_census(field, n);
    detail::check(out, "sl-census-vs-oracle", sl == sl_oracle,
                  "census " + std::to_string(sl) + ", oracle " + std::to_string(sl_oracle));

    detail::check(out, "census-count-formula", gl_census == count_degree(field, n),
                  "formula " + std::to_string(count_degree(field, n)));

    bool necklace = true;
    for (int64_t d = 1; d <= n; ++d)
        necklace = necklace && cuspidal_count(field, d) == cuspidal_count_necklace(field, d);
    detail::check(out, "cuspidal-necklace", necklace, "degrees 1.." + std::to_string(n));

    bool orders = true;
    for (auto kind : {MatrixKind::GL, MatrixKind::SL}) {
        MatrixGroupSpec spec{kind, static_cast<int>(n), field.q};
        orders = orders && static_cast<int64_t>(matrix_group_elements(spec, table).size()) ==
                               matrix_group_order(spec);
    }
    detail::check(out, "group-order-closed-form", orders,
                  "field modulus: " + table.poly_str());
    return out;
}

/// Action laws and the head/twist commutation identity.
inline CheckList verify_twist(const FieldParams& field, int64_t n, uint64_t seed) {
    CheckList out;
    Sampler sampler(seed);
    const int64_t q = field.q;

    bool cuspidal_laws = true;
    for (int trial = 0; trial < 200 && cuspidal_laws; ++trial) {
        int64_t d = sampler.uniform(1, std::max<int64_t>(1, std::min<int64_t>(n, 4)));
        auto tau = sampler.cuspidal(field, d);
        auto b1 = sampler.residue_character(field);
        auto b2 = sampler.residue_character(field);
        cuspidal_laws = twist_cuspidal(tau, Residue(0, q - 1)) == tau &&
                        twist_cuspidal(twist_cuspidal(tau, b1), b2) ==
                            twist_cuspidal(tau, b1 + b2) &&
                        twist_cuspidal(tau, b1).d == tau.d;
    }
    detail::check(out, "cuspidal-action-laws", cuspidal_laws, "200 trials");

    bool fn_laws = true;
    for (int trial = 0; trial < 200 && fn_laws; ++trial) {
        auto m = sampler.partition_fn(field, sampler.uniform(1, n));
        auto b1 = sampler.residue_character(field);
        auto b2 = sampler.residue_character(field);
        fn_laws = twist_fn(m, Residue(0, q - 1)) == m &&
                  twist_fn(twist_fn(m, b1), b2) == twist_fn(m, b1 + b2) &&
                  twist_fn(m, b1).degree() == m.degree();
    }
    detail::check(out, "fn-action-laws", fn_laws, "200 trials");

    bool head_commutes = true;
    for (int trial = 0; trial < 500 && head_commutes; ++trial) {
        auto ms = sampler.multisegment(field, sampler.uniform(1, n));
        auto chi = sampler.residue_character(field);
        head_commutes = hp_gl(twist_multisegment(ms, chi)) == twist_fn(hp_gl(ms), chi);
    }
    detail::check(out, "head-twist-commutes", head_commutes, "500 trials");

    bool param_laws = true;
    for (int trial = 0; trial < 150 && param_laws; ++trial) {
        auto p = sampler.tame_parameter(field, sampler.uniform(1, n));
        auto c1 = sampler.tame_character(field);
        auto c2 = sampler.tame_character(field);
        param_laws =
            twist_parameter(p, TameCharacter{Residue(0, q - 1), Phase(0, 1)}) == p &&
            twist_parameter(twist_parameter(p, c1), c2) ==
                twist_parameter(p, TameCharacter{c1.b + c2.b, c1.u + c2.u});
    }
    detail::check(out, "parameter-action-laws", param_laws, "150 trials");

    bool equivariance = true;
    for (int trial = 0; trial < 200 && equivariance; ++trial) {
        auto p = sampler.tame_parameter(field, sampler.uniform(1, n));
        auto chi = sampler.tame_character(field);
        equivariance =
            inertial_class(twist_parameter(p, chi)) == twist_fn(inertial_class(p), chi.b);
    }
    detail::check(out, "inertial-equivariance", equivariance, "200 trials");
    return out;
}

/// Orbit, fiber, duality, and partition properties.
inline CheckList verify_torsor(const FieldParams& field, int64_t n, uint64_t seed) {
    CheckList out;
    Sampler sampler(seed);
    const int64_t q = field.q;

    auto orbits = orbits_and_stabilizers(field, n);
    bool orbit_stab = true;
    bool fiber_sizes = true;
    for (const auto& [rep, stab] : orbits) {
        std::vector<PartitionFn> orbit;
        for (int64_t b = 0; b < q - 1; ++b) orbit.push_back(twist_fn(rep, Residue(b, q - 1)));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        orbit_stab = orbit_stab && static_cast<int64_t>(orbit.size()) * stab.order() == q - 1;
        fiber_sizes =
            fiber_sizes && static_cast<int64_t>(mv_fiber(MVClass{rep, stab}).size()) == stab.order();
    }
    detail::check(out, "orbit-stabilizer-product", orbit_stab,
                  std::to_string(orbits.size()) + " orbits");
    detail::check(out, "fiber-equals-stab", fiber_sizes, "");

    bool duality = true;
    bool pairing = true;
    for (const auto& [rep, stab] : orbits) {
        duality = duality && dual_group(dual_group(stab)).invariant_factors() ==
                                 stab.invariant_factors();
        auto dual = dual_group(stab);
        for (const auto& x : stab.elements()) {
            bool all_trivial = true;
            for (const auto& psi : dual.elements())
                if (!pair_eval(stab, psi, x).is_zero()) all_trivial = false;
            pairing = pairing && (all_trivial == (x == stab.zero_element()));
        }
    }
    detail::check(out, "duality-involution", duality, "");
    detail::check(out, "pairing-nondegenerate", pairing, "");

    bool kernel_image = true;
    bool iota_defined = true;
    bool compat = true;
    bool finalcomp = true;
    bool translation = true;
    for (int trial = 0; trial < 200; ++trial) {
        auto p = sampler.tame_parameter(field, sampler.uniform(1, n));
        auto stab = stab_full(p);
        auto inertial_stab = stabilizer(inertial_class(p));
        for (const auto& g : stab.elements())
            iota_defined = iota_defined && inertial_stab.contains({g[0]});
        auto hat = iota_hat(p);
        auto [ker, im] = hom_kernel_image(hat);
        kernel_image = kernel_image && ker.order() * im.order() == hat.source.order();
        auto cls = sl_canonicalize(p);
        compat = compat && check_compatibility_packet(p);
        finalcomp = finalcomp && check_finalcomp(cls);
        if (hat.source.order() <= 24 && trial % 10 == 0) {
            for (const auto& t : hat.source.elements()) {
                auto shift = hat.apply(t);
                for (const auto& psi : hat.target.elements()) {
                    auto base = hom_preimage_coset(hat, psi);
                    auto moved = hom_preimage_coset(hat, hat.target.add(psi, shift));
                    translation = translation && base.has_value() == moved.has_value();
                }
            }
        }
    }
    detail::check(out, "kernel-image-product", kernel_image, "200 trials");
    detail::check(out, "iota-well-defined", iota_defined, "200 trials");
    detail::check(out, "compatibility-sweep", compat, "200 trials");
    detail::check(out, "finalcomp-sweep", finalcomp, "200 trials");
    detail::check(out, "preimage-translation", translation, "");
    return out;
}

/// Reproduction of the two counterexample families at (N, q).
inline CheckList verify_examples(const FieldParams& field, int64_t n) {
    CheckList out;
    if (n >= 2) {
        auto p = make_example1(field, n);
        detail::check(out, "example1-L-order", component_group_L(p).order() == n,
                      "expected " + std::to_string(n));
        auto fiber = mv_fiber(mv_class_of(inertial_class(p)));
        detail::check(out, "example1-fiber-size", fiber.size() == 1, "expected 1");
        auto hat = iota_hat(p);
        auto [ker, im] = hom_kernel_image(hat);
        detail::check(out, "example1-iota-hat",
                      ker.order() == 1 && im.order() < hat.target.order(),
                      "injective, not surjective");
        detail::check(out, "example1-compatibility",
                      check_compatibility_packet(p) && check_finalcomp(sl_canonicalize(p)), "");
    } else {
        detail::check(out, "example1-skipped", true, "needs N >= 2");
    }

    bool found_e = false;
    for (int64_t e = 2; e <= std::gcd(field.q - 1, n); ++e) {
        if ((field.q - 1) % e != 0 || n % e != 0) continue;
        found_e = true;
        auto p = make_example2(field, n, e);
        std::string tag = "example2-e" + std::to_string(e);
        detail::check(out, tag + "-L-order", component_group_L(p).order() == 1, "expected 1");
        detail::check(out, tag + "-inertial-order", component_group_inertial(p).order() == e,
                      "expected " + std::to_string(e));
        detail::check(out, tag + "-fiber-size",
                      static_cast<int64_t>(mv_fiber(mv_class_of(inertial_class(p))).size()) == e,
                      "");
        auto hat = iota_hat(p);
        auto [ker, im] = hom_kernel_image(hat);
        detail::check(out, tag + "-iota-hat", ker.order() == e && im.order() == hat.target.order(),
                      "surjective, kernel order " + std::to_string(e));
        detail::check(out, tag + "-compatibility",
                      check_compatibility_packet(p) && check_finalcomp(sl_canonicalize(p)), "");
    }
    if (!found_e)
        detail::check(out, "example2-skipped", true, "no common divisor e > 1 of q-1 and N");
    return out;
}

inline CheckList verify_suite(const std::string& suite, const FieldParams& field, int64_t n,
                              uint64_t seed) {
    CheckList out;
    auto append = [&](CheckList more) {
        for (auto& c : more) out.push_back(std::move(c));
    };
    if (suite == "counting" || suite == "all") append(verify_counting(field, n));
    if (suite == "twist" || suite == "all") append(verify_twist(field, n, seed));
    if (suite == "torsor" || suite == "all") append(verify_torsor(field, n, seed + 1));
    if (suite == "examples" || suite == "all") append(verify_examples(field, n));
    if (out.empty()) throw domain_error("verify_suite: unknown suite " + suite);
    return out;
}

} // namespace macvogan
