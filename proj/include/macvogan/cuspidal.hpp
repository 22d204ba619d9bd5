#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "macvogan/errors.hpp"
#include "macvogan/field_params.hpp"
#include "macvogan/residue.hpp"

namespace macvogan {

/// Character of k_F^* = F_q^*, i.e. an index b mod q-1.
using ResidueCharacter = Residue;

/// Cuspidal of GL_d(F_q), encoded as the multiplication-by-q orbit of a
/// regular character index a mod q^d - 1. Stored by the minimal orbit
/// element, which makes equality and ordering plain value comparisons.
struct CuspidalDatum {
    int64_t q = 2;
    int64_t d = 1;
    int64_t orbit_rep = 0;

    friend bool operator==(const CuspidalDatum&, const CuspidalDatum&) = default;
    friend auto operator<=>(const CuspidalDatum& a, const CuspidalDatum& b) {
        if (auto c = a.q <=> b.q; c != 0) return c;
        if (auto c = a.d <=> b.d; c != 0) return c;
        return a.orbit_rep <=> b.orbit_rep;
    }

    int64_t character_modulus() const { return checked_pow(q, d) - 1; }

    std::string str() const {
        return "(d=" + std::to_string(d) + ",a=" + std::to_string(orbit_rep) + ")";
    }
};

namespace detail {

inline std::vector<int64_t> frobenius_orbit(int64_t a, int64_t q, int64_t modulus) {
    std::vector<int64_t> orbit{a};
    int64_t x = mul_mod(a, q, modulus);
    while (x != a) {
        orbit.push_back(x);
        x = mul_mod(x, q, modulus);
    }
    return orbit;
}

} // namespace detail

/// The canonical datum for index a mod q^d - 1; throws when a is not
/// regular of degree d (orbit shorter than d).
inline CuspidalDatum make_cuspidal(const FieldParams& field, int64_t d, int64_t a) {
    if (d < 1) throw domain_error("make_cuspidal: degree must be >= 1");
    int64_t modulus = checked_pow(field.q, d) - 1;
    auto orbit = detail::frobenius_orbit(mod_reduce(a, modulus), field.q, modulus);
    if (static_cast<int64_t>(orbit.size()) != d)
        throw domain_error("make_cuspidal: character index " + std::to_string(a) +
                           " is not regular of degree " + std::to_string(d));
    return CuspidalDatum{field.q, d, *std::min_element(orbit.begin(), orbit.end())};
}

/// All cuspidals of GL_d(F_q): the size-d Frobenius orbits in Z/(q^d - 1),
/// one per minimal representative, sorted.
inline std::vector<CuspidalDatum> enumerate_cuspidals(const FieldParams& field, int64_t d) {
    if (d < 1) throw domain_error("enumerate_cuspidals: degree must be >= 1");
    int64_t modulus = checked_pow(field.q, d) - 1;
    if (modulus > (int64_t{1} << 26))
        throw capacity_error("enumerate_cuspidals: q^d too large to enumerate");
    std::vector<CuspidalDatum> out;
    for (int64_t a = 0; a < modulus; ++a) {
        auto orbit = detail::frobenius_orbit(a, field.q, modulus);
        if (static_cast<int64_t>(orbit.size()) != d) continue;
        if (a != *std::min_element(orbit.begin(), orbit.end())) continue;
        out.push_back(CuspidalDatum{field.q, d, a});
    }
    return out;
}

inline int64_t cuspidal_count(const FieldParams& field, int64_t d) {
    return static_cast<int64_t>(enumerate_cuspidals(field, d).size());
}

/// Moebius necklace count (1/d) sum_{e|d} mu(d/e) (q^e - 1); used as an
/// independent cross-check of the enumeration, never as its definition.
inline int64_t cuspidal_count_necklace(const FieldParams& field, int64_t d) {
    auto moebius = [](int64_t n) {
        int64_t result = 1;
        for (int64_t f = 2; f * f <= n; ++f)
            if (n % f == 0) {
                n /= f;
                if (n % f == 0) return int64_t{0};
                result = -result;
            }
        if (n > 1) result = -result;
        return result;
    };
    int64_t total = 0;
    for (int64_t e = 1; e <= d; ++e)
        if (d % e == 0) total += moebius(d / e) * (checked_pow(field.q, e) - 1);
    return total / d;
}

/// tau tensor (chi o det) at the index level: the dual of the norm map
/// F_{q^d}^* -> F_q^* multiplies indices by (q^d - 1)/(q - 1), so the twist
/// by b mod q-1 sends a to a + b (q^d - 1)/(q - 1).
inline CuspidalDatum twist_cuspidal(const CuspidalDatum& tau, const ResidueCharacter& chi) {
    if (chi.modulus != tau.q - 1) throw domain_error("twist_cuspidal: character modulus mismatch");
    int64_t modulus = tau.character_modulus();
    int64_t shift = mul_mod(chi.value, modulus / (tau.q - 1), modulus);
    auto orbit = detail::frobenius_orbit(mod_reduce(tau.orbit_rep + shift, modulus), tau.q, modulus);
    return CuspidalDatum{tau.q, tau.d, *std::min_element(orbit.begin(), orbit.end())};
}

} // namespace macvogan
