#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "macvogan/errors.hpp"

namespace macvogan {

inline int64_t mod_reduce(int64_t v, int64_t m) {
    int64_t r = v % m;
    return r < 0 ? r + m : r;
}

/// (a * b) mod m without intermediate overflow.
inline int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
    return static_cast<int64_t>((static_cast<__int128>(a) * b) % m);
}

/// base^exp, throwing once the value leaves the 62-bit desk-scale range.
inline int64_t checked_pow(int64_t base, int64_t exp) {
    int64_t r = 1;
    for (int64_t i = 0; i < exp; ++i) {
        if (r > (int64_t{1} << 62) / base)
            throw capacity_error("checked_pow: " + std::to_string(base) + "^" +
                                 std::to_string(exp) + " exceeds word size");
        r *= base;
    }
    return r;
}

/// Element of Z/m, always stored reduced to [0, m).
struct Residue {
    int64_t value = 0;
    int64_t modulus = 1;

    Residue() = default;
    Residue(int64_t v, int64_t m) : value(0), modulus(m) {
        if (m < 1) throw domain_error("Residue: modulus must be >= 1");
        value = mod_reduce(v, m);
    }

    friend bool operator==(const Residue&, const Residue&) = default;
    friend auto operator<=>(const Residue& a, const Residue& b) {
        if (auto c = a.modulus <=> b.modulus; c != 0) return c;
        return a.value <=> b.value;
    }

    Residue operator+(const Residue& o) const {
        require_same(o);
        return Residue(value + o.value, modulus);
    }
    Residue operator-(const Residue& o) const {
        require_same(o);
        return Residue(value - o.value, modulus);
    }
    Residue operator-() const { return Residue(-value, modulus); }

    Residue scaled(int64_t k) const {
        return Residue(mul_mod(mod_reduce(k, modulus), value, modulus), modulus);
    }

    bool is_zero() const { return value == 0; }

  private:
    void require_same(const Residue& o) const {
        if (modulus != o.modulus) throw domain_error("Residue: modulus mismatch");
    }
};

} // namespace macvogan
