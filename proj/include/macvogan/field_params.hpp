#pragma once

#include <cstdint>
#include <string>

#include "macvogan/errors.hpp"

namespace macvogan {

/// Residue field size q = p^r, validated at construction.
struct FieldParams {
    int64_t q = 2;
    int64_t p = 2;
    int r = 1;

    static FieldParams make(int64_t q) {
        if (q < 2) throw domain_error("FieldParams: q must be >= 2");
        int64_t n = q;
        int64_t p = 0;
        for (int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                p = d;
                break;
            }
        if (p == 0) p = n;
        int r = 0;
        while (n % p == 0) {
            n /= p;
            ++r;
        }
        if (n != 1)
            throw domain_error("FieldParams: q = " + std::to_string(q) + " is not a prime power");
        return FieldParams{q, p, r};
    }

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

} // namespace macvogan
