#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "macvogan/errors.hpp"

namespace macvogan {

/// Element of Q/Z as a reduced fraction num/den with 0 <= num < den.
/// Used for unramified Frobenius data: only roots of unity are representable.
struct Phase {
    int64_t num = 0;
    int64_t den = 1;

    Phase() = default;
    Phase(int64_t n, int64_t d) {
        if (d < 1) throw domain_error("Phase: denominator must be >= 1");
        n %= d;
        if (n < 0) n += d;
        int64_t g = std::gcd(n, d);
        num = n / g;
        den = d / g;
    }

    friend bool operator==(const Phase&, const Phase&) = default;
    friend auto operator<=>(const Phase& a, const Phase& b) {
        // reduced fractions in [0,1): compare by cross multiplication
        return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
    }

    Phase operator+(const Phase& o) const {
        int64_t d = std::lcm(den, o.den);
        return Phase(num * (d / den) + o.num * (d / o.den), d);
    }
    Phase operator-(const Phase& o) const {
        int64_t d = std::lcm(den, o.den);
        return Phase(num * (d / den) - o.num * (d / o.den), d);
    }
    Phase operator-() const { return Phase(-num, den); }

    Phase times(int64_t k) const { return Phase(num * (k % den), den); }

    bool is_zero() const { return num == 0; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    static Phase parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) throw domain_error("Phase: expected \"num/den\": " + s);
        int64_t num = 0, den = 0;
        std::size_t na = 0, nb = 0;
        try {
            num = std::stoll(s.substr(0, slash), &na);
            den = std::stoll(s.substr(slash + 1), &nb);
        } catch (const std::exception&) {
            throw domain_error("Phase: cannot parse \"" + s + "\"");
        }
        if (na != slash || nb != s.size() - slash - 1)
            throw domain_error("Phase: trailing characters in \"" + s + "\"");
        return Phase(num, den);
    }
};

} // namespace macvogan
