#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "macvogan/errors.hpp"
#include "macvogan/field_params.hpp"
#include "macvogan/residue.hpp"

namespace macvogan {

/// Exact arithmetic tables for F_q, q = p^r. Elements are encoded as base-p
/// digit strings read as polynomial coefficients; for r > 1 the modulus is
/// the lexicographically first monic polynomial making x primitive (choice
/// recorded in `poly` for reproducibility).
struct FieldTable {
    int64_t q = 2;
    int64_t p = 2;
    int r = 1;
    std::vector<int64_t> poly;  // coefficients c_0..c_{r-1} of the modulus, empty for r = 1
    std::vector<uint8_t> add;   // q*q
    std::vector<uint8_t> mul;   // q*q
    std::vector<uint8_t> neg;   // q
    std::vector<uint8_t> inv;   // q, inv[0] unused
    int64_t primitive = 0;      // a generator of F_q^*

    uint8_t addf(uint8_t a, uint8_t b) const { return add[a * q + b]; }
    uint8_t mulf(uint8_t a, uint8_t b) const { return mul[a * q + b]; }
    std::string poly_str() const {
        if (r == 1) return "prime field";
        std::string s = "x^" + std::to_string(r);
        for (int i = r - 1; i >= 0; --i)
            if (poly[i] != 0)
                s += " + " + (i == 0 ? std::to_string(poly[i])
                              : (poly[i] == 1 ? "" : std::to_string(poly[i])) + "x" +
                                    (i == 1 ? "" : "^" + std::to_string(i)));
        return s;
    }
};

namespace detail {

inline std::vector<int64_t> digits_of(int64_t v, int64_t p, int r) {
    std::vector<int64_t> d(r);
    for (int i = 0; i < r; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

inline int64_t digits_value(const std::vector<int64_t>& d, int64_t p) {
    int64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

// product of the polynomials a*b reduced mod (x^r + poly)
inline int64_t poly_mul(int64_t a, int64_t b, int64_t p, int r,
                        const std::vector<int64_t>& poly) {
    auto da = digits_of(a, p, r), db = digits_of(b, p, r);
    std::vector<int64_t> prod(2 * r - 1, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (int k = 2 * r - 2; k >= r; --k) {
        int64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        // x^r = -poly
        for (int i = 0; i < r; ++i) prod[k - r + i] = ((prod[k - r + i] - c * poly[i]) % p + p) % p;
    }
    prod.resize(r);
    return digits_value(prod, p);
}

} // namespace detail

/// Build exact F_q tables. Throws for non-prime-power q.
inline FieldTable field_arithmetic(int64_t q) {
    auto params = FieldParams::make(q);
    FieldTable t;
    t.q = q;
    t.p = params.p;
    t.r = params.r;

    auto order_of = [&](int64_t g, auto&& mulfn) {
        int64_t acc = g, ord = 1;
        while (acc != 1) {
            acc = mulfn(acc, g);
            ++ord;
            if (ord > q) return int64_t{0};  // not a unit of full order
        }
        return ord;
    };

    if (t.r == 1) {
        for (int64_t g = 1; g < q; ++g)
            if (order_of(g, [&](int64_t a, int64_t b) { return (a * b) % q; }) == q - 1) {
                t.primitive = g;
                break;
            }
    } else {
        // first monic polynomial (by the base-p value of its coefficients)
        // for which x generates the unit group
        for (int64_t code = 0; code < q; ++code) {
            auto cand = detail::digits_of(code, t.p, t.r);
            if (cand[0] == 0) continue;  // x would not be a unit
            auto mulfn = [&](int64_t a, int64_t b) {
                return detail::poly_mul(a, b, t.p, t.r, cand);
            };
            if (order_of(t.p /* the element x */, mulfn) == q - 1) {
                t.poly = cand;
                t.primitive = t.p;
                break;
            }
        }
        if (t.poly.empty()) throw domain_error("field_arithmetic: no primitive polynomial found");
    }

    t.add.resize(q * q);
    t.mul.resize(q * q);
    t.neg.resize(q);
    t.inv.resize(q);
    for (int64_t a = 0; a < q; ++a) {
        auto da = detail::digits_of(a, t.p, t.r);
        std::vector<int64_t> dn(t.r);
        for (int i = 0; i < t.r; ++i) dn[i] = (t.p - da[i]) % t.p;
        t.neg[a] = static_cast<uint8_t>(detail::digits_value(dn, t.p));
        for (int64_t b = 0; b < q; ++b) {
            auto db = detail::digits_of(b, t.p, t.r);
            std::vector<int64_t> ds(t.r);
            for (int i = 0; i < t.r; ++i) ds[i] = (da[i] + db[i]) % t.p;
            t.add[a * q + b] = static_cast<uint8_t>(detail::digits_value(ds, t.p));
            t.mul[a * q + b] = static_cast<uint8_t>(
                t.r == 1 ? (a * b) % q : detail::poly_mul(a, b, t.p, t.r, t.poly));
        }
    }
    for (int64_t a = 1; a < q; ++a)
        for (int64_t b = 1; b < q; ++b)
            if (t.mul[a * q + b] == 1) t.inv[a] = static_cast<uint8_t>(b);
    return t;
}

enum class MatrixKind { GL, SL };

struct MatrixGroupSpec {
    MatrixKind kind = MatrixKind::GL;
    int n = 1;
    int64_t q = 2;
};

inline int64_t oracle_budget() {
    if (const char* env = std::getenv("MACVOGAN_BUDGET")) return std::atoll(env);
    return 10000000;
}

inline int64_t matrix_group_order(const MatrixGroupSpec& spec) {
    int64_t qn = checked_pow(spec.q, spec.n);
    int64_t order = 1;
    int64_t qi = 1;
    for (int i = 0; i < spec.n; ++i) {
        order *= qn - qi;
        qi *= spec.q;
    }
    if (spec.kind == MatrixKind::SL) order /= spec.q - 1;
    return order;
}

namespace detail {

constexpr int kMaxDim = 6;
using SmallMat = std::array<uint8_t, kMaxDim * kMaxDim>;

struct MatView {
    const FieldTable* f;
    int n;
    int bits;

    uint64_t encode(const SmallMat& m) const {
        uint64_t code = 0;
        for (int i = n * n - 1; i >= 0; --i) code = (code << bits) | m[i];
        return code;
    }
    SmallMat decode(uint64_t code) const {
        SmallMat m{};
        for (int i = 0; i < n * n; ++i) {
            m[i] = static_cast<uint8_t>(code & ((uint64_t{1} << bits) - 1));
            code >>= bits;
        }
        return m;
    }
    SmallMat mul(const SmallMat& a, const SmallMat& b) const {
        SmallMat c{};
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                uint8_t aik = a[i * n + k];
                if (aik == 0) continue;
                const uint8_t* row = f->mul.data() + aik * f->q;
                for (int j = 0; j < n; ++j)
                    c[i * n + j] = f->addf(c[i * n + j], row[b[k * n + j]]);
            }
        return c;
    }
    SmallMat identity() const {
        SmallMat m{};
        for (int i = 0; i < n; ++i) m[i * n + i] = 1;
        return m;
    }
    // Gauss-Jordan inverse; the input is known invertible
    SmallMat inverse(SmallMat a) const {
        auto inv = identity();
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int i = col; i < n; ++i)
                if (a[i * n + col] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) throw domain_error("matrix inverse: singular");
            for (int j = 0; j < n; ++j) {
                std::swap(a[pivot * n + j], a[col * n + j]);
                std::swap(inv[pivot * n + j], inv[col * n + j]);
            }
            uint8_t s = f->inv[a[col * n + col]];
            for (int j = 0; j < n; ++j) {
                a[col * n + j] = f->mulf(s, a[col * n + j]);
                inv[col * n + j] = f->mulf(s, inv[col * n + j]);
            }
            for (int i = 0; i < n; ++i) {
                if (i == col || a[i * n + col] == 0) continue;
                uint8_t c = a[i * n + col];
                for (int j = 0; j < n; ++j) {
                    a[i * n + j] = f->addf(a[i * n + j], f->neg[f->mulf(c, a[col * n + j])]);
                    inv[i * n + j] = f->addf(inv[i * n + j], f->neg[f->mulf(c, inv[col * n + j])]);
                }
            }
        }
        return inv;
    }
};

/// Visited-set over packed codes: a flat bitset when the code space is
/// small enough, a hash set otherwise.
class CodeSet {
  public:
    CodeSet(int code_bits, int64_t expected) {
        if (code_bits <= 28) {
            bits_.assign(std::size_t{1} << code_bits, false);
        } else {
            hash_.reserve(static_cast<std::size_t>(expected) * 2);
        }
    }
    bool insert(uint64_t code) {
        if (!bits_.empty()) {
            if (bits_[code]) return false;
            bits_[code] = true;
            return true;
        }
        return hash_.insert(code).second;
    }
    bool contains(uint64_t code) const {
        if (!bits_.empty()) return bits_[code];
        return hash_.count(code) != 0;
    }

  private:
    std::vector<bool> bits_;
    std::unordered_set<uint64_t> hash_;
};

inline std::vector<SmallMat> transvection_generators(const MatrixGroupSpec& spec,
                                                     const MatView& view) {
    std::vector<SmallMat> gens;
    for (int i = 0; i < spec.n; ++i)
        for (int j = 0; j < spec.n; ++j) {
            if (i == j) continue;
            for (int64_t c = 1; c < spec.q; ++c) {
                auto m = view.identity();
                m[i * spec.n + j] = static_cast<uint8_t>(c);
                gens.push_back(m);
            }
        }
    if (spec.kind == MatrixKind::GL && spec.q > 2) {
        auto m = view.identity();
        m[0] = static_cast<uint8_t>(view.f->primitive);
        gens.push_back(m);
    }
    if (gens.empty() && spec.kind == MatrixKind::GL && spec.q > 2)
        gens.push_back(SmallMat{static_cast<uint8_t>(view.f->primitive)});
    return gens;
}

/// Small candidate set: one transvection per unit, a signed n-cycle, and
/// the primitive diagonal for GL. Callers must verify it generates (the
/// closure size check below) and fall back to the full transvection set.
inline std::vector<SmallMat> small_generators(const MatrixGroupSpec& spec, const MatView& view) {
    std::vector<SmallMat> gens;
    if (spec.n >= 2) {
        for (int64_t c = 1; c < spec.q; ++c) {
            auto t = view.identity();
            t[0 * spec.n + 1] = static_cast<uint8_t>(c);
            gens.push_back(t);
        }
        SmallMat cycle{};
        for (int i = 0; i + 1 < spec.n; ++i) cycle[(i + 1) * spec.n + i] = 1;
        cycle[0 * spec.n + (spec.n - 1)] =
            spec.n % 2 == 1 ? uint8_t{1} : view.f->neg[1];  // det +1
        gens.push_back(cycle);
    }
    if (spec.kind == MatrixKind::GL && spec.q > 2) {
        auto m = view.identity();
        m[0] = static_cast<uint8_t>(view.f->primitive);
        gens.push_back(m);
    }
    return gens;
}

inline std::vector<uint64_t> cayley_closure(const MatView& view,
                                            const std::vector<SmallMat>& gens,
                                            int code_bits, int64_t order) {
    CodeSet seen(code_bits, order);
    std::vector<uint64_t> out;
    out.reserve(static_cast<std::size_t>(order));
    out.push_back(view.encode(view.identity()));
    seen.insert(out[0]);
    for (std::size_t head = 0; head < out.size(); ++head) {
        auto m = view.decode(out[head]);
        for (const auto& g : gens) {
            uint64_t c = view.encode(view.mul(m, g));
            if (seen.insert(c)) out.push_back(c);
        }
    }
    return out;
}

} // namespace detail

namespace detail {

struct GroupData {
    FieldTable field;
    MatView view;
    int code_bits;
    std::vector<SmallMat> gens;
    std::vector<uint64_t> elements;
};

inline GroupData build_group(const MatrixGroupSpec& spec) {
    if (spec.n < 1 || spec.n > kMaxDim)
        throw capacity_error("matrix group: dimension outside 1.." + std::to_string(kMaxDim));
    GroupData data{field_arithmetic(spec.q), {}, 0, {}, {}};
    int bits = 1;
    while ((int64_t{1} << bits) < spec.q) ++bits;
    data.code_bits = spec.n * spec.n * bits;
    if (data.code_bits > 64)
        throw capacity_error("matrix group: matrices do not pack into 64 bits");
    int64_t order = matrix_group_order(spec);
    if (order > oracle_budget())
        throw capacity_error("matrix group: order " + std::to_string(order) +
                             " exceeds budget " + std::to_string(oracle_budget()));
    data.view = MatView{&data.field, spec.n, bits};

    data.gens = small_generators(spec, data.view);
    data.elements = cayley_closure(data.view, data.gens, data.code_bits, order);
    if (static_cast<int64_t>(data.elements.size()) != order) {
        data.gens = transvection_generators(spec, data.view);
        data.elements = cayley_closure(data.view, data.gens, data.code_bits, order);
    }
    if (static_cast<int64_t>(data.elements.size()) != order)
        throw domain_error("matrix group: generators failed to reach the closed-form order");
    return data;
}

} // namespace detail

/// All elements of GL_n(F_q) or SL_n(F_q), as packed codes, generated by
/// Cayley closure. Hard-errors past the element budget (MACVOGAN_BUDGET
/// overrides the 10^7 default).
inline std::vector<uint64_t> matrix_group_elements(const MatrixGroupSpec& spec,
                                                   const FieldTable&) {
    return detail::build_group(spec).elements;
}

/// Conjugacy orbit sizes by explicit orbit partition of the element set
/// under conjugation by the group generators.
inline std::vector<int64_t> conj_class_sizes(const MatrixGroupSpec& spec) {
    auto data = detail::build_group(spec);
    const auto& view = data.view;
    std::vector<std::pair<detail::SmallMat, detail::SmallMat>> conjugators;
    for (const auto& g : data.gens) conjugators.emplace_back(g, view.inverse(g));

    detail::CodeSet visited(data.code_bits, static_cast<int64_t>(data.elements.size()));
    std::vector<int64_t> sizes;
    std::vector<uint64_t> queue;
    for (uint64_t start : data.elements) {
        if (!visited.insert(start)) continue;
        queue.clear();
        queue.push_back(start);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto m = view.decode(queue[head]);
            for (const auto& [g, ginv] : conjugators) {
                uint64_t c = view.encode(view.mul(view.mul(g, m), ginv));
                if (visited.insert(c)) queue.push_back(c);
            }
        }
        sizes.push_back(static_cast<int64_t>(queue.size()));
    }
    return sizes;
}

/// Exact number of conjugacy classes.
inline int64_t conj_class_count(const MatrixGroupSpec& spec) {
    return static_cast<int64_t>(conj_class_sizes(spec).size());
}

} // namespace macvogan
