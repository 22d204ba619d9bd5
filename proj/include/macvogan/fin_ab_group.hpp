#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "macvogan/errors.hpp"
#include "macvogan/normal_form.hpp"
#include "macvogan/phase.hpp"
#include "macvogan/residue.hpp"

namespace macvogan {

/// Finite abelian group presented as a subgroup of Z/m_1 x ... x Z/m_k.
///
/// Construction reduces the given generators to a canonical basis whose
/// orders are the invariant factors d_1 | d_2 | ... (Hermite, then Smith).
/// Membership and coordinates are exact lattice computations: the subgroup
/// is L/M for L = <generators, m_i e_i> and M = <m_i e_i> inside Z^k.
///
/// Values are immutable after construction; all operations are pure.
class FinAbGroup {
  public:
    FinAbGroup() = default;  // trivial group in the empty ambient

    static FinAbGroup generate(IntMat generators, IntVec ambient) {
        FinAbGroup g;
        g.ambient_ = std::move(ambient);
        const std::size_t n = g.ambient_.size();
        for (int64_t m : g.ambient_)
            if (m < 1) throw domain_error("FinAbGroup: ambient moduli must be >= 1");
        IntMat stacked;
        for (auto& row : generators) {
            if (row.size() != n) throw domain_error("FinAbGroup: generator arity mismatch");
            for (std::size_t j = 0; j < n; ++j) row[j] = mod_reduce(row[j], g.ambient_[j]);
            stacked.push_back(std::move(row));
        }
        for (std::size_t i = 0; i < n; ++i) {
            IntVec row(n, 0);
            row[i] = g.ambient_[i];
            stacked.push_back(std::move(row));
        }
        g.basis_ = row_hnf(std::move(stacked));
        if (g.basis_.size() != n) throw domain_error("FinAbGroup: degenerate lattice");

        // inclusion matrix C with diag(m) = C * B, then Smith
        IntMat c(n, IntVec(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            IntVec target(n, 0);
            target[i] = g.ambient_[i];
            auto y = solve_upper_triangular(g.basis_, target);
            if (!y) throw domain_error("FinAbGroup: ambient relation outside lattice");
            c[i] = *y;
        }
        auto s = smith_normal_form(std::move(c));
        g.v_ = std::move(s.v);
        g.full_diag_ = std::move(s.diag);
        for (int64_t d : g.full_diag_)
            if (d < 1) throw domain_error("FinAbGroup: quotient is not finite");

        for (std::size_t i = 0; i < n; ++i) {
            if (g.full_diag_[i] <= 1) continue;
            g.factors_.push_back(g.full_diag_[i]);
            IntVec gen(n, 0);
            for (std::size_t j = 0; j < n; ++j) {
                int64_t acc = 0;
                for (std::size_t k = 0; k < n; ++k) acc += s.vinv[i][k] * g.basis_[k][j];
                gen[j] = mod_reduce(acc, g.ambient_[j]);
            }
            g.gens_.push_back(std::move(gen));
        }
        return g;
    }

    const IntVec& ambient() const { return ambient_; }
    const IntMat& generators() const { return gens_; }
    const IntVec& invariant_factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }

    int64_t order() const {
        int64_t o = 1;
        for (int64_t d : factors_) o *= d;
        return o;
    }

    bool is_trivial() const { return factors_.empty(); }

    IntVec zero_element() const { return IntVec(ambient_.size(), 0); }

    IntVec reduce(IntVec x) const {
        for (std::size_t j = 0; j < ambient_.size(); ++j) x[j] = mod_reduce(x[j], ambient_[j]);
        return x;
    }

    IntVec add(const IntVec& a, const IntVec& b) const {
        IntVec r(ambient_.size());
        for (std::size_t j = 0; j < ambient_.size(); ++j)
            r[j] = mod_reduce(a[j] + b[j], ambient_[j]);
        return r;
    }

    /// Coordinates of x with respect to the canonical basis, one entry per
    /// invariant factor; nullopt when x is not in the subgroup.
    std::optional<IntVec> coords_of(const IntVec& x) const {
        if (x.size() != ambient_.size()) throw domain_error("FinAbGroup: element arity mismatch");
        auto y = solve_upper_triangular(basis_, reduce(x));
        if (!y) return std::nullopt;
        IntVec coords;
        for (std::size_t i = 0; i < full_diag_.size(); ++i) {
            int64_t z = 0;
            for (std::size_t k = 0; k < full_diag_.size(); ++k) z += (*y)[k] * v_[k][i];
            if (full_diag_[i] > 1) coords.push_back(mod_reduce(z, full_diag_[i]));
        }
        return coords;
    }

    bool contains(const IntVec& x) const { return coords_of(x).has_value(); }

    IntVec element_from_coords(const IntVec& t) const {
        if (t.size() != factors_.size()) throw domain_error("FinAbGroup: coords arity mismatch");
        IntVec x(ambient_.size(), 0);
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < ambient_.size(); ++j)
                x[j] = mod_reduce(x[j] + t[i] * gens_[i][j], ambient_[j]);
        return x;
    }

    /// Every element, enumerated from the canonical basis in odometer order.
    std::vector<IntVec> elements(int64_t limit = 1000000) const {
        if (order() > limit) throw capacity_error("FinAbGroup: enumeration over budget");
        std::vector<IntVec> out;
        IntVec t(factors_.size(), 0);
        while (true) {
            out.push_back(element_from_coords(t));
            std::size_t i = 0;
            while (i < t.size() && ++t[i] == factors_[i]) t[i++] = 0;
            if (i == t.size()) break;
        }
        return out;
    }

  private:
    IntVec ambient_;
    IntMat gens_;
    IntVec factors_;
    IntMat basis_;      // HNF basis of L
    IntMat v_;          // Smith column transform
    IntVec full_diag_;  // all diagonal entries, including 1s
};

inline FinAbGroup snf_reduce(IntMat generators, IntVec ambient) {
    return FinAbGroup::generate(std::move(generators), std::move(ambient));
}

inline FinAbGroup trivial_group(IntVec ambient) {
    return FinAbGroup::generate({}, std::move(ambient));
}

/// Hom(G, Q/Z), presented on the canonical basis: the ambient moduli of the
/// dual are the invariant factors of G and the evaluation pairing below is
/// fixed against that basis.
inline FinAbGroup dual_group(const FinAbGroup& g) {
    auto factors = g.invariant_factors();
    return FinAbGroup::generate(int_identity(factors.size()), factors);
}

/// Evaluation pairing <psi, x> in Q/Z for psi in dual_group(G), x in G.
inline Phase pair_eval(const FinAbGroup& g, const IntVec& psi, const IntVec& x) {
    auto t = g.coords_of(x);
    if (!t) throw domain_error("pair_eval: element not in group");
    Phase acc;
    const auto& d = g.invariant_factors();
    for (std::size_t i = 0; i < d.size(); ++i) acc = acc + Phase(psi[i] * (*t)[i], d[i]);
    return acc;
}

/// Set equality of subgroups in a common ambient.
inline bool same_subgroup(const FinAbGroup& a, const FinAbGroup& b) {
    if (a.ambient() != b.ambient()) return false;
    for (const auto& g : a.generators())
        if (!b.contains(g)) return false;
    for (const auto& g : b.generators())
        if (!a.contains(g)) return false;
    return true;
}

} // namespace macvogan
