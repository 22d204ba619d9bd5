#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "macvogan/errors.hpp"

namespace macvogan {

using IntMat = std::vector<std::vector<int64_t>>;
using IntVec = std::vector<int64_t>;

inline IntMat int_identity(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

/// Row-style Hermite normal form. Returns the nonzero rows (a basis of the
/// row lattice), upper triangular with positive pivots and entries above each
/// pivot reduced into [0, pivot).
inline IntMat row_hnf(IntMat a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        // Euclid on column j below row r until a single pivot survives.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a[i][j] != 0 && (best == rows || std::abs(a[i][j]) < std::abs(a[best][j])))
                    best = i;
            if (best == rows) break;
            std::swap(a[r], a[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a[i][j] == 0) continue;
                int64_t q = a[i][j] / a[r][j];
                for (std::size_t k = 0; k < cols; ++k) a[i][k] -= q * a[r][k];
                if (a[i][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[r][j] == 0) continue;
        if (a[r][j] < 0)
            for (std::size_t k = 0; k < cols; ++k) a[r][k] = -a[r][k];
        for (std::size_t i = 0; i < r; ++i) {
            int64_t q = a[i][j] / a[r][j];
            if (a[i][j] % a[r][j] < 0) --q;
            if (q != 0)
                for (std::size_t k = 0; k < cols; ++k) a[i][k] -= q * a[r][k];
        }
        ++r;
    }
    a.resize(r);
    return a;
}

struct SmithResult {
    IntVec diag;  // d_1 | d_2 | ... , all >= 0
    IntMat v;     // column transform: u * a * v = diag(d)
    IntMat vinv;  // v^{-1}, tracked alongside
};

/// Smith normal form of a square integer matrix. Row transforms are not
/// tracked; the column transform and its inverse are, which is all the
/// quotient-group construction needs.
inline SmithResult smith_normal_form(IntMat a) {
    const std::size_t n = a.size();
    SmithResult res{IntVec(n, 0), int_identity(n), int_identity(n)};

    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(res.v[r][i], res.v[r][j]);
        std::swap(res.vinv[i], res.vinv[j]);
    };
    auto col_addmul = [&](std::size_t dst, std::size_t src, int64_t c) {
        // col_dst += c * col_src;  vinv row_src -= c * row_dst
        for (std::size_t r = 0; r < n; ++r) a[r][dst] += c * a[r][src];
        for (std::size_t r = 0; r < n; ++r) res.v[r][dst] += c * res.v[r][src];
        for (std::size_t k = 0; k < n; ++k) res.vinv[src][k] -= c * res.vinv[dst][k];
    };
    auto col_negate = [&](std::size_t i) {
        for (std::size_t r = 0; r < n; ++r) a[r][i] = -a[r][i];
        for (std::size_t r = 0; r < n; ++r) res.v[r][i] = -res.v[r][i];
        for (std::size_t k = 0; k < n; ++k) res.vinv[i][k] = -res.vinv[i][k];
    };
    auto row_swap = [&](std::size_t i, std::size_t j) { std::swap(a[i], a[j]); };
    auto row_addmul = [&](std::size_t dst, std::size_t src, int64_t c) {
        for (std::size_t k = 0; k < n; ++k) a[dst][k] += c * a[src][k];
    };

    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            std::size_t pi = n, pj = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 &&
                        (pi == n || std::abs(a[i][j]) < std::abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == n) break;  // submatrix is zero
            if (pi != t) row_swap(t, pi);
            if (pj != t) col_swap(t, pj);

            bool again = false;
            for (std::size_t i = t + 1; i < n; ++i)
                if (a[i][t] != 0) {
                    row_addmul(i, t, -(a[i][t] / a[t][t]));
                    if (a[i][t] != 0) again = true;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (a[t][j] != 0) {
                    col_addmul(j, t, -(a[t][j] / a[t][t]));
                    if (a[t][j] != 0) again = true;
                }
            if (again) continue;

            // divisibility sweep: fold any bad entry into row t and redo
            bool divisible = true;
            for (std::size_t i = t + 1; i < n && divisible; ++i)
                for (std::size_t j = t + 1; j < n && divisible; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        row_addmul(t, i, 1);
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (a[t][t] < 0) col_negate(t);
        res.diag[t] = a[t][t];
    }
    return res;
}

/// Solve x * B = target for an upper-triangular basis B (rows). Returns
/// nullopt when the target is not in the row lattice.
inline std::optional<IntVec> solve_upper_triangular(const IntMat& b, const IntVec& target) {
    const std::size_t n = b.size();
    IntVec x(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        int64_t acc = target[j];
        for (std::size_t k = 0; k < j; ++k) acc -= x[k] * b[k][j];
        if (b[j][j] == 0 || acc % b[j][j] != 0) return std::nullopt;
        x[j] = acc / b[j][j];
    }
    return x;
}

} // namespace macvogan
