#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eis/errors.hpp"
#include "eis/rational.hpp"

namespace eis {

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;

inline IMat identity_mat(int n) {
    IMat m(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IVec add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IVec scale(long long c, const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const IVec& a) {
    for (long long x : a) if (x != 0) return false;
    return true;
}

inline IMat mat_mul(const IMat& a, const IMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IMat r(n, IVec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

inline IVec mat_vec(const IMat& a, const IVec& x) {
    IVec r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
    return r;
}

inline IMat transpose(const IMat& a) {
    if (a.empty()) return {};
    IMat r(a[0].size(), IVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

// Row-style Hermite normal form of the lattice spanned by the rows of `gens`.
// Result: canonical basis, pivots positive, entries above each pivot reduced
// into [0, pivot). Zero rows are dropped.
inline IMat hermite_row_basis(IMat gens) {
    if (gens.empty()) return {};
    size_t cols = gens[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < gens.size(); ++col) {
        // euclidean elimination in this column below `row`
        while (true) {
            size_t piv = row;
            long long best = 0;
            for (size_t r = row; r < gens.size(); ++r) {
                long long v = std::llabs(gens[r][col]);
                if (v != 0 && (best == 0 || v < best)) { best = v; piv = r; }
            }
            if (best == 0) break;
            std::swap(gens[row], gens[piv]);
            bool clean = true;
            for (size_t r = row + 1; r < gens.size(); ++r) {
                if (gens[r][col] == 0) continue;
                long long q = gens[r][col] / gens[row][col];
                gens[r] = sub(gens[r], scale(q, gens[row]));
                if (gens[r][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (gens[row][col] == 0) continue;
        if (gens[row][col] < 0) gens[row] = scale(-1, gens[row]);
        // reduce entries above the pivot
        for (size_t r = 0; r < row; ++r) {
            long long q = gens[r][col] / gens[row][col];
            if (gens[r][col] % gens[row][col] < 0) q -= 1;
            if (q != 0) gens[r] = sub(gens[r], scale(q, gens[row]));
        }
        ++row;
    }
    gens.resize(row);
    return gens;
}

// Membership of x in the row span (over Z) of an HNF basis.
inline bool hnf_contains(const IMat& hnf, IVec x) {
    size_t r = 0;
    size_t cols = x.size();
    for (size_t col = 0; col < cols; ++col) {
        if (r < hnf.size()) {
            // locate pivot column of row r
            size_t pc = 0;
            while (pc < cols && hnf[r][pc] == 0) ++pc;
            if (pc == col) {
                if (x[col] % hnf[r][col] != 0) return false;
                long long q = x[col] / hnf[r][col];
                if (q != 0) x = sub(x, scale(q, hnf[r]));
                ++r;
                continue;
            }
        }
        if (x[col] != 0) return false;
    }
    return is_zero(x);
}

// Canonical representative of x modulo the row span of an HNF basis.
inline IVec hnf_reduce(const IMat& hnf, IVec x) {
    size_t r = 0;
    size_t cols = x.size();
    for (size_t col = 0; col < cols && r < hnf.size(); ++col) {
        size_t pc = 0;
        while (pc < cols && hnf[r][pc] == 0) ++pc;
        if (pc != col) continue;
        long long p = hnf[r][col];
        long long q = x[col] / p;
        if (x[col] % p < 0) q -= 1;
        if (q != 0) x = sub(x, scale(q, hnf[r]));
        ++r;
    }
    return x;
}

struct SmithForm {
    IMat u;      // unimodular, rows
    IMat u_inv;  // inverse of u
    IMat d;      // u * a * v = d, diagonal
    IMat v;      // unimodular
    IVec factors() const {
        size_t k = std::min(d.size(), d.empty() ? 0 : d[0].size());
        IVec f;
        for (size_t i = 0; i < k; ++i) f.push_back(d[i][i]);
        return f;
    }
};

// Smith normal form with transform tracking; entries stay small for the
// lattices handled here (rank <= 8).
inline SmithForm smith_normal_form(IMat a) {
    size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    SmithForm s;
    s.u = identity_mat((int)n);
    s.u_inv = identity_mat((int)n);
    s.v = identity_mat((int)m);

    auto row_sub = [&](size_t dst, size_t src, long long q) {
        a[dst] = sub(a[dst], scale(q, a[src]));
        s.u[dst] = sub(s.u[dst], scale(q, s.u[src]));
        for (size_t i = 0; i < n; ++i) s.u_inv[i][src] += q * s.u_inv[i][dst];
    };
    auto row_swap = [&](size_t i, size_t j) {
        std::swap(a[i], a[j]);
        std::swap(s.u[i], s.u[j]);
        for (size_t r = 0; r < n; ++r) std::swap(s.u_inv[r][i], s.u_inv[r][j]);
    };
    auto row_neg = [&](size_t i) {
        a[i] = scale(-1, a[i]);
        s.u[i] = scale(-1, s.u[i]);
        for (size_t r = 0; r < n; ++r) s.u_inv[r][i] = -s.u_inv[r][i];
    };
    auto col_sub = [&](size_t dst, size_t src, long long q) {
        for (size_t r = 0; r < n; ++r) a[r][dst] -= q * a[r][src];
        for (size_t r = 0; r < m; ++r) s.v[r][dst] -= q * s.v[r][src];
    };
    auto col_swap = [&](size_t i, size_t j) {
        for (size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
        for (size_t r = 0; r < m; ++r) std::swap(s.v[r][i], s.v[r][j]);
    };
    auto col_neg = [&](size_t i) {
        for (size_t r = 0; r < n; ++r) a[r][i] = -a[r][i];
        for (size_t r = 0; r < m; ++r) s.v[r][i] = -s.v[r][i];
    };

    size_t t = 0;
    while (t < n && t < m) {
        // find smallest nonzero entry in the remaining block
        size_t pi = t, pj = t;
        long long best = 0;
        for (size_t i = t; i < n; ++i)
            for (size_t j = t; j < m; ++j) {
                long long v = std::llabs(a[i][j]);
                if (v != 0 && (best == 0 || v < best)) { best = v; pi = i; pj = j; }
            }
        if (best == 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        if (a[t][t] < 0) row_neg(t);

        bool again = false;
        for (size_t i = t + 1; i < n; ++i) {
            if (a[i][t] == 0) continue;
            long long q = a[i][t] / a[t][t];
            row_sub(i, t, q);
            if (a[i][t] != 0) again = true;
        }
        for (size_t j = t + 1; j < m; ++j) {
            if (a[t][j] == 0) continue;
            long long q = a[t][j] / a[t][t];
            col_sub(j, t, q);
            if (a[t][j] != 0) again = true;
        }
        if (again) continue;

        // enforce divisibility d_t | a[i][j]
        bool fixed = true;
        for (size_t i = t + 1; i < n && fixed; ++i)
            for (size_t j = t + 1; j < m && fixed; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    row_sub(t, i, -1); // add row i to row t, then restart block
                    fixed = false;
                }
        if (fixed) ++t;
    }
    (void)col_neg;
    s.d = a;
    return s;
}

// Gaussian solve a * x = b over Q; a square nonsingular.
inline std::vector<Rational> solve_rational(const IMat& a, const std::vector<Rational>& b) {
    size_t n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
        m[i][n] = b[i];
    }
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("solve_rational: singular matrix");
        std::swap(m[c], m[piv]);
        Rational inv = Rational(1) / m[c][c];
        for (size_t j = c; j <= n; ++j) m[c][j] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            Rational f = m[r][c];
            for (size_t j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

// Integer solve a * x = b (a square nonsingular); nullopt if inconsistent over Z.
inline std::optional<IVec> solve_integer(const IMat& a, const IVec& b) {
    std::vector<Rational> rb(b.size());
    for (size_t i = 0; i < b.size(); ++i) rb[i] = Rational(b[i]);
    auto x = solve_rational(a, rb);
    IVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_integer()) return std::nullopt;
        r[i] = x[i].to_integer();
    }
    return r;
}

} // namespace eis
