#include "hamop/linalg.hpp"

#include <algorithm>

namespace hamop {

namespace {

// clear denominators of a RatFunc vector into a primitive Poly vector with a
// deterministic sign (first nonzero entry has positive leading coefficient)
VecP clear_denominators(const VecR& v) {
    Poly den(1);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i).is_zero()) continue;
        Poly g = gcd(den, v(i).den());
        den = *((den * v(i).den()).exact_div_opt(g));
    }
    VecP out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out(i) = v(i).num() * *den.exact_div_opt(v(i).den());
    // primitive normalisation across entries
    Poly g;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        if (out(i).is_zero()) continue;
        g = g.is_zero() ? out(i) : gcd(g, out(i));
        if (g.is_constant()) break;
    }
    if (!g.is_zero() && !g.is_constant())
        for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = *out(i).exact_div_opt(g);
    Rational c(0);
    for (Eigen::Index i = 0; i < out.size(); ++i) c = rat_gcd(c, out(i).content());
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        if (out(i).is_zero()) continue;
        if (sign(out(i).lc()) < 0) c = -c;
        break;
    }
    if (c != 0 && c != 1)
        for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = out(i).scaled(Rational(1) / c);
    return out;
}

}  // namespace

RankNullspace rank_and_nullspace(const MatR& m) {
    RankNullspace out;
    auto R = rref(m);
    out.rank = R.rank;
    const Eigen::Index cols = m.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (auto c : R.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    for (Eigen::Index free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        VecR v(cols);
        for (Eigen::Index j = 0; j < cols; ++j) v(j) = RatFunc(0);
        v(free) = RatFunc(1);
        for (size_t r = 0; r < R.pivot_cols.size(); ++r)
            v(R.pivot_cols[r]) = -R.m(static_cast<Eigen::Index>(r), free);
        out.kernel.push_back(clear_denominators(v));
    }
    return out;
}

RankNullspace rank_and_nullspace(const MatP& m) { return rank_and_nullspace(to_ratfunc(m)); }

std::optional<VecR> linear_solve(const MatR& m, const VecR& b) {
    MatR aug(m.rows(), m.cols() + 1);
    aug.block(0, 0, m.rows(), m.cols()) = m;
    aug.col(m.cols()) = b;
    auto R = rref(aug);
    VecR x(m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) x(j) = RatFunc(0);
    for (size_t r = 0; r < R.pivot_cols.size(); ++r) {
        if (R.pivot_cols[r] == m.cols()) return std::nullopt;  // inconsistent row
        x(R.pivot_cols[r]) = R.m(static_cast<Eigen::Index>(r), m.cols());
    }
    return x;
}

Poly pfaffian4(const MatP& m) {
    if (m.rows() != 4 || m.cols() != 4) throw DimensionError("pfaffian4 expects a 4x4 matrix");
    if (!is_skew(m)) throw DimensionError("pfaffian4 expects a skew-symmetric matrix");
    return m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
}

Poly char_poly(const MatP& m, int lam) {
    if (m.rows() != m.cols()) throw DimensionError("char_poly of a non-square matrix");
    TablePtr tab;
    for (Eigen::Index i = 0; i < m.rows() && !tab; ++i)
        for (Eigen::Index j = 0; j < m.cols() && !tab; ++j)
            if (m(i, j).table()) tab = m(i, j).table();
    if (!tab) throw Error("char_poly: matrix without a variable table");
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j).uses_var(lam)) throw Error("char_poly: lambda variable occurs in matrix");
    MatP a = m;
    Poly l = Poly::var(tab, lam);
    for (Eigen::Index i = 0; i < m.rows(); ++i) a(i, i) = l - a(i, i);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i != j) a(i, j) = -a(i, j);
    return det_fraction_free(a);
}

UPoly char_poly(const MatQ& m) {
    if (m.rows() != m.cols()) throw DimensionError("char_poly of a non-square matrix");
    MatU a(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            a(i, j) = i == j ? UPoly::x() - UPoly(m(i, j)) : -UPoly(m(i, j));
        }
    return det_fraction_free(a);
}

std::optional<MatQ> inverse(const MatQ& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
    const Eigen::Index n = m.rows();
    MatQ aug(n, 2 * n);
    aug.block(0, 0, n, n) = m;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) aug(i, n + j) = Rational(i == j ? 1 : 0);
    auto R = rref(aug);
    for (Eigen::Index i = 0; i < n; ++i)
        if (R.pivot_cols.size() <= static_cast<size_t>(i) || R.pivot_cols[static_cast<size_t>(i)] != i)
            return std::nullopt;
    return MatQ(R.m.block(0, n, n, n));
}

MatP adjugate(const MatP& m) {
    if (m.rows() != m.cols()) throw DimensionError("adjugate of a non-square matrix");
    const Eigen::Index n = m.rows();
    MatP adj(n, n);
    if (n == 1) {
        adj(0, 0) = Poly(1);
        return adj;
    }
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            MatP minor(n - 1, n - 1);
            for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(rr, cc) = m(r, c);
                    ++cc;
                }
                ++rr;
            }
            Poly d = det_fraction_free(minor);
            adj(j, i) = ((i + j) % 2) ? -d : d;  // transpose of cofactors
        }
    return adj;
}

SmithForm smith_normal_form(MatU m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    SmithForm out;
    Eigen::Index t = 0;  // current corner
    while (t < rows && t < cols) {
        // locate minimal-degree nonzero entry in the remaining block
        Eigen::Index pi = -1, pj = -1;
        int best = -1;
        for (Eigen::Index i = t; i < rows; ++i)
            for (Eigen::Index j = t; j < cols; ++j)
                if (!m(i, j).is_zero() && (best < 0 || m(i, j).deg() < best)) {
                    best = m(i, j).deg();
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        m.row(pi).swap(m.row(t));
        m.col(pj).swap(m.col(t));
        bool clean = false;
        while (!clean) {
            clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i) {
                if (m(i, t).is_zero()) continue;
                auto [q, r] = UPoly::divmod(m(i, t), m(t, t));
                for (Eigen::Index j = t; j < cols; ++j) m(i, j) = m(i, j) - q * m(t, j);
                if (!r.is_zero()) {
                    m.row(i).swap(m.row(t));
                    clean = false;
                }
            }
            for (Eigen::Index j = t + 1; j < cols; ++j) {
                if (m(t, j).is_zero()) continue;
                auto [q, r] = UPoly::divmod(m(t, j), m(t, t));
                for (Eigen::Index i = t; i < rows; ++i) m(i, j) = m(i, j) - q * m(i, t);
                if (!r.is_zero()) {
                    m.col(j).swap(m.col(t));
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the whole remaining block
            for (Eigen::Index i = t + 1; i < rows && clean; ++i)
                for (Eigen::Index j = t + 1; j < cols && clean; ++j) {
                    if (m(i, j).is_zero()) continue;
                    auto [q, r] = UPoly::divmod(m(i, j), m(t, t));
                    if (!r.is_zero()) {
                        for (Eigen::Index jj = t; jj < cols; ++jj)
                            m(t, jj) = m(t, jj) + m(i, jj);
                        clean = false;
                    }
                }
        }
        out.d.push_back(m(t, t).monic());
        ++t;
    }
    out.rank = static_cast<int>(out.d.size());
    return out;
}

}  // namespace hamop
