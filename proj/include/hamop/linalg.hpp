#pragma once

#include <optional>
#include <vector>

#include "hamop/matrix.hpp"

namespace hamop {

// ring scalar glue for fraction-free elimination
template <class S>
struct RingOps;

template <>
struct RingOps<Rational> {
    static bool is_zero(const Rational& a) { return a == 0; }
    static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct RingOps<Poly> {
    static bool is_zero(const Poly& a) { return a.is_zero(); }
    static Poly exact_div(const Poly& a, const Poly& b) {
        auto q = a.exact_div_opt(b);
        if (!q) throw NotExactDivision("fraction-free elimination: non-exact division");
        return *q;
    }
};

template <>
struct RingOps<UPoly> {
    static bool is_zero(const UPoly& a) { return a.is_zero(); }
    static UPoly exact_div(const UPoly& a, const UPoly& b) { return a.exact_div(b); }
};

// Bareiss fraction-free determinant over an integral domain (every interior
// division is exact and checked).
template <class S>
S det_fraction_free(Mat<S> m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
    const Eigen::Index n = m.rows();
    if (n == 0) return S(1);
    S prev = S(1);
    int sgn = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = k; r < n; ++r)
            if (!RingOps<S>::is_zero(m(r, k))) {
                piv = r;
                break;
            }
        if (piv < 0) return S(0);
        if (piv != k) {
            m.row(piv).swap(m.row(k));
            sgn = -sgn;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                m(i, j) = RingOps<S>::exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
    }
    S d = m(n - 1, n - 1);
    return sgn < 0 ? -d : d;
}

// field scalar glue for Gaussian elimination
template <class S>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static bool is_zero(const Rational& a) { return a == 0; }
    static Rational div(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct FieldOps<RatFunc> {
    static bool is_zero(const RatFunc& a) { return a.is_zero(); }
    static RatFunc div(const RatFunc& a, const RatFunc& b) { return a / b; }
};

template <class S>
struct Rref {
    Mat<S> m;
    std::vector<Eigen::Index> pivot_cols;
    int rank = 0;
};

// reduced row echelon form over a field; deterministic pivoting (first
// nonzero entry in column order)
template <class S>
Rref<S> rref(Mat<S> m) {
    Rref<S> out;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (!FieldOps<S>::is_zero(m(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));
        S p = m(r, c);
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) = FieldOps<S>::div(m(r, j), p);
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || FieldOps<S>::is_zero(m(i, c))) continue;
            S f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = static_cast<int>(out.pivot_cols.size());
    out.m = std::move(m);
    return out;
}

struct RankNullspace {
    int rank = 0;
    std::vector<VecP> kernel;  // denominator-cleared, primitive, deterministic order
};

// rank over the fraction field and a basis of the right kernel
RankNullspace rank_and_nullspace(const MatR& m);
RankNullspace rank_and_nullspace(const MatP& m);

// particular solution of m x = b over the fraction field (nullopt when
// inconsistent)
std::optional<VecR> linear_solve(const MatR& m, const VecR& b);

// Pfaffian of a 4x4 skew-symmetric matrix
Poly pfaffian4(const MatP& m);

// det(lam*I - m); `lam` must be a variable of the shared table not used by m
Poly char_poly(const MatP& m, int lam);
UPoly char_poly(const MatQ& m);

// exact inverse of a rational matrix
std::optional<MatQ> inverse(const MatQ& m);

// adjugate over the polynomial ring (cofactor expansion)
MatP adjugate(const MatP& m);

struct SmithForm {
    std::vector<UPoly> d;  // monic invariant factors d1 | d2 | ... | dr
    int rank = 0;
};

// Smith normal form over Q[lam]
SmithForm smith_normal_form(MatU m);

}  // namespace hamop
