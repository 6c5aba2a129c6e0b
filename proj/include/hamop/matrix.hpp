#pragma once

#include <Eigen/Core>

#include "hamop/poly.hpp"
#include "hamop/ratfunc.hpp"
#include "hamop/upoly.hpp"

namespace Eigen {

template <>
struct NumTraits<hamop::Rational> : GenericNumTraits<hamop::Rational> {
    typedef hamop::Rational Real;
    typedef hamop::Rational NonInteger;
    typedef hamop::Rational Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 100
    };
};

template <>
struct NumTraits<hamop::Poly> : GenericNumTraits<hamop::Poly> {
    typedef hamop::Poly Real;
    typedef hamop::Poly NonInteger;
    typedef hamop::Poly Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 50,
        AddCost = 500,
        MulCost = 1000
    };
};

template <>
struct NumTraits<hamop::RatFunc> : GenericNumTraits<hamop::RatFunc> {
    typedef hamop::RatFunc Real;
    typedef hamop::RatFunc NonInteger;
    typedef hamop::RatFunc Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 100,
        AddCost = 2000,
        MulCost = 2000
    };
};

template <>
struct NumTraits<hamop::UPoly> : GenericNumTraits<hamop::UPoly> {
    typedef hamop::UPoly Real;
    typedef hamop::UPoly NonInteger;
    typedef hamop::UPoly Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 20,
        AddCost = 200,
        MulCost = 400
    };
};

}  // namespace Eigen

namespace hamop {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatQ = Mat<Rational>;
using MatP = Mat<Poly>;
using MatR = Mat<RatFunc>;
using MatU = Mat<UPoly>;
using VecQ = Vec<Rational>;
using VecP = Vec<Poly>;
using VecR = Vec<RatFunc>;

inline MatP zero_mat(TablePtr tab, Eigen::Index r, Eigen::Index c) {
    MatP m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Poly(std::move(tab));
    return m;
}

inline MatR to_ratfunc(const MatP& m) {
    MatR r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = RatFunc(m(i, j));
    return r;
}

inline MatP to_poly(const MatQ& m, TablePtr tab = nullptr) {
    MatP r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            r(i, j) = tab ? Poly::constant(tab, m(i, j)) : Poly(m(i, j));
    return r;
}

template <class S>
bool is_symmetric(const Mat<S>& m) {
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i + 1; j < m.cols(); ++j)
            if (!(m(i, j) == m(j, i))) return false;
    return true;
}

template <class S>
bool is_skew(const Mat<S>& m) {
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i; j < m.cols(); ++j) {
            S s = m(i, j) + m(j, i);
            if (!(s == S(0))) return false;
        }
    return true;
}

}  // namespace hamop
