#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hamop/poly.hpp"
#include "hamop/rational.hpp"

namespace hamop {

// Dense univariate polynomial over Q.  Workhorse for Smith forms,
// characteristic polynomials and squarefree factorisation.
class UPoly {
public:
    UPoly() = default;
    UPoly(int c) : UPoly(Rational(c)) {}  // NOLINT: implicit scalar init
    UPoly(const Rational& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly x(unsigned k = 1) {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = 1;
        return UPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }  // deg(0) = -1
    const Rational& lc() const { return c_.back(); }
    Rational coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(k)] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const Rational& c) const;
    UPoly shifted(int k) const;  // * x^k

    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    // division with remainder; divisor must be nonzero
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
    UPoly exact_div(const UPoly& b) const;  // throws NotExactDivision on remainder

    UPoly derivative() const;
    UPoly monic() const;
    // integer-primitive with positive leading coefficient
    UPoly primitive() const;

    Rational eval(const Rational& x0) const;

    std::string str(const std::string& var = "lam") const;

    Poly to_poly(TablePtr tab, int var) const;
    static UPoly from_poly(const Poly& p);  // p must use at most one variable

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);  // monic gcd

// Yun's algorithm: pairwise-coprime squarefree factors with multiplicities
std::vector<std::pair<UPoly, int>> squarefree(const UPoly& p);

}  // namespace hamop
