#pragma once

#include <string>

#include "hamop/poly.hpp"

namespace hamop {

// Rational function num/den over Q.  Always normalised: gcd removed, zero
// is 0/1, denominator integer-primitive with positive leading coefficient.
class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}  // NOLINT: implicit scalar init
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT: polynomials embed
    RatFunc(Poly num, Poly den, bool reduce = true);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFunc operator-() const { return RatFunc(-num_, den_, false); }
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc derivative(int var) const;
    RatFunc subst(const std::map<int, Poly>& repl) const;
    RatFunc pow(unsigned e) const;

    TablePtr table() const { return num_.table() ? num_.table() : den_.table(); }

    std::string str() const;

private:
    void normalize();
    Poly num_, den_;
};

inline RatFunc operator*(const Rational& c, const RatFunc& f) { return RatFunc(c) * f; }

}  // namespace hamop
