#include "hamop/ratfunc.hpp"

#include "hamop/error.hpp"

namespace hamop {

RatFunc::RatFunc(Poly num, Poly den, bool reduce) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (reduce) normalize();
    else {
        // fast path for callers that guarantee coprimality; still fix signs
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Rational dc = den_.content();
        den_ = den_.scaled(Rational(1) / dc);
        num_ = num_.scaled(Rational(1) / dc);
        if (den_.is_one()) den_ = Poly(1);
    }
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.is_constant()) {
        num_ = num_.scaled(Rational(1) / den_.constant_value());
        den_ = Poly(1);
        return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = *num_.exact_div_opt(g);
        den_ = *den_.exact_div_opt(g);
    }
    Rational dc = den_.content();
    den_ = den_.scaled(Rational(1) / dc);
    num_ = num_.scaled(Rational(1) / dc);
    if (den_.is_one()) den_ = Poly(1);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    Poly g = gcd(den_, o.den_);
    if (g.is_constant())
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    Poly da = *den_.exact_div_opt(g);
    Poly db = *o.den_.exact_div_opt(g);
    return RatFunc(num_ * db + o.num_ * da, da * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    // cross-reduce before multiplying to keep intermediates small
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly n1 = g1.is_constant() ? num_ : *num_.exact_div_opt(g1);
    Poly d2 = g1.is_constant() ? o.den_ : *o.den_.exact_div_opt(g1);
    Poly n2 = g2.is_constant() ? o.num_ : *o.num_.exact_div_opt(g2);
    Poly d1 = g2.is_constant() ? den_ : *den_.exact_div_opt(g2);
    return RatFunc(n1 * n2, d1 * d2, false);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero rational function");
    return *this * RatFunc(o.den(), o.num());
}

bool RatFunc::operator==(const RatFunc& o) const {
    // cross-multiplied test; avoids relying on gcd normalisation
    return num_ * o.den_ == o.num_ * den_;
}

RatFunc RatFunc::derivative(int var) const {
    if (den_.is_one()) return RatFunc(num_.derivative(var));
    Poly dn = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RatFunc(std::move(dn), den_ * den_);
}

RatFunc RatFunc::subst(const std::map<int, Poly>& repl) const {
    return RatFunc(num_.subst(repl), den_.subst(repl));
}

RatFunc RatFunc::pow(unsigned e) const {
    RatFunc r(1);
    RatFunc b = *this;
    while (e) {
        if (e & 1) r = RatFunc(r.num_ * b.num_, r.den_ * b.den_, false);
        b = RatFunc(b.num_ * b.num_, b.den_ * b.den_, false);
        e >>= 1;
    }
    return r;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    bool npar = num_.terms().size() > 1;
    bool dpar = den_.terms().size() > 1 || !den_.lm().is_one() || den_.lc() != 1;
    std::string r = npar ? "(" + n + ")" : n;
    r += " / ";
    r += dpar ? "(" + d + ")" : d;
    return r;
}

}  // namespace hamop
