#include "hamop/upoly.hpp"

#include <sstream>

#include "hamop/error.hpp"

namespace hamop {

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(c));
}

UPoly UPoly::scaled(const Rational& k) const {
    if (k == 0) return UPoly();
    UPoly r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

UPoly UPoly::shifted(int k) const {
    if (is_zero()) return UPoly();
    std::vector<Rational> c(c_.size() + static_cast<size_t>(k), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i + static_cast<size_t>(k)] = c_[i];
    return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero("univariate division by zero");
    UPoly r = a;
    std::vector<Rational> q(a.deg() >= b.deg() ? static_cast<size_t>(a.deg() - b.deg()) + 1 : 0,
                            Rational(0));
    while (!r.is_zero() && r.deg() >= b.deg()) {
        Rational c = r.lc() / b.lc();
        int k = r.deg() - b.deg();
        q[static_cast<size_t>(k)] = c;
        r = r - b.scaled(c).shifted(k);
    }
    return {UPoly(std::move(q)), r};
}

UPoly UPoly::exact_div(const UPoly& b) const {
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero()) throw NotExactDivision("univariate division leaves a remainder");
    return q;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rational> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / lc());
}

UPoly UPoly::primitive() const {
    if (is_zero()) return *this;
    Rational g(0);
    for (auto& c : c_) g = rat_gcd(g, c);
    if (sign(lc()) < 0) g = -g;
    return scaled(Rational(1) / g);
}

Rational UPoly::eval(const Rational& x0) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x0 + c_[i];
    return r;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        Rational a = c_[i];
        if (a == 0) continue;
        if (first) {
            if (sign(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sign(a) < 0 ? " - " : " + ");
            a = rat_abs(a);
        }
        if (i == 0 || a != 1) os << rat_str(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Poly UPoly::to_poly(TablePtr tab, int var) const {
    Poly x = Poly::var(tab, var);
    Poly r(tab);
    Poly xp = Poly::constant(tab, 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        r += xp.scaled(c_[i]);
        xp = xp * x;
    }
    return r;
}

UPoly UPoly::from_poly(const Poly& p) {
    auto vars = p.vars_used();
    if (vars.size() > 1) throw UnsupportedInput("polynomial is not univariate");
    if (vars.empty()) return p.is_zero() ? UPoly() : UPoly(p.constant_value());
    int v = vars[0];
    std::vector<Rational> c(static_cast<size_t>(p.deg(v)) + 1, Rational(0));
    for (auto& [m, k] : p.terms()) c[static_cast<size_t>(m.deg(v))] = k;
    return UPoly(std::move(c));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = UPoly::divmod(x, y);
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

std::vector<std::pair<UPoly, int>> squarefree(const UPoly& p) {
    if (p.is_zero()) throw DivisionByZero("squarefree factorisation of zero");
    std::vector<std::pair<UPoly, int>> out;
    if (p.deg() == 0) return out;
    UPoly g = gcd(p, p.derivative());
    UPoly c = p.exact_div(g);
    UPoly d = p.derivative().exact_div(g) - c.derivative();
    int i = 1;
    while (c.deg() > 0) {
        UPoly a = gcd(c, d);
        c = c.exact_div(a);
        d = d.exact_div(a) - c.derivative();
        if (a.deg() > 0) out.emplace_back(a.primitive(), i);
        ++i;
    }
    return out;
}

}  // namespace hamop
