#include "hamop/poly.hpp"

#include <algorithm>
#include <sstream>

#include "hamop/error.hpp"

namespace hamop {

int Mono::deg_in(std::span<const int> vars) const {
    int d = 0;
    for (auto& [v, k] : e)
        for (int w : vars)
            if (v == w) d += k;
    return d;
}

Mono Mono::operator*(const Mono& o) const {
    Mono r;
    r.e.reserve(e.size() + o.e.size());
    size_t i = 0, j = 0;
    while (i < e.size() && j < o.e.size()) {
        if (e[i].first == o.e[j].first) {
            r.e.emplace_back(e[i].first, e[i].second + o.e[j].second);
            ++i, ++j;
        } else if (e[i].first < o.e[j].first) {
            r.e.push_back(e[i++]);
        } else {
            r.e.push_back(o.e[j++]);
        }
    }
    while (i < e.size()) r.e.push_back(e[i++]);
    while (j < o.e.size()) r.e.push_back(o.e[j++]);
    return r;
}

bool Mono::divides(const Mono& o) const {
    size_t j = 0;
    for (auto& [v, k] : e) {
        while (j < o.e.size() && o.e[j].first < v) ++j;
        if (j == o.e.size() || o.e[j].first != v || o.e[j].second < k) return false;
    }
    return true;
}

Mono Mono::div(const Mono& o) const {
    Mono r;
    size_t j = 0;
    for (auto& [v, k] : e) {
        int sub = 0;
        while (j < o.e.size() && o.e[j].first < v) ++j;
        if (j < o.e.size() && o.e[j].first == v) sub = o.e[j].second;
        if (k - sub != 0) r.e.emplace_back(v, k - sub);
    }
    return r;
}

Mono Mono::gcd(const Mono& a, const Mono& b) {
    Mono r;
    size_t i = 0, j = 0;
    while (i < a.e.size() && j < b.e.size()) {
        if (a.e[i].first == b.e[j].first) {
            r.e.emplace_back(a.e[i].first, std::min(a.e[i].second, b.e[j].second));
            ++i, ++j;
        } else if (a.e[i].first < b.e[j].first) {
            ++i;
        } else {
            ++j;
        }
    }
    return r;
}

bool grlex_less(const Mono& a, const Mono& b) {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db;
    // lex tie-break: first (lowest-index) variable with differing exponent;
    // the monomial with the larger exponent there is the greater one
    size_t i = 0, j = 0;
    while (i < a.e.size() && j < b.e.size()) {
        if (a.e[i].first == b.e[j].first) {
            if (a.e[i].second != b.e[j].second) return a.e[i].second < b.e[j].second;
            ++i, ++j;
        } else if (a.e[i].first < b.e[j].first) {
            return false;  // a has positive exponent where b has zero -> a greater
        } else {
            return true;
        }
    }
    if (i < a.e.size()) return false;
    if (j < b.e.size()) return true;
    return false;
}

void Poly::set_terms(TablePtr tab, std::vector<Term> ts) {
    tab_ = std::move(tab);
    t_ = std::move(ts);
}

Poly Poly::var(TablePtr tab, int id, int exp) {
    if (id < 0 || id >= tab->size()) throw UnknownVariable("variable index out of range");
    Poly p(tab);
    if (exp > 0)
        p.t_.emplace_back(Mono::var(id, exp), Rational(1));
    else
        p.t_.emplace_back(Mono::one(), Rational(1));
    return p;
}

Poly Poly::constant(TablePtr tab, const Rational& c) {
    Poly p(std::move(tab));
    if (c != 0) p.t_.emplace_back(Mono::one(), c);
    return p;
}

Rational Poly::constant_value() const {
    if (t_.empty()) return Rational(0);
    if (t_.size() == 1 && t_[0].first.is_one()) return t_[0].second;
    throw Error("constant_value on non-constant polynomial");
}

int Poly::deg() const {
    int d = t_.empty() ? 0 : -1;
    for (auto& [m, c] : t_) d = std::max(d, m.deg());
    return d < 0 ? 0 : d;
}

int Poly::deg(int var) const {
    int d = 0;
    for (auto& [m, c] : t_) d = std::max(d, m.deg(var));
    return d;
}

int Poly::deg_in(std::span<const int> vars) const {
    int d = 0;
    for (auto& [m, c] : t_) d = std::max(d, m.deg_in(vars));
    return d;
}

bool Poly::uses_var(int var) const {
    for (auto& [m, c] : t_)
        if (m.deg(var) > 0) return true;
    return false;
}

std::vector<int> Poly::vars_used() const {
    std::vector<int> r;
    for (auto& [m, c] : t_)
        for (auto& [v, k] : m.e)
            if (std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
    std::sort(r.begin(), r.end());
    return r;
}

Rational Poly::coeff(const Mono& m) const {
    for (auto& [mm, c] : t_)
        if (mm == m) return c;
    return Rational(0);
}

TablePtr Poly::unify(const TablePtr& a, const TablePtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (a == b) return a;
    if (a->same_layout(*b)) return a;  // distinct sessions, identical layout
    throw TableMismatch("operands live over different variable tables");
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.tab_ = unify(tab_, o.tab_);
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        if (t_[i].first == o.t_[j].first) {
            Rational c = t_[i].second + o.t_[j].second;
            if (c != 0) r.t_.emplace_back(t_[i].first, c);
            ++i, ++j;
        } else if (grlex_less(o.t_[j].first, t_[i].first)) {
            r.t_.push_back(t_[i++]);
        } else {
            r.t_.push_back(o.t_[j++]);
        }
    }
    while (i < t_.size()) r.t_.push_back(t_[i++]);
    while (j < o.t_.size()) r.t_.push_back(o.t_[j++]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    r.tab_ = unify(tab_, o.tab_);
    if (is_zero() || o.is_zero()) return r;
    if (is_constant()) {
        r.t_ = o.scaled(constant_value()).t_;
        return r;
    }
    if (o.is_constant()) {
        r.t_ = scaled(o.constant_value()).t_;
        return r;
    }
    std::map<Mono, Rational, MonoGrlexGreater> acc;
    for (auto& [ma, ca] : t_)
        for (auto& [mb, cb] : o.t_) {
            Mono m = ma * mb;
            auto [it, fresh] = acc.try_emplace(std::move(m), ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    r.t_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.t_.emplace_back(m, c);
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return Poly(tab_);
    Poly r = *this;
    for (auto& [m, k] : r.t_) k *= c;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(tab_, 1);
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    unify(tab_, o.tab_);
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].first == o.t_[i].first) || t_[i].second != o.t_[i].second) return false;
    return true;
}

Poly Poly::derivative(int var) const {
    Poly r(tab_);
    std::map<Mono, Rational, MonoGrlexGreater> acc;
    for (auto& [m, c] : t_) {
        int k = m.deg(var);
        if (k == 0) continue;
        Mono dm = m.div(Mono::var(var, 1));
        acc[dm] += c * k;
    }
    for (auto& [m, c] : acc)
        if (c != 0) r.t_.emplace_back(m, c);
    return r;
}

Poly Poly::subst(const std::map<int, Poly>& repl) const {
    Poly r(tab_);
    for (auto& [m, c] : t_) {
        Poly term = Poly::constant(tab_, c);
        Mono rest;
        for (auto& [v, k] : m.e) {
            auto it = repl.find(v);
            if (it == repl.end())
                rest = rest * Mono::var(v, k);
            else
                term = term * it->second.pow(static_cast<unsigned>(k));
        }
        if (!rest.is_one()) {
            Poly mp(tab_);
            mp.t_.emplace_back(rest, Rational(1));
            term = term * mp;
        }
        r += term;
    }
    return r;
}

Poly Poly::subst(const std::map<int, Rational>& repl) const {
    std::map<int, Poly> m;
    for (auto& [v, c] : repl) m.emplace(v, Poly(c));
    return subst(m);
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    Rational r(0);
    for (auto& [m, c] : t_) {
        Rational t = c;
        for (auto& [v, k] : m.e) t *= rat_pow(point.at(static_cast<size_t>(v)), static_cast<unsigned>(k));
        r += t;
    }
    return r;
}

Rational Poly::content() const {
    if (t_.empty()) return Rational(0);
    Rational g(0);
    for (auto& [m, c] : t_) g = rat_gcd(g, c);
    if (sign(lc()) < 0) g = -g;
    return g;
}

Poly Poly::primitive() const {
    if (t_.empty()) return *this;
    return scaled(Rational(1) / content());
}

std::optional<Poly> Poly::exact_div_opt(const Poly& o) const {
    if (o.is_zero()) throw DivisionByZero("exact division by zero polynomial");
    TablePtr tab = unify(tab_, o.tab_);
    if (o.is_constant()) return scaled(Rational(1) / o.constant_value());
    Poly rem = *this;
    Poly q(tab);
    std::vector<Term> qt;
    while (!rem.is_zero()) {
        if (!o.lm().divides(rem.lm())) return std::nullopt;
        Mono m = rem.lm().div(o.lm());
        Rational c = rem.lc() / o.lc();
        Poly t(tab);
        t.t_.emplace_back(m, c);
        qt.emplace_back(m, c);
        rem = rem - t * o;
    }
    std::sort(qt.begin(), qt.end(),
              [](const Term& a, const Term& b) { return grlex_less(b.first, a.first); });
    q.t_ = std::move(qt);
    return q;
}

std::vector<Poly> Poly::coeffs_in(int var) const {
    std::vector<Poly> cs(static_cast<size_t>(deg(var)) + 1, Poly(tab_));
    for (auto& [m, c] : t_) {
        int k = m.deg(var);
        Mono rest = m.div(Mono::var(var, k));
        Poly t(tab_);
        t.t_.emplace_back(rest, c);
        cs[static_cast<size_t>(k)] += t;
    }
    return cs;
}

Poly Poly::from_coeffs_in(int var, const std::vector<Poly>& cs) {
    Poly r;
    Poly x;
    bool have_tab = false;
    for (auto& c : cs)
        if (c.table()) {
            x = Poly::var(c.table(), var);
            have_tab = true;
            break;
        }
    if (!have_tab) throw Error("from_coeffs_in: no table in coefficients");
    Poly xp = Poly::constant(x.table(), 1);
    for (size_t k = 0; k < cs.size(); ++k) {
        r += cs[k] * xp;
        xp = xp * x;
    }
    return r;
}

Poly Poly::mapped(TablePtr to, const std::vector<int>& vmap) const {
    Poly r(std::move(to));
    std::vector<Term> ts;
    ts.reserve(t_.size());
    for (auto& [m, c] : t_) {
        Mono nm;
        for (auto& [v, k] : m.e) {
            int nv = vmap.at(static_cast<size_t>(v));
            if (nv < 0) throw UnknownVariable("mapped: variable has no image");
            nm.e.emplace_back(nv, k);
        }
        std::sort(nm.e.begin(), nm.e.end());
        ts.emplace_back(std::move(nm), c);
    }
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return grlex_less(b.first, a.first); });
    r.t_ = std::move(ts);
    return r;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : t_) {
        Rational a = c;
        if (first) {
            if (sign(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sign(a) < 0 ? " - " : " + ");
            a = rat_abs(a);
        }
        bool coeff_printed = false;
        if (a != 1 || m.is_one()) {
            os << rat_str(a);
            coeff_printed = true;
        }
        bool need_star = coeff_printed;
        for (auto& [v, k] : m.e) {
            if (need_star) os << "*";
            need_star = true;
            os << tab_->name(v);
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

int Poly::cmp(const Poly& a, const Poly& b) {
    size_t n = std::min(a.t_.size(), b.t_.size());
    for (size_t i = 0; i < n; ++i) {
        if (!(a.t_[i].first == b.t_[i].first))
            return grlex_less(a.t_[i].first, b.t_[i].first) ? -1 : 1;
        if (a.t_[i].second != b.t_[i].second) return a.t_[i].second < b.t_[i].second ? -1 : 1;
    }
    if (a.t_.size() != b.t_.size()) return a.t_.size() < b.t_.size() ? -1 : 1;
    return 0;
}

}  // namespace hamop
