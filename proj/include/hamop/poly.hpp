#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamop/rational.hpp"
#include "hamop/vartable.hpp"

namespace hamop {

// Sparse monomial: (variable index, exponent) pairs, sorted by index,
// exponents strictly positive.
struct Mono {
    std::vector<std::pair<int, int>> e;

    static Mono one() { return Mono{}; }
    static Mono var(int id, int exp = 1) {
        Mono m;
        if (exp != 0) m.e.emplace_back(id, exp);
        return m;
    }

    bool is_one() const { return e.empty(); }
    int deg() const {
        int d = 0;
        for (auto& [v, k] : e) d += k;
        return d;
    }
    int deg(int var) const {
        for (auto& [v, k] : e)
            if (v == var) return k;
        return 0;
    }
    int deg_in(std::span<const int> vars) const;

    Mono operator*(const Mono& o) const;
    bool divides(const Mono& o) const;       // this | o
    Mono div(const Mono& o) const;           // this / o (assumes o | this)
    static Mono gcd(const Mono& a, const Mono& b);

    bool operator==(const Mono& o) const { return e == o.e; }
};

// graded lexicographic: total degree first, then earlier variables weigh more
bool grlex_less(const Mono& a, const Mono& b);

struct MonoGrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const { return grlex_less(b, a); }
};

// Sparse multivariate polynomial over Q.  Terms are kept in descending
// graded-lex order with no zero coefficients, so equal polynomials have
// equal representations.  A null table marks a plain constant, compatible
// with any table.
class Poly {
public:
    using Term = std::pair<Mono, Rational>;

    Poly() = default;
    Poly(int c) : Poly(Rational(c)) {}  // NOLINT: implicit by design (Eigen needs Scalar(0))
    Poly(const Rational& c) {
        if (c != 0) t_.emplace_back(Mono::one(), c);
    }
    explicit Poly(TablePtr tab) : tab_(std::move(tab)) {}

    static Poly var(TablePtr tab, int id, int exp = 1);
    static Poly constant(TablePtr tab, const Rational& c);

    TablePtr table() const { return tab_; }
    const std::vector<Term>& terms() const { return t_; }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
    Rational constant_value() const;  // requires is_constant()
    bool is_one() const { return is_constant() && constant_value() == 1; }

    // leading data in the canonical order
    const Mono& lm() const { return t_.front().first; }
    const Rational& lc() const { return t_.front().second; }

    int deg() const;
    int deg(int var) const;
    int deg_in(std::span<const int> vars) const;
    bool uses_var(int var) const;
    std::vector<int> vars_used() const;

    Rational coeff(const Mono& m) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rational& c) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(int var) const;

    // substitute variables by polynomials (vars not in the map are kept)
    Poly subst(const std::map<int, Poly>& repl) const;
    Poly subst(const std::map<int, Rational>& repl) const;
    Rational eval(const std::vector<Rational>& point) const;  // full evaluation

    // rational content: c with p/c integer-primitive and positive leading
    // coefficient; content(0) = 0
    Rational content() const;
    Poly primitive() const;

    // exact division; nullopt when o does not divide *this
    std::optional<Poly> exact_div_opt(const Poly& o) const;

    // view as univariate in `var` with Poly coefficients (index = power)
    std::vector<Poly> coeffs_in(int var) const;
    static Poly from_coeffs_in(int var, const std::vector<Poly>& cs);

    // map onto another table; vmap[i] = index in `to` of our variable i
    Poly mapped(TablePtr to, const std::vector<int>& vmap) const;

    // attach a table to a table-less (constant) polynomial
    Poly anchored(TablePtr to) const {
        Poly r = *this;
        if (!r.tab_) r.tab_ = std::move(to);
        return r;
    }

    std::string str() const;

    // deterministic total order (for sorting bases); not the ring order
    static int cmp(const Poly& a, const Poly& b);

private:
    static TablePtr unify(const TablePtr& a, const TablePtr& b);
    TablePtr tab_;                // null for constants
    std::vector<Term> t_;         // grlex-descending, no zeros
    friend Poly poly_mul_impl(const Poly& a, const Poly& b);
    void set_terms(TablePtr tab, std::vector<Term> ts);
};

inline Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }
inline Poly operator*(const Poly& p, const Rational& c) { return p.scaled(c); }

Poly gcd(const Poly& a, const Poly& b);

// p = kappa * s^2 with kappa free of coordinate variables and s primitive;
// nullopt when no such factorisation exists
std::optional<std::pair<Poly, Poly>> poly_sqrt(const Poly& p);

// squarefree factorisation of a univariate polynomial over Q (Yun);
// product of factor^mult equals p up to a rational constant
std::vector<std::pair<Poly, int>> squarefree_factor(const Poly& p);

}  // namespace hamop
