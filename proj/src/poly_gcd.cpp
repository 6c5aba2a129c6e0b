#include <algorithm>
#include <map>

#include "hamop/error.hpp"
#include "hamop/poly.hpp"
#include "hamop/upoly.hpp"

// Multivariate gcd: content/primitive-part recursion with a primitive PRS in
// the chosen main variable.  An evaluation shortcut rules out variables that
// cannot occur in the gcd; anything it claims is certified by the exactness
// of the surrounding divisions.

namespace hamop {
namespace {

Poly mono_poly(TablePtr tab, const Mono& m) {
    Poly one = Poly::constant(tab, 1);
    Poly r = one;
    for (auto& [v, k] : m.e) r = r * Poly::var(tab, v, k);
    return r;
}

Mono mono_content(const Poly& p) {
    Mono g = p.terms().front().first;
    for (auto& [m, c] : p.terms()) {
        g = Mono::gcd(g, m);
        if (g.is_one()) break;
    }
    return g;
}

// pseudo-remainder of f by g in variable v (both with Poly coefficients)
Poly pseudo_rem(const Poly& f, const Poly& g, int v) {
    std::vector<Poly> fc = f.coeffs_in(v);
    std::vector<Poly> gc = g.coeffs_in(v);
    int dg = static_cast<int>(gc.size()) - 1;
    Poly glc = gc.back();
    auto deg_of = [](const std::vector<Poly>& c) {
        int d = static_cast<int>(c.size()) - 1;
        while (d >= 0 && c[static_cast<size_t>(d)].is_zero()) --d;
        return d;
    };
    int df = deg_of(fc);
    while (df >= dg) {
        Poly flc = fc[static_cast<size_t>(df)];
        int shift = df - dg;
        for (int i = 0; i <= df; ++i) {
            Poly t = fc[static_cast<size_t>(i)] * glc;
            if (i - shift >= 0 && i - shift <= dg) t -= flc * gc[static_cast<size_t>(i - shift)];
            fc[static_cast<size_t>(i)] = std::move(t);
        }
        fc[static_cast<size_t>(df)] = Poly(f.table());
        df = deg_of(fc);
    }
    if (df < 0) return Poly(f.table());
    fc.resize(static_cast<size_t>(df) + 1);
    return Poly::from_coeffs_in(v, fc);
}

Poly gcd_rec(const Poly& a, const Poly& b);

// gcd of the coefficients of p viewed as univariate in v
Poly content_in(const Poly& p, int v) {
    Poly g(p.table());
    for (auto& c : p.coeffs_in(v)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.primitive() : gcd_rec(g, c);
        if (g.is_constant()) return Poly(1);
    }
    return g;
}

// evaluation probe: true when v provably does not occur in gcd(a, b)
bool var_not_in_gcd(const Poly& a, const Poly& b, int v) {
    auto vars = a.vars_used();
    auto bv = b.vars_used();
    vars.insert(vars.end(), bv.begin(), bv.end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (long offset = 0; offset < 4; ++offset) {
        std::map<int, Rational> pt;
        long seed = 3 + 2 * offset;
        for (int w : vars) {
            if (w == v) continue;
            pt[w] = Rational(seed);
            seed += 2;
        }
        Poly ae = a.subst(pt), be = b.subst(pt);
        // need one leading coefficient to survive the specialisation
        if (ae.deg(v) == a.deg(v) || be.deg(v) == b.deg(v)) {
            if (ae.is_zero() || be.is_zero()) continue;
            UPoly g = gcd(UPoly::from_poly(ae), UPoly::from_poly(be));
            if (g.deg() == 0) return true;
            return false;  // evaluation keeps a common factor in v: no verdict
        }
    }
    return false;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.is_constant() || b.is_constant()) return Poly(1);

    TablePtr tab = a.table() ? a.table() : b.table();

    // monomial contents come out first
    Mono am = mono_content(a), bm = mono_content(b);
    Mono common = Mono::gcd(am, bm);
    Poly a1 = a, b1 = b;
    if (!am.is_one()) a1 = *a.exact_div_opt(mono_poly(tab, am));
    if (!bm.is_one()) b1 = *b.exact_div_opt(mono_poly(tab, bm));
    Poly monogcd = mono_poly(tab, common);

    if (a1 == b1 || a1 == -b1) return (monogcd * a1.primitive()).primitive();

    std::vector<int> av = a1.vars_used(), bv = b1.vars_used();
    std::vector<int> cv;
    std::set_intersection(av.begin(), av.end(), bv.begin(), bv.end(), std::back_inserter(cv));
    if (cv.empty()) return monogcd;

    // drop variables the evaluation probe excludes
    std::vector<int> keep;
    for (int v : cv)
        if (!var_not_in_gcd(a1, b1, v)) keep.push_back(v);
    if (keep.empty()) return monogcd;

    // cheap one-sided divisibility check
    {
        const Poly& small = a1.terms().size() <= b1.terms().size() ? a1 : b1;
        const Poly& big = a1.terms().size() <= b1.terms().size() ? b1 : a1;
        if (big.exact_div_opt(small.primitive()).has_value())
            return (monogcd * small.primitive()).primitive();
    }

    int v = keep[0];
    int best = std::min(a1.deg(keep[0]), b1.deg(keep[0]));
    for (int w : keep) {
        int d = std::min(a1.deg(w), b1.deg(w));
        if (d < best) {
            best = d;
            v = w;
        }
    }

    Poly ca = content_in(a1, v), cb = content_in(b1, v);
    Poly pa = *a1.exact_div_opt(ca), pb = *b1.exact_div_opt(cb);
    Poly cont_gcd = gcd_rec(ca, cb);

    // primitive PRS
    Poly f = pa.deg(v) >= pb.deg(v) ? pa : pb;
    Poly g = pa.deg(v) >= pb.deg(v) ? pb : pa;
    while (true) {
        Poly r = pseudo_rem(f, g, v);
        if (r.is_zero()) break;
        if (r.deg(v) == 0) {
            g = Poly(1);
            break;
        }
        Poly rc = content_in(r, v);
        r = *r.exact_div_opt(rc);
        f = g;
        g = r;
    }
    Poly gp = g.is_constant() ? Poly(1) : *g.exact_div_opt(content_in(g, v));
    return (monogcd * cont_gcd * gp).primitive();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    Poly g = gcd_rec(a, b);
    // certify: a heuristic path may only return divisors of both inputs
    if (!g.is_constant()) {
        if (!a.exact_div_opt(g) || !b.exact_div_opt(g))
            throw Error("gcd internal error: candidate does not divide inputs");
    }
    return g;
}

std::optional<std::pair<Poly, Poly>> poly_sqrt(const Poly& p) {
    if (p.is_zero()) return std::make_pair(Poly(0), Poly(0));
    if (p.is_constant()) return std::make_pair(Poly(p.constant_value()), Poly(1));

    TablePtr tab = p.table();
    Rational c0 = p.content();
    Poly p1 = p.scaled(Rational(1) / c0);

    // pull out the content over coordinate variables; parameters stay in it
    std::map<Mono, Poly, MonoGrlexGreater> groups;
    for (auto& [m, c] : p1.terms()) {
        Mono um, pm;
        for (auto& [v, k] : m.e)
            (tab->is_coord(v) ? um : pm).e.emplace_back(v, k);
        Poly t(tab);
        Poly piece = mono_poly(tab, pm).scaled(c);
        auto [it, fresh] = groups.try_emplace(um, piece);
        if (!fresh) it->second += piece;
    }
    Poly pg(tab);
    for (auto& [m, c] : groups) {
        pg = pg.is_zero() ? c.primitive() : gcd(pg, c);
        if (pg.is_one()) break;
    }
    Poly kappa = pg.scaled(c0);
    Poly pp = *p1.exact_div_opt(pg);

    // leading-term square root, certified by squaring back
    if (pp.lm().deg() % 2) return std::nullopt;
    Mono sm;
    for (auto& [v, k] : pp.lm().e) {
        if (k % 2) return std::nullopt;
        sm.e.emplace_back(v, k / 2);
    }
    auto slc = rat_sqrt(pp.lc());
    if (!slc) return std::nullopt;
    Poly s = mono_poly(tab, sm).scaled(*slc);
    Poly lead2 = s.scaled(Rational(2));
    Poly r = pp - s * s;
    Mono prev = pp.lm();
    while (!r.is_zero()) {
        if (!lead2.lm().divides(r.lm())) return std::nullopt;
        Mono tm = r.lm().div(lead2.lm());
        if (!grlex_less(tm * lead2.lm(), prev)) return std::nullopt;
        prev = tm * lead2.lm();
        Poly t = mono_poly(tab, tm).scaled(r.lc() / lead2.lc());
        s += t;
        r = pp - s * s;
    }
    if (!(s * s == pp)) return std::nullopt;
    return std::make_pair(kappa, s);
}

std::vector<std::pair<Poly, int>> squarefree_factor(const Poly& p) {
    if (p.is_zero()) throw DivisionByZero("squarefree factorisation of zero");
    auto vars = p.vars_used();
    if (vars.size() > 1) throw UnsupportedInput("squarefree_factor expects a univariate polynomial");
    std::vector<std::pair<Poly, int>> out;
    if (vars.empty()) return out;
    UPoly u = UPoly::from_poly(p);
    for (auto& [f, m] : squarefree(u)) out.emplace_back(f.to_poly(p.table(), vars[0]), m);
    return out;
}

}  // namespace hamop
