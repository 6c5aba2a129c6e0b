#include "hamop/hamverify.hpp"

namespace hamop {

bool check_killing(const MongeMetric& g) {
    const int n = g.n;
    for (int m = 0; m < n; ++m)
        for (int k = m; k < n; ++k)
            for (int nn = k; nn < n; ++nn) {
                Poly s = g.g(m, k).derivative(nn) + g.g(k, nn).derivative(m) +
                         g.g(m, nn).derivative(k);
                if (!s.is_zero()) return false;
            }
    return true;
}

bool check_nonlinear(const MongeMetric& g) {
    const int n = g.n;
    Poly det = det_fraction_free(g.g);
    if (det.is_zero()) throw SingularError("nonlinear check needs a non-degenerate metric");
    MatP adj = adjugate(g.g);
    auto tab = g.table();
    // bracket[p][l][m] = g_{pl,m} - g_{pm,l}
    auto br = [&](int p, int l, int m) { return g.g(p, l).derivative(m) - g.g(p, m).derivative(l); };
    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
            for (int nn = k + 1; nn < n; ++nn)
                for (int l = 0; l < n; ++l) {
                    Poly lhs = (g.g(m, k).derivative(nn) - g.g(m, nn).derivative(k)).derivative(l);
                    Poly rhs(tab);
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q) {
                            if (adj(p, q).is_zero()) continue;
                            rhs += adj(p, q) * br(p, l, m) * br(q, k, nn);
                        }
                    if (!(lhs * det + rhs.scaled(rat(1, 3))).is_zero()) return false;
                }
    return true;
}

PoteminReport check_potemin_system(const MongeMetric& g) {
    const int n = g.n;
    PoteminReport rep;
    Poly det = det_fraction_free(g.g);
    if (det.is_zero()) throw SingularError("Potemin system needs a non-degenerate metric");
    ChristoffelObjects c = c_from_metric(g);
    MatP adj = adjugate(g.g);
    rep.gradient_ok = rep.skew_ok = rep.cyclic_ok = rep.quadratic_ok = true;
    for (int m = 0; m < n; ++m)
        for (int nn = 0; nn < n; ++nn)
            for (int k = 0; k < n; ++k) {
                if (!(g.g(m, nn).derivative(k) + c.c(m, nn, k) + c.c(nn, m, k)).is_zero())
                    rep.gradient_ok = false;
                if (!(c.c(m, nn, k) + c.c(m, k, nn)).is_zero()) rep.skew_ok = false;
                if (!(c.c(m, nn, k) + c.c(nn, k, m) + c.c(k, m, nn)).is_zero())
                    rep.cyclic_ok = false;
            }
    for (int m = 0; m < n && rep.quadratic_ok; ++m)
        for (int nn = 0; nn < n && rep.quadratic_ok; ++nn)
            for (int k = 0; k < n && rep.quadratic_ok; ++k)
                for (int l = 0; l < n; ++l) {
                    Poly rhs(g.table());
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q) {
                            if (adj(p, q).is_zero()) continue;
                            rhs += adj(p, q) * c.c(p, m, l) * c.c(q, nn, k);
                        }
                    if (!(c.c(m, nn, k).derivative(l) * det + rhs).is_zero()) {
                        rep.quadratic_ok = false;
                        break;
                    }
                }
    return rep;
}

CurvatureReport curvature(const MongeMetric& g) {
    const int n = g.n;
    CurvatureReport rep;
    rep.n = n;
    Poly det = det_fraction_free(g.g);
    if (det.is_zero()) throw SingularError("curvature needs a non-degenerate metric");
    MatP adj = adjugate(g.g);
    MatR ginv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ginv(i, j) = RatFunc(adj(i, j), det);

    // Levi-Civita connection
    std::vector<RatFunc> gamma(static_cast<size_t>(n * n * n));
    auto G = [&](int i, int j, int k) -> RatFunc& {
        return gamma[static_cast<size_t>((i * n + j) * n + k)];
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = j; k < n; ++k) {
                Poly num(g.table());
                for (int l = 0; l < n; ++l) {
                    if (adj(i, l).is_zero()) continue;
                    num += adj(i, l) *
                           (g.g(l, j).derivative(k) + g.g(l, k).derivative(j) -
                            g.g(j, k).derivative(l));
                }
                RatFunc v(num.scaled(rat(1, 2)), det);
                G(i, j, k) = v;
                G(i, k, j) = v;
            }

    rep.riemann.assign(static_cast<size_t>(n * n * n * n), RatFunc());
    rep.flat = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    RatFunc r = G(i, l, j).derivative(k) - G(i, k, j).derivative(l);
                    for (int m = 0; m < n; ++m)
                        r += G(i, k, m) * G(m, l, j) - G(i, l, m) * G(m, k, j);
                    rep.riemann[static_cast<size_t>(((i * n + j) * n + k) * n + l)] = r;
                    rep.riemann[static_cast<size_t>(((i * n + j) * n + l) * n + k)] = -r;
                    if (!r.is_zero()) rep.flat = false;
                }

    if (n == 3) {
        rep.has_cotton = true;
        // Ricci, scalar curvature, Schouten
        MatR ric(n, n);
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                RatFunc v;
                for (int i = 0; i < n; ++i) v += rep.r(i, j, i, l);
                ric(j, l) = v;
            }
        RatFunc scal;
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) scal += ginv(j, l) * ric(j, l);
        MatR schouten(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                schouten(i, j) = ric(i, j) - RatFunc(g.g(i, j)) * scal * RatFunc(rat(1, 4));
        rep.cotton.assign(static_cast<size_t>(n * n * n), RatFunc());
        rep.conformally_flat = true;
        auto nabla = [&](int k, int i, int j) {
            RatFunc v = schouten(i, j).derivative(k);
            for (int m = 0; m < n; ++m)
                v -= G(m, k, i) * schouten(m, j) + G(m, k, j) * schouten(i, m);
            return v;
        };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    RatFunc c = nabla(k, i, j) - nabla(j, i, k);
                    rep.cotton[static_cast<size_t>((i * n + j) * n + k)] = c;
                    rep.cotton[static_cast<size_t>((i * n + k) * n + j)] = -c;
                    if (!c.is_zero()) rep.conformally_flat = false;
                }
    }
    return rep;
}

MongeMetric pullback_metric(const MongeMetric& g, const ProjectiveMap& t) {
    const int n = g.n;
    if (t.n() != n) throw DimensionError("projective map has wrong size");
    auto minv = inverse(t.m);
    if (!minv) throw SingularError("projective map is not invertible");
    auto tab = g.table();
    auto coords = tab->coord_vars();

    // linear forms of the inverse map applied to (u, 1)
    auto lin = [&](int row) {
        Poly p = Poly::constant(tab, (*minv)(row, n));
        for (int j = 0; j < n; ++j) p += Poly::var(tab, coords[static_cast<size_t>(j)]).scaled((*minv)(row, j));
        return p;
    };
    std::vector<Poly> mi;
    for (int i = 0; i < n; ++i) mi.push_back(lin(i));
    Poly m = lin(n);  // chart divisor of the inverse map
    if (m.is_zero()) throw SingularError("degenerate chart divisor");

    // homogenised substitution: P_{kl} = m^2 * g_{kl}(m_i / m)
    auto homog = [&](const Poly& e) {
        Poly acc(tab);
        for (auto& [mono, c] : e.terms()) {
            Poly term = Poly::constant(tab, c);
            int udeg = 0;
            for (auto& [v, k] : mono.e) {
                bool is_u = tab->is_coord(v);
                if (is_u) {
                    int ci = -1;
                    for (size_t z = 0; z < coords.size(); ++z)
                        if (coords[z] == v) ci = static_cast<int>(z);
                    term = term * mi[static_cast<size_t>(ci)].pow(static_cast<unsigned>(k));
                    udeg += k;
                } else {
                    term = term * Poly::var(tab, v, k);
                }
            }
            if (udeg > 2) throw DimensionError("entry degree exceeds 2");
            term = term * m.pow(static_cast<unsigned>(2 - udeg));
            acc += term;
        }
        return acc;
    };

    // lambda^k_a = m * M_{ka} - m_k * M_{na}
    std::vector<VecP> lam;
    for (int k = 0; k < n; ++k) {
        VecP row(n);
        for (int a = 0; a < n; ++a)
            row(a) = m.scaled((*minv)(k, a)) - mi[static_cast<size_t>(k)].scaled((*minv)(n, a));
        lam.push_back(std::move(row));
    }

    MatP f = zero_mat(tab, n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            if (g.g(k, l).is_zero()) continue;
            Poly p = homog(g.g(k, l));
            for (int a = 0; a < n; ++a) {
                if (lam[static_cast<size_t>(k)](a).is_zero()) continue;
                for (int b = 0; b < n; ++b)
                    f(a, b) += p * lam[static_cast<size_t>(k)](a) * lam[static_cast<size_t>(l)](b);
            }
        }
    Poly m2 = m * m;
    MongeMetric out;
    out.n = n;
    out.g = zero_mat(tab, n, n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            Poly num = (f(a, b) + f(b, a)).scaled(rat(1, 2));
            auto q = num.exact_div_opt(m2);
            if (!q) throw Error("pullback failed to clear the chart divisor");
            out.g(a, b) = *q;
            out.g(b, a) = *q;
        }
    out.validate();
    return out;
}

}  // namespace hamop
