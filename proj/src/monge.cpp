#include "hamop/monge.hpp"

#include "hamop/io.hpp"

namespace hamop {

void MongeMetric::validate() const {
    if (g.rows() != n || g.cols() != n) throw DimensionError("metric has wrong shape");
    if (!is_symmetric(g)) throw DimensionError("metric must be symmetric");
    auto tab = table();
    auto coords = tab->coord_vars();
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j)
            if (g(i, j).deg_in(coords) > 2)
                throw DimensionError("metric entry of degree > 2 in the chart coordinates");
}

const Poly& ChristoffelObjects::c(int m, int nn, int k) const {
    return lower.at(static_cast<size_t>((m * n + nn) * n + k));
}

const RatFunc& ChristoffelObjects::c_up(int i, int j, int k) const {
    return upper.at(static_cast<size_t>((i * n + j) * n + k));
}

TablePtr chart_table(int n, const std::vector<TablePtr>& sources) {
    std::vector<std::string> coords;
    for (int i = 1; i <= n; ++i) coords.push_back("u" + std::to_string(i));
    auto t = VarTable::make(coords);
    for (auto& src : sources) {
        if (!src) continue;
        for (int i = 0; i < src->size(); ++i) {
            const std::string& nm = src->name(i);
            if (t->index_of(nm) >= 0) continue;
            t->add(nm, VarKind::param);
        }
    }
    return t;
}

Poly lift_param_poly(const Poly& p, const TablePtr& to) {
    if (!p.table()) return p.anchored(to);
    std::vector<int> vmap(static_cast<size_t>(p.table()->size()), -1);
    for (size_t i = 0; i < vmap.size(); ++i) {
        if (!p.uses_var(static_cast<int>(i))) continue;
        vmap[i] = to->require(p.table()->name(static_cast<int>(i)));
    }
    return p.mapped(to, vmap);
}

MongeMetric metric_from_plucker_terms(int n, int chart, const std::vector<PQuadTerm>& terms) {
    TablePtr src;
    for (auto& t : terms)
        if (t.coeff.table()) {
            src = t.coeff.table();
            break;
        }
    TablePtr tab = chart_table(n, {src});
    PluckerBasis pb(n);
    auto lam = plucker_linear_forms(pb, chart, tab);
    MatP f = zero_mat(tab, n, n);
    for (auto& t : terms) {
        Poly c = lift_param_poly(t.coeff, tab);
        const VecP& l1 = lam[static_cast<size_t>(pb.index(t.p1.first, t.p1.second))];
        const VecP& l2 = lam[static_cast<size_t>(pb.index(t.p2.first, t.p2.second))];
        for (int i = 0; i < n; ++i) {
            if (l1(i).is_zero()) continue;
            for (int j = 0; j < n; ++j) f(i, j) += c * l1(i) * l2(j);
        }
    }
    MongeMetric g;
    g.n = n;
    g.g = zero_mat(tab, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.g(i, j) = (f(i, j) + f(j, i)).scaled(rat(1, 2));
    g.validate();
    return g;
}

std::vector<VecP> trace_forms(const SubspaceA& a, int chart, const TablePtr& tab_g) {
    const int n = a.n();
    PluckerBasis pb(n);
    auto lam = plucker_linear_forms(pb, chart, tab_g);
    std::vector<VecP> psi;
    for (auto& gen : a.gens) {
        VecP row(n);
        for (int i = 0; i < n; ++i) row(i) = Poly(tab_g);
        for (int k = 0; k < pb.size(); ++k) {
            Poly c = lift_param_poly(gen.coeffs()(k), tab_g);
            if (c.is_zero()) continue;
            // tr(A P) = -2 sum A_(ab) p^{ab}
            for (int i = 0; i < n; ++i) row(i) += c.scaled(-2) * lam[static_cast<size_t>(k)](i);
        }
        psi.push_back(std::move(row));
    }
    return psi;
}

MongeMetric metric_from_subspace(const SubspaceA& a, const PhiForm& phi, int chart) {
    const int n = a.n();
    if (chart < 0) chart = n;  // default affine chart u^{n+1} = 1
    if (phi.m.rows() != n || phi.m.cols() != n) throw DimensionError("phi has wrong shape");
    TablePtr tab = chart_table(n, {a.table(), phi.m(0, 0).table()});
    auto psi = trace_forms(a, chart, tab);
    MongeMetric g;
    g.n = n;
    g.g = zero_mat(tab, n, n);
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
            Poly ph = lift_param_poly(phi.m(b, c), tab);
            if (ph.is_zero()) continue;
            for (int i = 0; i < n; ++i) {
                if (psi[static_cast<size_t>(b)](i).is_zero()) continue;
                for (int j = 0; j < n; ++j)
                    g.g(i, j) += ph * psi[static_cast<size_t>(b)](i) * psi[static_cast<size_t>(c)](j);
            }
        }
    g.validate();
    return g;
}

MongeMetric metric_from_psi(const PsiData& data, const PhiForm& phi) {
    const int n = static_cast<int>(data.psi.size());
    if (data.omega.rows() != n || data.omega.cols() != n)
        throw DimensionError("omega has wrong shape");
    if (phi.m.rows() != n) throw DimensionError("phi has wrong shape");
    TablePtr tab = chart_table(n, {phi.m(0, 0).table()});
    // psi^b_k(u) as linear polynomials
    std::vector<VecP> forms;
    for (int b = 0; b < n; ++b) {
        if (!is_skew(data.psi[static_cast<size_t>(b)]))
            throw DimensionError("psi matrices must be skew-symmetric");
        VecP row(n);
        for (int k = 0; k < n; ++k) {
            Poly v = Poly::constant(tab, data.omega(b, k));
            for (int m = 0; m < n; ++m)
                if (data.psi[static_cast<size_t>(b)](k, m) != 0)
                    v += Poly::var(tab, m).scaled(data.psi[static_cast<size_t>(b)](k, m));
            row(k) = v;
        }
        forms.push_back(std::move(row));
    }
    MongeMetric g;
    g.n = n;
    g.g = zero_mat(tab, n, n);
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
            Poly ph = lift_param_poly(phi.m(b, c), tab);
            if (ph.is_zero()) continue;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    g.g(i, j) += ph * forms[static_cast<size_t>(b)](i) * forms[static_cast<size_t>(c)](j);
        }
    g.validate();
    return g;
}

MongeMetric monge_general(const MongeGeneralCoeffs& coeffs) {
    const int n = coeffs.n;
    TablePtr tab = chart_table(n, {});
    MatP f = zero_mat(tab, n, n);
    for (auto& [ij, v] : coeffs.a) {
        auto [i, j] = ij;
        f(i, j) += Poly::constant(tab, v);
        if (i != j) f(j, i) += Poly::constant(tab, v);
    }
    for (auto& [ijk, v] : coeffs.b) {
        auto [i, j, k] = ijk;
        // du^i (u^j du^k - u^k du^j)
        f(i, k) += Poly::var(tab, j).scaled(v);
        f(i, j) -= Poly::var(tab, k).scaled(v);
    }
    for (auto& [ijkl, v] : coeffs.c) {
        auto [i, j, k, l] = ijkl;
        Rational m = std::make_pair(i, j) == std::make_pair(k, l) ? v : 2 * v;
        // (u^i du^j - u^j du^i)(u^k du^l - u^l du^k), both orders folded in
        f(j, l) += Poly::var(tab, i) * Poly::var(tab, k).scaled(m);
        f(j, k) -= Poly::var(tab, i) * Poly::var(tab, l).scaled(m);
        f(i, l) -= Poly::var(tab, j) * Poly::var(tab, k).scaled(m);
        f(i, k) += Poly::var(tab, j) * Poly::var(tab, l).scaled(m);
    }
    MongeMetric g;
    g.n = n;
    g.g = zero_mat(tab, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.g(i, j) = (f(i, j) + f(j, i)).scaled(rat(1, 2));
    g.validate();
    return g;
}

ChristoffelObjects c_from_metric(const MongeMetric& g) {
    const int n = g.n;
    auto tab = g.table();
    ChristoffelObjects out;
    out.n = n;
    out.lower.assign(static_cast<size_t>(n * n * n), Poly(tab));
    for (int m = 0; m < n; ++m)
        for (int nn = 0; nn < n; ++nn)
            for (int k = 0; k < n; ++k)
                out.lower[static_cast<size_t>((m * n + nn) * n + k)] =
                    (g.g(m, k).derivative(nn) - g.g(m, nn).derivative(k)).scaled(rat(1, 3));
    Poly det = det_fraction_free(g.g);
    if (det.is_zero()) throw SingularError("metric is degenerate; cannot raise indices");
    MatP adj = adjugate(g.g);
    Poly det2 = det * det;
    out.upper.assign(static_cast<size_t>(n * n * n), RatFunc());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Poly num(tab);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        const Poly& c = out.lower[static_cast<size_t>((a * n + b) * n + k)];
                        if (c.is_zero()) continue;
                        num += adj(j, a) * adj(i, b) * c;
                    }
                out.upper[static_cast<size_t>((i * n + j) * n + k)] = RatFunc(num, det2);
            }
    return out;
}

const RatFunc& OperatorCoeffs::c(int i, int j, int k) const {
    return c_up.at(static_cast<size_t>((i * n + j) * n + k));
}

OperatorCoeffs operator_coeffs(const MongeMetric& g) {
    OperatorCoeffs out;
    out.n = g.n;
    out.det = det_fraction_free(g.g);
    if (out.det.is_zero()) throw SingularError("metric is degenerate; no operator");
    out.adj = adjugate(g.g);
    out.ginv = MatR(g.n, g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) out.ginv(i, j) = RatFunc(out.adj(i, j), out.det);
    out.c_up = c_from_metric(g).upper;
    return out;
}

SingularVariety singular_variety(const MongeMetric& g) {
    SingularVariety out;
    Poly det = det_fraction_free(g.g);
    if (det.is_zero()) {
        out.status = SingularVariety::Status::degenerate;
        return out;
    }
    auto sq = poly_sqrt(det);
    if (!sq) {
        out.status = SingularVariety::Status::not_a_square;
        return out;
    }
    out.constant = sq->first;
    out.s = sq->second;
    auto coords = g.table()->coord_vars();
    out.degree = out.s.deg_in(coords);
    if (out.degree > g.n - 1)
        throw Error("singular variety degree exceeds n-1");  // contradicts a verified metric
    return out;
}

MongeMetric metric_from_json_strings(int n, const std::vector<std::vector<std::string>>& rows,
                                     const std::vector<std::string>& params) {
    TablePtr tab = VarTable::coords_u(n, params);
    MongeMetric g;
    g.n = n;
    g.g = zero_mat(tab, n, n);
    if (static_cast<int>(rows.size()) != n) throw ParseError("metric row count mismatch");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
            throw ParseError("metric column count mismatch");
        for (int j = 0; j < n; ++j)
            g.g(i, j) = parse_poly(rows[static_cast<size_t>(i)][static_cast<size_t>(j)], tab);
    }
    g.validate();
    return g;
}

}  // namespace hamop
