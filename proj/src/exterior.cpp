#include "hamop/exterior.hpp"

#include <algorithm>

namespace hamop {

PluckerBasis::PluckerBasis(int n) : n_(n) {
    if (n < 1) throw DimensionError("PluckerBasis needs n >= 1");
    for (int a = 0; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) pairs_.emplace_back(a, b);
}

int PluckerBasis::index(int a, int b) const {
    if (a > b) std::swap(a, b);
    if (a < 0 || b > n_ || a == b) throw DimensionError("Plucker index out of range");
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::make_pair(a, b));
    return static_cast<int>(it - pairs_.begin());
}

std::vector<std::array<int, 4>> subsets4(int dim_v) {
    std::vector<std::array<int, 4>> out;
    for (int a = 0; a < dim_v; ++a)
        for (int b = a + 1; b < dim_v; ++b)
            for (int c = b + 1; c < dim_v; ++c)
                for (int d = c + 1; d < dim_v; ++d) out.push_back({a, b, c, d});
    return out;
}

Bivector::Bivector(int n, TablePtr tab) : n_(n), tab_(std::move(tab)) {
    PluckerBasis pb(n);
    c_ = VecP(pb.size());
    for (Eigen::Index i = 0; i < c_.size(); ++i) c_(i) = Poly(tab_);
}

Bivector Bivector::from_skew(const MatP& m) {
    if (!is_skew(m)) throw DimensionError("bivector matrix must be skew-symmetric");
    int n = static_cast<int>(m.rows()) - 1;
    TablePtr tab;
    for (Eigen::Index i = 0; i < m.rows() && !tab; ++i)
        for (Eigen::Index j = 0; j < m.cols() && !tab; ++j)
            if (m(i, j).table()) tab = m(i, j).table();
    Bivector b(n, tab);
    PluckerBasis pb(n);
    for (int i = 0; i < pb.size(); ++i) {
        auto [a, bb] = pb.pairs()[static_cast<size_t>(i)];
        b.c_(i) = m(a, bb);
    }
    return b;
}

Poly& Bivector::coeff(int a, int b) {
    PluckerBasis pb(n_);
    return c_(pb.index(a, b));
}

Poly Bivector::coeff_signed(int a, int b) const {
    if (a == b) return Poly(tab_);
    PluckerBasis pb(n_);
    Poly v = c_(pb.index(a, b));
    return a < b ? v : -v;
}

MatP Bivector::skew_matrix() const {
    MatP m = zero_mat(tab_, n_ + 1, n_ + 1);
    PluckerBasis pb(n_);
    for (int i = 0; i < pb.size(); ++i) {
        auto [a, b] = pb.pairs()[static_cast<size_t>(i)];
        m(a, b) = c_(i);
        m(b, a) = -c_(i);
    }
    return m;
}

Bivector Bivector::operator+(const Bivector& o) const {
    if (n_ != o.n_) throw DimensionError("bivector dimension mismatch");
    Bivector r = *this;
    for (Eigen::Index i = 0; i < c_.size(); ++i) r.c_(i) = c_(i) + o.c_(i);
    return r;
}

Bivector Bivector::scaled(const Poly& f) const {
    Bivector r = *this;
    for (Eigen::Index i = 0; i < c_.size(); ++i) r.c_(i) = c_(i) * f;
    return r;
}

FourVector wedge_bivectors(const Bivector& a, const Bivector& b) {
    if (a.n() != b.n()) throw DimensionError("wedge of bivectors of different dimension");
    const int n = a.n();
    auto subs = subsets4(n + 1);
    FourVector out;
    out.n = n;
    out.c = VecP(static_cast<Eigen::Index>(subs.size()));
    TablePtr tab = a.table() ? a.table() : b.table();
    for (size_t s = 0; s < subs.size(); ++s) {
        auto [i, j, k, l] = subs[s];
        Poly v(tab);
        v += a.coeff_signed(i, j) * b.coeff_signed(k, l) + b.coeff_signed(i, j) * a.coeff_signed(k, l);
        v -= a.coeff_signed(i, k) * b.coeff_signed(j, l) + b.coeff_signed(i, k) * a.coeff_signed(j, l);
        v += a.coeff_signed(i, l) * b.coeff_signed(j, k) + b.coeff_signed(i, l) * a.coeff_signed(j, k);
        out.c(static_cast<Eigen::Index>(s)) = v;
    }
    return out;
}

void SubspaceA::check_independent() const {
    if (gens.empty()) throw DimensionError("empty subspace");
    const int n = gens[0].n();
    MatP m(static_cast<Eigen::Index>(gens.size()), gens[0].coeffs().size());
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].n() != n) throw DimensionError("mixed bivector dimensions in subspace");
        m.row(static_cast<Eigen::Index>(i)) = gens[i].coeffs().transpose();
    }
    if (rank_and_nullspace(m).rank != static_cast<int>(gens.size()))
        throw SingularError("subspace generators are linearly dependent");
}

std::vector<GrassmannRelation> plucker_relations(int n) {
    std::vector<GrassmannRelation> out;
    if (n < 3) return out;
    PluckerBasis pb(n);
    for (auto& s : subsets4(n + 1)) {
        auto [a, b, c, d] = s;
        MatQ w = MatQ::Constant(pb.size(), pb.size(), Rational(0));
        auto put = [&](int i1, int j1, int i2, int j2, int sg) {
            int r = pb.index(i1, j1), cc = pb.index(i2, j2);
            w(r, cc) += rat(sg, 2);
            w(cc, r) += rat(sg, 2);
        };
        put(a, b, c, d, 1);
        put(a, c, b, d, -1);
        put(a, d, b, c, 1);
        out.push_back(GrassmannRelation{s, std::move(w)});
    }
    return out;
}

std::vector<GrassmannRelation> dual_relations(int n) {
    // dual Plucker coordinates pair off against the same index 2-sets; the
    // pfaffian combinatorics of the dual skew matrix give the same matrices,
    // assembled here independently of plucker_relations
    std::vector<GrassmannRelation> out;
    if (n < 3) return out;
    PluckerBasis pb(n);
    for (auto& s : subsets4(n + 1)) {
        MatQ w = MatQ::Constant(pb.size(), pb.size(), Rational(0));
        // pf of the dual 4x4 minor on s: sum over the 3 perfect matchings
        int a = s[0], b = s[1], c = s[2], d = s[3];
        std::array<std::array<int, 4>, 3> matchings = {{{a, b, c, d}, {a, c, b, d}, {a, d, b, c}}};
        int sg = 1;
        for (auto& m : matchings) {
            int r = pb.index(m[0], m[1]), cc = pb.index(m[2], m[3]);
            w(r, cc) += rat(sg, 2);
            w(cc, r) += rat(sg, 2);
            sg = -sg;
        }
        out.push_back(GrassmannRelation{s, std::move(w)});
    }
    return out;
}

Poly kernel_component(const ComplexForm& q, const std::array<int, 4>& s) {
    PluckerBasis pb(q.n);
    auto [a, b, c, d] = s;
    return q.q(pb.index(a, b), pb.index(c, d)) - q.q(pb.index(a, c), pb.index(b, d)) +
           q.q(pb.index(a, d), pb.index(b, c));
}

bool in_kernel(const ComplexForm& q) {
    for (auto& s : subsets4(q.n + 1))
        if (!kernel_component(q, s).is_zero()) return false;
    return true;
}

ComplexForm normal_form_Q(const ComplexForm& q) {
    ComplexForm r = q;
    PluckerBasis pb(q.n);
    for (auto& s : subsets4(q.n + 1)) {
        Poly k = kernel_component(q, s);
        if (k.is_zero()) continue;
        // K(Q + c*Omega) = K(Q) + (3/2) c, so c = -(2/3) K(Q)
        Poly c = k.scaled(rat(-2, 3));
        auto [a, b, cc, d] = s;
        auto add = [&](int i1, int j1, int i2, int j2, int sg) {
            int r1 = pb.index(i1, j1), c1 = pb.index(i2, j2);
            Poly half = c.scaled(rat(sg, 2));
            r.q(r1, c1) += half;
            r.q(c1, r1) += half;
        };
        add(a, b, cc, d, 1);
        add(a, cc, b, d, -1);
        add(a, d, b, cc, 1);
    }
    return r;
}

bool is_hamiltonian_complex(const ComplexForm& q) {
    ComplexForm nf = normal_form_Q(q);
    if (!in_kernel(nf)) return false;
    return rank_and_nullspace(nf.q).rank == q.n;
}

bool apolarity_check(const ComplexForm& q) {
    for (auto& rel : dual_relations(q.n)) {
        Poly tr(q.q(0, 0).table());
        for (Eigen::Index i = 0; i < q.q.rows(); ++i)
            for (Eigen::Index j = 0; j < q.q.cols(); ++j)
                if (rel.omega(j, i) != 0) tr += q.q(i, j).scaled(rel.omega(j, i));
        if (!tr.is_zero()) return false;
    }
    return true;
}

MatP king_matrix(const SubspaceA& a) {
    const int n = a.n();
    TablePtr tab = a.table();
    auto subs = subsets4(n + 1);
    // precompute pairwise wedges
    std::vector<std::vector<FourVector>> w(static_cast<size_t>(n));
    for (int b = 0; b < n; ++b) {
        w[static_cast<size_t>(b)].resize(static_cast<size_t>(n));
        for (int g = b; g < n; ++g)
            w[static_cast<size_t>(b)][static_cast<size_t>(g)] =
                wedge_bivectors(a.gens[static_cast<size_t>(b)], a.gens[static_cast<size_t>(g)]);
    }
    int cols = n * (n + 1) / 2;
    MatP m = zero_mat(tab, static_cast<Eigen::Index>(subs.size()), cols);
    int col = 0;
    for (int b = 0; b < n; ++b)
        for (int g = b; g < n; ++g, ++col) {
            Rational mult = b == g ? 1 : 2;  // phi_{bg} and phi_{gb} both contribute
            const FourVector& fv = w[static_cast<size_t>(b)][static_cast<size_t>(g)];
            for (size_t s = 0; s < subs.size(); ++s)
                m(static_cast<Eigen::Index>(s), col) =
                    fv.c(static_cast<Eigen::Index>(s)).scaled(mult);
        }
    return m;
}

std::vector<PhiForm> solve_phi(const SubspaceA& a) {
    a.check_independent();
    const int n = a.n();
    auto rn = rank_and_nullspace(king_matrix(a));
    std::vector<PhiForm> out;
    for (auto& v : rn.kernel) {
        PhiForm phi;
        phi.m = zero_mat(a.table(), n, n);
        int col = 0;
        for (int b = 0; b < n; ++b)
            for (int g = b; g < n; ++g, ++col) {
                phi.m(b, g) = v(col);
                phi.m(g, b) = v(col);
            }
        out.push_back(std::move(phi));
    }
    return out;
}

MatP psi_omega_constraints(const SubspaceA& a, int chart) {
    const int n = a.n();
    TablePtr tab = a.table();
    // psi^g_{km} = 2 A^g_{km}, omega^g_k = 2 A^g_{k,chart} on the chart
    // complement (rows/cols of the skew matrices with chart removed)
    std::vector<int> keep;
    for (int i = 0; i <= n; ++i)
        if (i != chart) keep.push_back(i);
    auto psi = [&](int g, int k, int m) {
        return a.gens[static_cast<size_t>(g)].coeff_signed(keep[static_cast<size_t>(k)],
                                                           keep[static_cast<size_t>(m)]).scaled(2);
    };
    auto omg = [&](int g, int k) {
        return a.gens[static_cast<size_t>(g)].coeff_signed(keep[static_cast<size_t>(k)], chart)
            .scaled(2);
    };
    std::vector<std::vector<Poly>> rows;
    auto add_row = [&](auto&& entry_of_pair) {
        std::vector<Poly> row;
        for (int b = 0; b < n; ++b)
            for (int g = b; g < n; ++g) {
                Poly e = entry_of_pair(b, g) + entry_of_pair(g, b);
                if (b == g) e = e.scaled(rat(1, 2));
                row.push_back(e);
            }
        rows.push_back(std::move(row));
    };
    // triple-index constraints from the linear parts
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                for (int s = 0; s < n; ++s)
                    add_row([&](int b, int g) {
                        return psi(b, i, s) * psi(g, j, k) + psi(b, j, s) * psi(g, k, i) +
                               psi(b, k, s) * psi(g, i, j);
                    });
                // constraints mixing the affine parts
                add_row([&](int b, int g) {
                    return omg(b, i) * psi(g, j, k) + omg(b, j) * psi(g, k, i) +
                           omg(b, k) * psi(g, i, j);
                });
            }
    MatP m = zero_mat(tab, static_cast<Eigen::Index>(rows.size()), n * (n + 1) / 2);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    return m;
}

std::vector<VecP> plucker_linear_forms(const PluckerBasis& pb, int chart, const TablePtr& tab) {
    const int n = pb.n();
    std::vector<int> keep;
    for (int i = 0; i <= n; ++i)
        if (i != chart) keep.push_back(i);
    auto coord = [&](int global) {
        for (size_t k = 0; k < keep.size(); ++k)
            if (keep[k] == global) return static_cast<int>(k);
        return -1;
    };
    std::vector<VecP> out;
    for (auto& [a, b] : pb.pairs()) {
        VecP lam(n);
        for (int i = 0; i < n; ++i) lam(i) = Poly(tab);
        if (b == chart) {
            lam(coord(a)) = Poly::constant(tab, -1);  // p^{a,chart} = -du^a
        } else if (a == chart) {
            lam(coord(b)) = Poly::constant(tab, 1);  // p^{chart,b} = du^b
        } else {
            lam(coord(b)) = Poly::var(tab, coord(a));
            lam(coord(a)) = -Poly::var(tab, coord(b));
        }
        out.push_back(std::move(lam));
    }
    return out;
}

}  // namespace hamop
