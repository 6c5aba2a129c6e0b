#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hamop/exterior.hpp"
#include "hamop/io.hpp"

using namespace hamop;

namespace {

// bivector from 1-based index pairs with integer coefficients
Bivector biv(int n, TablePtr tab, std::vector<std::tuple<int, int, int>> parts) {
    Bivector b(n, tab);
    for (auto& [a, bb, c] : parts) b.coeff(a - 1, bb - 1) += Poly::constant(tab, c);
    return b;
}

SubspaceA case_subspace(int id, TablePtr tab) {
    // the five 3-dimensional subspaces of Lambda^2 V^4
    switch (id) {
        case 1:
            return SubspaceA{{biv(3, tab, {{1, 2, 1}}), biv(3, tab, {{1, 3, 1}}),
                              biv(3, tab, {{2, 3, 1}})}};
        case 2:
            return SubspaceA{{biv(3, tab, {{1, 4, 1}}), biv(3, tab, {{2, 4, 1}}),
                              biv(3, tab, {{3, 4, 1}})}};
        case 3:
            return SubspaceA{{biv(3, tab, {{1, 2, 1}}), biv(3, tab, {{2, 4, 1}}),
                              biv(3, tab, {{3, 4, 1}})}};
        case 4:
            return SubspaceA{{biv(3, tab, {{1, 2, 1}}), biv(3, tab, {{3, 4, 1}}),
                              biv(3, tab, {{1, 3, 1}, {2, 4, 1}})}};
        case 5:
            return SubspaceA{{biv(3, tab, {{1, 4, 1}, {2, 3, 1}}), biv(3, tab, {{2, 4, 1}}),
                              biv(3, tab, {{3, 4, 1}})}};
        default:
            throw Error("no such case");
    }
}

SubspaceA generic4(TablePtr tab) {
    return SubspaceA{{biv(4, tab, {{1, 2, 1}, {4, 5, 1}}), biv(4, tab, {{2, 5, 1}, {3, 4, 1}}),
                      biv(4, tab, {{1, 5, 1}, {2, 4, 1}}), biv(4, tab, {{1, 4, 1}, {2, 3, 1}})}};
}

// n=5 subspace with one parameter alpha
SubspaceA example5(TablePtr tab) {
    int al = tab->require("alpha");
    Bivector b2 = biv(5, tab, {{1, 3, 1}, {1, 4, 1}, {4, 6, 1}});
    b2.coeff(1, 3) += Poly::var(tab, al);  // + alpha e2^e4
    return SubspaceA{{biv(5, tab, {{1, 2, 2}, {3, 4, 1}, {5, 6, 1}}), b2,
                      biv(5, tab, {{2, 6, 1}, {3, 5, -1}}),
                      biv(5, tab, {{1, 6, 1}, {2, 3, -1}, {4, 5, 1}}),
                      biv(5, tab, {{1, 5, 1}, {2, 5, 2}, {3, 4, 1}})}};
}

ComplexForm random_complex(std::mt19937& rng, int n, TablePtr tab) {
    PluckerBasis pb(n);
    std::uniform_int_distribution<int> ci(-5, 5);
    ComplexForm q;
    q.n = n;
    q.q = zero_mat(tab, pb.size(), pb.size());
    for (int i = 0; i < pb.size(); ++i)
        for (int j = i; j < pb.size(); ++j) {
            Poly v = Poly::constant(tab, ci(rng));
            q.q(i, j) = v;
            q.q(j, i) = v;
        }
    return q;
}

}  // namespace

TEST_CASE("wedge of bivectors") {
    auto tab = VarTable::make({}, {"t"});
    Bivector e12 = biv(3, tab, {{1, 2, 1}});
    Bivector e13 = biv(3, tab, {{1, 3, 1}});
    Bivector e34 = biv(3, tab, {{3, 4, 1}});
    CHECK(wedge_bivectors(e12, e13).is_zero());  // repeated vector
    FourVector w = wedge_bivectors(e12, e34);
    REQUIRE(w.c.size() == 1);
    CHECK(w.c(0) == Poly(1));  // e1^e2^e3^e4
    // all pairwise wedges inside <e1^e4, e2^e4, e3^e4> vanish (shared e4)
    SubspaceA c2 = case_subspace(2, tab);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) CHECK(wedge_bivectors(c2.gens[i], c2.gens[j]).is_zero());
    CHECK_THROWS_AS(wedge_bivectors(e12, biv(4, tab, {{1, 2, 1}})), DimensionError);
}

TEST_CASE("plucker relation counts") {
    CHECK(plucker_relations(2).empty());
    CHECK(plucker_relations(3).size() == 1);
    CHECK(plucker_relations(4).size() == 5);
    CHECK(plucker_relations(5).size() == 15);
}

TEST_CASE("relations vanish on decomposable bivectors") {
    for (int n : {3, 4}) {
        std::vector<std::string> names;
        for (int i = 1; i <= n + 1; ++i) names.push_back("s" + std::to_string(i));
        for (int i = 1; i <= n + 1; ++i) names.push_back("t" + std::to_string(i));
        auto tab = VarTable::make(names);
        PluckerBasis pb(n);
        VecP p(pb.size());
        for (int k = 0; k < pb.size(); ++k) {
            auto [a, b] = pb.pairs()[static_cast<size_t>(k)];
            p(k) = Poly::var(tab, a) * Poly::var(tab, n + 1 + b) -
                   Poly::var(tab, b) * Poly::var(tab, n + 1 + a);
        }
        for (auto& rel : plucker_relations(n)) {
            Poly val(tab);
            for (int i = 0; i < pb.size(); ++i)
                for (int j = 0; j < pb.size(); ++j)
                    if (rel.omega(i, j) != 0) val += (p(i) * p(j)).scaled(rel.omega(i, j));
            CHECK(val.is_zero());
        }
    }
}

TEST_CASE("pfaffian-form of the n=3 relation") {
    // p Omega p^t reproduces p12 p34 - p13 p24 + p14 p23
    auto tab = VarTable::make({"p12", "p13", "p14", "p23", "p24", "p34"});
    auto rels = plucker_relations(3);
    REQUIRE(rels.size() == 1);
    VecP p(6);
    for (int i = 0; i < 6; ++i) p(i) = Poly::var(tab, i);
    Poly val(tab);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (rels[0].omega(i, j) != 0) val += (p(i) * p(j)).scaled(rels[0].omega(i, j));
    CHECK(val == parse_poly("p12*p34 - p13*p24 + p14*p23", tab));
}

TEST_CASE("solve_phi dimensions for the catalogued subspaces") {
    auto tab = VarTable::make({}, {"t"});
    CHECK(solve_phi(case_subspace(1, tab)).size() == 6);
    CHECK(solve_phi(case_subspace(2, tab)).size() == 6);
    CHECK(solve_phi(case_subspace(3, tab)).size() == 5);
    auto c4 = solve_phi(case_subspace(4, tab));
    CHECK(c4.size() == 5);
    auto c5 = solve_phi(case_subspace(5, tab));
    CHECK(c5.size() == 5);
    // case 5: admissible phi have vanishing (A^1, A^1) component
    for (auto& phi : c5) CHECK(phi.m(0, 0).is_zero());
    CHECK(solve_phi(generic4(tab)).size() == 5);
    // King condition holds exactly for every basis element
    SubspaceA a = case_subspace(4, tab);
    for (auto& phi : solve_phi(a)) {
        FourVector acc;
        acc.n = 3;
        acc.c = VecP(1);
        acc.c(0) = Poly(tab);
        for (int b = 0; b < 3; ++b)
            for (int g = 0; g < 3; ++g) {
                FourVector w = wedge_bivectors(a.gens[b], a.gens[g]);
                acc.c(0) += phi.m(b, g) * w.c(0).scaled(rat(1, 2));
            }
        CHECK(acc.is_zero());
    }
    SubspaceA dep{{biv(3, tab, {{1, 2, 1}}), biv(3, tab, {{1, 2, 2}}), biv(3, tab, {{3, 4, 1}})}};
    CHECK_THROWS_AS(solve_phi(dep), SingularError);
}

TEST_CASE("n=5 example: King rank 15 generically, 14 at alpha=0") {
    auto tab = VarTable::make({}, {"alpha"});
    SubspaceA a = example5(tab);
    MatP k = king_matrix(a);
    CHECK(k.rows() == 15);
    CHECK(k.cols() == 15);
    CHECK(rank_and_nullspace(k).rank == 15);  // symbolic alpha: phi = 0 only

    // specialise alpha = 0
    int al = tab->require("alpha");
    MatP k0 = k;
    for (Eigen::Index i = 0; i < k.rows(); ++i)
        for (Eigen::Index j = 0; j < k.cols(); ++j)
            k0(i, j) = k(i, j).subst(std::map<int, Rational>{{al, Rational(0)}});
    auto rn = rank_and_nullspace(k0);
    CHECK(rn.rank == 14);
    REQUIRE(rn.kernel.size() == 1);
    // unique phi is non-degenerate
    PhiForm phi;
    phi.m = zero_mat(tab, 5, 5);
    int col = 0;
    for (int b = 0; b < 5; ++b)
        for (int g = b; g < 5; ++g, ++col) {
            phi.m(b, g) = rn.kernel[0](col);
            phi.m(g, b) = rn.kernel[0](col);
        }
    CHECK(phi.nondegenerate());
}

TEST_CASE("normal form of a quadratic complex") {
    auto tab = VarTable::make({}, {"t"});
    std::mt19937 rng(20250810);
    for (int it = 0; it < 20; ++it) {
        int n = it % 2 ? 3 : 4;
        ComplexForm q = random_complex(rng, n, tab);
        ComplexForm nf = normal_form_Q(q);
        CHECK(in_kernel(nf));
        // idempotent
        ComplexForm nf2 = normal_form_Q(nf);
        for (Eigen::Index i = 0; i < nf.q.rows(); ++i)
            for (Eigen::Index j = 0; j < nf.q.cols(); ++j) CHECK(nf2.q(i, j) == nf.q(i, j));
        // difference lies in the span of the relations
        MatP diff = q.q - nf.q;
        auto rels = plucker_relations(n);
        std::vector<Poly> coef;
        for (auto& rel : rels) {
            auto [a, b, c, d] = rel.subset;
            PluckerBasis pb(n);
            coef.push_back(diff(pb.index(a, b), pb.index(c, d)).scaled(2));
        }
        MatP recon = zero_mat(tab, diff.rows(), diff.cols());
        for (size_t r = 0; r < rels.size(); ++r)
            for (Eigen::Index i = 0; i < diff.rows(); ++i)
                for (Eigen::Index j = 0; j < diff.cols(); ++j)
                    recon(i, j) += coef[r].scaled(rels[r].omega(i, j));
        for (Eigen::Index i = 0; i < diff.rows(); ++i)
            for (Eigen::Index j = 0; j < diff.cols(); ++j) CHECK(recon(i, j) == diff(i, j));
        // apolarity agrees with kernel membership
        CHECK(apolarity_check(nf));
        if (!in_kernel(q)) CHECK(!apolarity_check(q));
    }
    // n=3: normal form satisfies tr(Q Omega^{-1}) = 0
    ComplexForm q3 = random_complex(rng, 3, tab);
    ComplexForm nf3 = normal_form_Q(q3);
    auto rel = plucker_relations(3)[0];
    MatQ omega = rel.omega;
    MatQ oinv = 4 * omega;  // omega^2 = I/4
    Poly tr(tab);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (oinv(j, i) != 0) tr += nf3.q(i, j).scaled(oinv(j, i));
    CHECK(tr.is_zero());
}

TEST_CASE("hamiltonian complex rank test") {
    auto tab = VarTable::make({}, {"t"});
    PluckerBasis pb(3);
    // zero complex: rank 0 != 3
    ComplexForm z;
    z.n = 3;
    z.q = zero_mat(tab, 6, 6);
    CHECK(!is_hamiltonian_complex(z));
    // complex of the Euclidean metric: sum (p^{i4})^2, rank 3
    ComplexForm g6;
    g6.n = 3;
    g6.q = zero_mat(tab, 6, 6);
    for (int i = 0; i < 3; ++i) {
        int k = pb.index(i, 3);
        g6.q(k, k) = Poly(1);
    }
    CHECK(in_kernel(g6));
    CHECK(is_hamiltonian_complex(g6));
    // generic rank-6 symmetric complex fails the rank condition
    std::mt19937 rng(777);
    ComplexForm q = random_complex(rng, 3, tab);
    CHECK(!is_hamiltonian_complex(q));
    // a single relation matrix is not apolar to the dual Grassmannian
    auto rels4 = plucker_relations(4);
    ComplexForm om;
    om.n = 4;
    om.q = to_poly(rels4[0].omega, tab);
    CHECK(!apolarity_check(om));
}

TEST_CASE("King condition equals the psi/omega constraint system") {
    auto tab = VarTable::make({}, {"t"});
    for (int id = 1; id <= 5; ++id) {
        SubspaceA a = case_subspace(id, tab);
        MatP king = king_matrix(a);
        MatP direct = psi_omega_constraints(a, 3);
        MatP stacked = zero_mat(tab, king.rows() + direct.rows(), king.cols());
        stacked.block(0, 0, king.rows(), king.cols()) = king;
        stacked.block(king.rows(), 0, direct.rows(), direct.cols()) = direct;
        int rk = rank_and_nullspace(king).rank;
        CHECK(rank_and_nullspace(direct).rank == rk);
        CHECK(rank_and_nullspace(stacked).rank == rk);
    }
    SubspaceA g = generic4(tab);
    MatP king = king_matrix(g);
    MatP direct = psi_omega_constraints(g, 4);
    MatP stacked = zero_mat(tab, king.rows() + direct.rows(), king.cols());
    stacked.block(0, 0, king.rows(), king.cols()) = king;
    stacked.block(king.rows(), 0, direct.rows(), direct.cols()) = direct;
    int rk = rank_and_nullspace(king).rank;
    CHECK(rank_and_nullspace(direct).rank == rk);
    CHECK(rank_and_nullspace(stacked).rank == rk);
}
