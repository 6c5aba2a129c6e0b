#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hamop/hamverify.hpp"
#include "util.hpp"

using namespace hamop;
using namespace testutil;

namespace {

// metric equality across table layouts
bool same_entries(const MongeMetric& a, const MongeMetric& b) {
    if (a.n != b.n) return false;
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            if (a.g(i, j).str() != b.g(i, j).str()) return false;
    return true;
}

MongeMetric random_valid_metric(std::mt19937& rng) {
    std::uniform_int_distribution<int> ci(-3, 3);
    PsiData pd;
    pd.omega = MatQ(3, 3);
    for (int g = 0; g < 3; ++g) {
        MatQ skew = MatQ::Constant(3, 3, Rational(0));
        for (int k = 0; k < 3; ++k)
            for (int m = k + 1; m < 3; ++m) {
                skew(k, m) = Rational(ci(rng));
                skew(m, k) = -skew(k, m);
            }
        pd.psi.push_back(skew);
        for (int k = 0; k < 3; ++k) pd.omega(g, k) = Rational(ci(rng));
    }
    PhiForm phi;
    phi.m = MatP(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            phi.m(i, j) = Poly(ci(rng));
            phi.m(j, i) = phi.m(i, j);
        }
    return metric_from_psi(pd, phi);
}

ProjectiveMap random_projective(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> ci(-2, 2);
    while (true) {
        MatQ m(n + 1, n + 1);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) m(i, j) = Rational(ci(rng));
        if (inverse(m).has_value()) return ProjectiveMap{m};
    }
}

}  // namespace

TEST_CASE("killing condition") {
    CHECK(check_killing(canonical_g(6)));
    CHECK(check_killing(canonical_g(1)));  // symbolic c
    MongeMetric bad = canonical_g(4);
    bad.g(0, 0) = parse_poly("-2*u2+u1", bad.table());
    CHECK(!check_killing(bad));
}

TEST_CASE("nonlinear condition holds for all six canonical forms") {
    for (int k = 1; k <= 6; ++k) {
        MongeMetric g = canonical_g(k);
        CHECK(check_killing(g));
        CHECK(check_nonlinear(g));
    }
    // fails when an entry is tampered with
    MongeMetric bad = canonical_g(2);
    bad.g(0, 0) = parse_poly("u2^2+u1", bad.table());
    CHECK(!check_nonlinear(bad));
    CHECK_THROWS_AS(
        check_nonlinear(metric3({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "0"}})),
        SingularError);
}

TEST_CASE("generic 4-component metric passes with symbolic parameters") {
    auto ptab = VarTable::make({}, {"f1", "f2", "f3", "f4", "f5"});
    std::vector<Poly> ph;
    for (int k = 0; k < 5; ++k) ph.push_back(Poly::var(ptab, k));
    MongeMetric g = display_generic4(ph);
    CHECK(check_killing(g));
    CHECK(check_nonlinear(g));
}

TEST_CASE("potemin system agrees with killing + nonlinear") {
    for (int k = 1; k <= 6; ++k) {
        auto rep = check_potemin_system(canonical_g(k));
        CHECK(rep.ok());
    }
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> ci(-2, 2);
    int tested = 0;
    for (int it = 0; it < 40 && tested < 20; ++it) {
        MongeMetric g = random_valid_metric(rng);
        if (it % 2) {
            // tamper with one entry to get invalid candidates
            int i = it % 3, j = (it / 2) % 3;
            Poly bump = Poly::var(g.table(), (it / 4) % 3).scaled(ci(rng));
            g.g(i, j) += bump;
            g.g(j, i) = g.g(i, j);
        }
        if (det_fraction_free(g.g).is_zero()) continue;
        ++tested;
        bool kn = check_killing(g) && check_nonlinear(g);
        CHECK(check_potemin_system(g).ok() == kn);
    }
    CHECK(tested >= 20);
}

TEST_CASE("flatness and Cotton tensors of the canonical forms") {
    for (int k : {4, 5, 6}) {
        auto rep = curvature(canonical_g(k));
        CHECK(rep.flat);
        CHECK(rep.conformally_flat);
    }
    for (int k : {1, 2, 3}) {
        auto rep = curvature(canonical_g(k));
        CHECK(!rep.flat);
        CHECK(rep.has_cotton);
        CHECK(!rep.conformally_flat);  // some Cotton component is nonzero
    }
}

TEST_CASE("riemann tensor symmetries") {
    MongeMetric g = canonical_g(2);
    auto rep = curvature(g);
    const int n = 3;
    // lower the first index
    auto rlow = [&](int i, int j, int k, int l) {
        RatFunc v;
        for (int m = 0; m < n; ++m) v += RatFunc(g.g(i, m)) * rep.r(m, j, k, l);
        return v;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    CHECK(rlow(i, j, k, l) == -rlow(j, i, k, l));
                    CHECK(rlow(i, j, k, l) == -rlow(i, j, l, k));
                    // first Bianchi
                    RatFunc b = rep.r(i, j, k, l) + rep.r(i, k, l, j) + rep.r(i, l, j, k);
                    CHECK(b.is_zero());
                }
}

TEST_CASE("projective pullback basics") {
    MongeMetric g4 = canonical_g(4);
    ProjectiveMap id{MatQ(MatQ::Identity(4, 4))};
    MongeMetric same = pullback_metric(g4, id);
    CHECK(same_entries(same, g4));

    MatQ sing = MatQ::Constant(4, 4, Rational(1));
    CHECK_THROWS_AS(pullback_metric(g4, ProjectiveMap{sing}), SingularError);

    // swapping u1 and u2 carries the third canonical form onto the displayed
    // case-3 metric at (a,b,c,alpha,beta) = (1,1,1,0,0)
    MatQ swp = MatQ::Constant(4, 4, Rational(0));
    swp(0, 1) = swp(1, 0) = swp(2, 2) = swp(3, 3) = 1;
    MongeMetric m = pullback_metric(canonical_g(3), ProjectiveMap{swp});
    MongeMetric d3 = display_case3();
    auto pt = d3.table();
    std::map<int, Rational> vals{{pt->require("a"), 1},
                                 {pt->require("b"), 1},
                                 {pt->require("c"), 1},
                                 {pt->require("alpha"), 0},
                                 {pt->require("beta"), 0}};
    MongeMetric d3s = d3;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d3s.g(i, j) = d3.g(i, j).subst(vals);
    CHECK(same_entries(m, d3s));
}

TEST_CASE("pullback functoriality and invariance") {
    std::mt19937 rng(11);
    MongeMetric g2 = canonical_g(2);
    for (int it = 0; it < 4; ++it) {
        ProjectiveMap t1 = random_projective(rng, 3);
        ProjectiveMap t2 = random_projective(rng, 3);
        MongeMetric seq = pullback_metric(pullback_metric(g2, t1), t2);
        ProjectiveMap comp{MatQ(t2.m * t1.m)};
        MongeMetric direct = pullback_metric(g2, comp);
        CHECK(same_entries(seq, direct));
    }
    // Hamiltonian verdicts survive projective maps
    for (int it = 0; it < 3; ++it) {
        ProjectiveMap t = random_projective(rng, 3);
        for (int k : {2, 4}) {
            MongeMetric m = pullback_metric(canonical_g(k), t);
            auto coords = m.table()->coord_vars();
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) CHECK(m.g(i, j).deg_in(coords) <= 2);
            if (det_fraction_free(m.g).is_zero()) continue;
            CHECK(check_killing(m));
            CHECK(check_nonlinear(m));
        }
    }
    // pullback of a flat metric stays flat
    ProjectiveMap t = random_projective(rng, 3);
    MongeMetric m4 = pullback_metric(canonical_g(4), t);
    if (!det_fraction_free(m4.g).is_zero()) CHECK(curvature(m4).flat);
}
