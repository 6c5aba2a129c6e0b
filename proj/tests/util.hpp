#pragma once

// shared builders for the canonical forms and subspaces used across suites

#include <string>
#include <vector>

#include "hamop/exterior.hpp"
#include "hamop/io.hpp"
#include "hamop/monge.hpp"

namespace testutil {

using namespace hamop;

inline MongeMetric metric3(const std::vector<std::vector<std::string>>& rows,
                           const std::vector<std::string>& params = {}) {
    return metric_from_json_strings(3, rows, params);
}

// the six canonical three-component metrics; g1 keeps c symbolic by default
inline MongeMetric canonical_g(int k, bool symbolic_c = true) {
    switch (k) {
        case 1: {
            std::vector<std::string> params = symbolic_c ? std::vector<std::string>{"c"}
                                                         : std::vector<std::string>{};
            if (symbolic_c)
                return metric3({{"u2^2+c", "-u1*u2-u3", "2*u2"},
                                {"-u1*u2-u3", "u1^2+c*u3^2", "-c*u2*u3-u1"},
                                {"2*u2", "-c*u2*u3-u1", "c*u2^2+1"}},
                               params);
            return metric3({{"u2^2+1", "-u1*u2-u3", "2*u2"},
                            {"-u1*u2-u3", "u1^2+u3^2", "-u2*u3-u1"},
                            {"2*u2", "-u2*u3-u1", "u2^2+1"}});
        }
        case 2:
            return metric3({{"u2^2+1", "-u1*u2-u3", "2*u2"},
                            {"-u1*u2-u3", "u1^2", "-u1"},
                            {"2*u2", "-u1", "1"}});
        case 3:
            return metric3({{"u2^2+1", "-u1*u2", "0"}, {"-u1*u2", "u1^2", "0"}, {"0", "0", "1"}});
        case 4:
            return metric3({{"-2*u2", "u1", "0"}, {"u1", "0", "0"}, {"0", "0", "1"}});
        case 5:
            return metric3({{"-2*u2", "u1", "1"}, {"u1", "1", "0"}, {"1", "0", "0"}});
        case 6:
            return metric3({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
        default:
            throw Error("no such canonical metric");
    }
}

// bivector from 1-based index pairs with integer coefficients
inline Bivector biv(int n, TablePtr tab, std::vector<std::tuple<int, int, int>> parts) {
    Bivector b(n, tab);
    for (auto& [a, bb, c] : parts) b.coeff(a - 1, bb - 1) += Poly::constant(tab, c);
    return b;
}

// the five 3-dimensional subspaces of Lambda^2 V^4
inline SubspaceA case_subspace(int id, TablePtr tab) {
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

// generic 4-component subspace
inline SubspaceA generic4(TablePtr tab) {
    return SubspaceA{{biv(4, tab, {{1, 2, 1}, {4, 5, 1}}), biv(4, tab, {{2, 5, 1}, {3, 4, 1}}),
                      biv(4, tab, {{1, 5, 1}, {2, 4, 1}}), biv(4, tab, {{1, 4, 1}, {2, 3, 1}})}};
}

// five-component subspace with one parameter alpha
inline SubspaceA example_n5(TablePtr tab) {
    int al = tab->require("alpha");
    Bivector b2 = biv(5, tab, {{1, 3, 1}, {1, 4, 1}, {4, 6, 1}});
    b2.coeff(1, 3) += Poly::var(tab, al);
    return SubspaceA{{biv(5, tab, {{1, 2, 2}, {3, 4, 1}, {5, 6, 1}}), b2,
                      biv(5, tab, {{2, 6, 1}, {3, 5, -1}}),
                      biv(5, tab, {{1, 6, 1}, {2, 3, -1}, {4, 5, 1}}),
                      biv(5, tab, {{1, 5, 1}, {2, 5, 2}, {3, 4, 1}})}};
}

// displayed case metrics of the three-component classification, symbolic
// parameters; the p-quadratic data mirrors the displays verbatim
inline MongeMetric display_case3() {
    auto pt = VarTable::make({}, {"a", "b", "c", "alpha", "beta"});
    auto v = [&](const char* s) { return Poly::var(pt, pt->require(s)); };
    std::vector<PQuadTerm> terms = {
        {v("a"), {0, 1}, {0, 1}},          {v("b"), {1, 3}, {1, 3}},
        {v("c"), {2, 3}, {2, 3}},          {v("alpha").scaled(2), {0, 1}, {1, 3}},
        {v("beta").scaled(2), {1, 3}, {2, 3}}};
    return metric_from_plucker_terms(3, 3, terms);
}

inline MongeMetric display_case4() {
    auto pt = VarTable::make({}, {"a", "b", "c", "alpha", "beta"});
    auto v = [&](const char* s) { return Poly::var(pt, pt->require(s)); };
    std::vector<PQuadTerm> terms = {
        {v("a"), {0, 1}, {0, 1}},
        {v("b"), {2, 3}, {2, 3}},
        {v("c"), {0, 2}, {0, 2}},
        {v("c"), {0, 2}, {1, 3}},
        {v("c"), {1, 3}, {0, 2}},
        {v("c"), {1, 3}, {1, 3}},
        {v("c").scaled(2), {0, 1}, {2, 3}},
        {v("alpha").scaled(2), {0, 1}, {0, 2}},
        {v("alpha").scaled(2), {0, 1}, {1, 3}},
        {v("beta").scaled(2), {2, 3}, {0, 2}},
        {v("beta").scaled(2), {2, 3}, {1, 3}}};
    return metric_from_plucker_terms(3, 3, terms);
}

inline MongeMetric display_case5() {
    auto pt = VarTable::make({}, {"a", "b", "alpha", "beta", "gamma"});
    auto v = [&](const char* s) { return Poly::var(pt, pt->require(s)); };
    std::vector<PQuadTerm> terms = {
        {v("a"), {1, 3}, {1, 3}},
        {v("b"), {2, 3}, {2, 3}},
        {v("alpha").scaled(2), {1, 3}, {0, 3}},
        {v("alpha").scaled(2), {1, 3}, {1, 2}},
        {v("beta").scaled(2), {2, 3}, {0, 3}},
        {v("beta").scaled(2), {2, 3}, {1, 2}},
        {v("gamma").scaled(2), {1, 3}, {2, 3}}};
    return metric_from_plucker_terms(3, 3, terms);
}

// five-parameter metric of the generic four-component subspace
inline MongeMetric display_generic4(std::vector<Poly> phi) {
    // phi = (phi1..phi5) over some parameter table (or constants)
    auto B1 = std::vector<std::pair<int, int>>{{0, 1}, {3, 4}};
    auto B2 = std::vector<std::pair<int, int>>{{0, 4}, {1, 3}};
    auto B3 = std::vector<std::pair<int, int>>{{1, 4}, {2, 3}};
    auto B4 = std::vector<std::pair<int, int>>{{0, 3}, {1, 2}};
    auto quad = [&](Poly c, const std::vector<std::pair<int, int>>& x,
                    const std::vector<std::pair<int, int>>& y, std::vector<PQuadTerm>& out) {
        for (auto& p1 : x)
            for (auto& p2 : y) out.push_back({c, p1, p2});
    };
    std::vector<PQuadTerm> terms;
    quad(phi[0], B1, B1, terms);
    quad(phi[1].scaled(2), B1, B2, terms);
    quad(phi[2], B2, B2, terms);
    quad(phi[3], B3, B3, terms);
    quad((phi[0] + phi[2]).scaled(2), B3, B4, terms);
    quad(phi[4], B4, B4, terms);
    quad(phi[3].scaled(-2), B1, B4, terms);
    quad(phi[4].scaled(-2), B1, B3, terms);
    return metric_from_plucker_terms(4, 4, terms);
}

}  // namespace testutil
