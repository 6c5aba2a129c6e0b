#pragma once

#include <map>
#include <optional>

#include "hamop/exterior.hpp"

namespace hamop {

// Symmetric metric with entries of degree <= 2 in the chart coordinates
// u1..un (table convention: coordinates first, parameters after).
struct MongeMetric {
    int n = 0;
    MatP g;

    TablePtr table() const { return g(0, 0).table(); }
    void validate() const;  // symmetry and degree bounds
};

// psi^g_k(u) = psi^g_{km} u^m + omega^g_k with psi^g skew-symmetric
struct PsiData {
    std::vector<MatQ> psi;  // one skew n x n matrix per generator index
    MatQ omega;             // omega(g, k)
};

struct ChristoffelObjects {
    int n = 0;
    std::vector<Poly> lower;    // c_{mnk}, index (m*n + n_)*n + k
    std::vector<RatFunc> upper;  // c^{ij}_k, same layout
    const Poly& c(int m, int nn, int k) const;
    const RatFunc& c_up(int i, int j, int k) const;
};

// constants of the general metric form: a_{ij} du^i du^j
// + b_{ijk} du^i (u^j du^k - u^k du^j)
// + c_{ijkl} (u^i du^j - u^j du^i)(u^k du^l - u^l du^k)
struct MongeGeneralCoeffs {
    int n = 0;
    std::map<std::pair<int, int>, Rational> a;                    // i <= j
    std::map<std::tuple<int, int, int>, Rational> b;              // j < k
    std::map<std::tuple<int, int, int, int>, Rational> c;         // i<j, k<l, (ij)<=(kl)
};

// one term coeff * p^{ab} p^{cd} of a quadratic in Plucker coordinates
struct PQuadTerm {
    Poly coeff;
    std::pair<int, int> p1;  // 0-based index pairs, a < b
    std::pair<int, int> p2;
};

// chart table u1..un followed by the union (by name) of all parameter
// variables of the source tables
TablePtr chart_table(int n, const std::vector<TablePtr>& sources);
// re-express a parameter polynomial over a larger table, matching by name
Poly lift_param_poly(const Poly& p, const TablePtr& to);

// expand a Plucker-coordinate quadratic in the affine chart (0-based)
MongeMetric metric_from_plucker_terms(int n, int chart, const std::vector<PQuadTerm>& terms);

// g = phi_{bg} tr(A^b P) tr(A^g P) restricted to the chart (default u^{n+1}=1)
MongeMetric metric_from_subspace(const SubspaceA& a, const PhiForm& phi, int chart = -1);

// chart-restricted trace forms tr(A^b P): coefficients of du^1..du^n
std::vector<VecP> trace_forms(const SubspaceA& a, int chart, const TablePtr& tab_g);

MongeMetric metric_from_psi(const PsiData& data, const PhiForm& phi);

MongeMetric monge_general(const MongeGeneralCoeffs& coeffs);

// c_{mnk} = (g_{mk,n} - g_{mn,k})/3 and the index-raised c^{ij}_k
ChristoffelObjects c_from_metric(const MongeMetric& g);

struct OperatorCoeffs {
    int n = 0;
    MatR ginv;                    // g^{ij}
    std::vector<RatFunc> c_up;    // c^{ij}_k
    Poly det;                     // det g
    MatP adj;                     // adjugate of g
    const RatFunc& c(int i, int j, int k) const;
};

// data of J = D (g^{ij} D + c^{ij}_k u^k_x) D in flat coordinates
OperatorCoeffs operator_coeffs(const MongeMetric& g);

struct SingularVariety {
    enum class Status { ok, degenerate, not_a_square };
    Status status = Status::ok;
    Poly constant;  // det g = constant * s^2; free of chart coordinates
    Poly s;         // primitive, positive leading coefficient
    int degree = 0; // degree of s in the chart coordinates
};

SingularVariety singular_variety(const MongeMetric& g);

MongeMetric metric_from_json_strings(int n, const std::vector<std::vector<std::string>>& rows,
                                     const std::vector<std::string>& params);

}  // namespace hamop
