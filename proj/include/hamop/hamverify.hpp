#pragma once

#include "hamop/monge.hpp"

namespace hamop {

// projective change of chart: u~^i = l^i(u)/l(u), rows of an invertible
// (n+1)x(n+1) matrix acting on (u, 1)
struct ProjectiveMap {
    MatQ m;
    int n() const { return static_cast<int>(m.rows()) - 1; }
};

// g_{mk,n} + g_{kn,m} + g_{mn,k} = 0 for all index triples
bool check_killing(const MongeMetric& g);

// g_{m[k,n]l} = -(1/3) g^{pq} g_{p[l,m]} g_{q[k,n]}, checked fraction-free
// after multiplying through by det g
bool check_nonlinear(const MongeMetric& g);

struct PoteminReport {
    bool gradient_ok = false;    // g_{mn,k} = -c_{mnk} - c_{nmk}
    bool skew_ok = false;        // c_{mnk} = -c_{mkn}
    bool cyclic_ok = false;      // c_{mnk} + c_{nkm} + c_{kmn} = 0
    bool quadratic_ok = false;   // c_{mnk,l} = -g^{pq} c_{pml} c_{qnk}
    bool ok() const { return gradient_ok && skew_ok && cyclic_ok && quadratic_ok; }
};

PoteminReport check_potemin_system(const MongeMetric& g);

struct CurvatureReport {
    int n = 0;
    std::vector<RatFunc> riemann;       // R^i_{jkl}
    bool flat = false;
    std::vector<RatFunc> cotton;        // C_{ijk}, n = 3 only
    bool has_cotton = false;
    bool conformally_flat = false;
    const RatFunc& r(int i, int j, int k, int l) const {
        return riemann.at(static_cast<size_t>(((i * n + j) * n + k) * n + l));
    }
    const RatFunc& c(int i, int j, int k) const {
        return cotton.at(static_cast<size_t>((i * n + j) * n + k));
    }
};

CurvatureReport curvature(const MongeMetric& g);

// pullback of g under the inverse chart map, rescaled by the fourth power of
// the chart divisor; lands back in Monge form (asserted)
MongeMetric pullback_metric(const MongeMetric& g, const ProjectiveMap& t);

}  // namespace hamop
