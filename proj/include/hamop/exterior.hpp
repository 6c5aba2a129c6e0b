#pragma once

#include <array>
#include <vector>

#include "hamop/linalg.hpp"
#include "hamop/matrix.hpp"

namespace hamop {

// Ordered basis of Lambda^2 V^(n+1): index pairs (a,b), 0 <= a < b <= n,
// lexicographic.  p^{ba} = -p^{ab}.
class PluckerBasis {
public:
    explicit PluckerBasis(int n);

    int n() const { return n_; }
    int dim_v() const { return n_ + 1; }
    int size() const { return static_cast<int>(pairs_.size()); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    int index(int a, int b) const;  // a != b, any order
    int sign(int a, int b) const { return a < b ? 1 : -1; }

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
};

// lexicographically ordered 4-element subsets of {0..n}; basis of Lambda^4
std::vector<std::array<int, 4>> subsets4(int dim_v);

// Bivector in Lambda^2 V^(n+1); coefficient view and skew-matrix view agree
class Bivector {
public:
    Bivector(int n, TablePtr tab);
    static Bivector from_skew(const MatP& m);

    int n() const { return n_; }
    TablePtr table() const { return tab_; }
    const VecP& coeffs() const { return c_; }
    Poly& coeff(int a, int b);           // a < b
    Poly coeff_signed(int a, int b) const;  // any order, with sign
    MatP skew_matrix() const;

    Bivector operator+(const Bivector& o) const;
    Bivector scaled(const Poly& f) const;

private:
    int n_;
    TablePtr tab_;
    VecP c_;
};

struct FourVector {
    int n = 0;
    VecP c;  // over subsets4(n+1)
    bool is_zero() const {
        for (Eigen::Index i = 0; i < c.size(); ++i)
            if (!c(i).is_zero()) return false;
        return true;
    }
};

FourVector wedge_bivectors(const Bivector& a, const Bivector& b);

// n-dimensional subspace A in Lambda^2 V^(n+1)
struct SubspaceA {
    std::vector<Bivector> gens;

    int n() const { return static_cast<int>(gens.size()); }
    TablePtr table() const { return gens.at(0).table(); }
    void check_independent() const;  // throws on dependent generators
};

// symmetric n x n form on A
struct PhiForm {
    MatP m;
    bool nondegenerate() const { return !det_fraction_free(m).is_zero(); }
};

// symmetric N x N quadratic form on Lambda^2 V in Plucker coordinates
struct ComplexForm {
    int n = 0;
    MatP q;
};

// one Plucker relation: p Omega^alpha p^t = Pfaffian of the alpha-minor
struct GrassmannRelation {
    std::array<int, 4> subset;
    MatQ omega;
};

std::vector<GrassmannRelation> plucker_relations(int n);

// dual-Grassmannian relations, built from the complementary pairing of the
// Lambda^2 bases (pfaffians of the dual skew matrix)
std::vector<GrassmannRelation> dual_relations(int n);

// kernel component of the map S^2(Lambda^2 V) -> Lambda^4 V on the subset
// {a<b<c<d}:  Q_(ab),(cd) - Q_(ac),(bd) + Q_(ad),(bc)
Poly kernel_component(const ComplexForm& q, const std::array<int, 4>& s);
bool in_kernel(const ComplexForm& q);

// unique representative Q + c_alpha Omega^alpha in the kernel; idempotent
ComplexForm normal_form_Q(const ComplexForm& q);

// rank n and kernel membership after normalisation
bool is_hamiltonian_complex(const ComplexForm& q);

// apolarity against the dual Grassmannian: tr(Q Omega^{alpha*}) = 0 for all
// alpha; agrees with kernel membership
bool apolarity_check(const ComplexForm& q);

// King condition matrix: rows = 4-subsets, columns = pairs (beta <= gamma)
// of generators; phi solves the system iff phi_bg A^b ^ A^g = 0
MatP king_matrix(const SubspaceA& a);

// basis of admissible phi (kernel of the King system), denominator-cleared,
// deterministic order
std::vector<PhiForm> solve_phi(const SubspaceA& a);

// the same constraints assembled from the psi/omega data of the generators
// (translation-invariant route used for cross-validation)
MatP psi_omega_constraints(const SubspaceA& a, int chart);

// chart-restricted linear forms: for each basis pair, the coefficients of
// du^1..du^n in p^{ab} with u^chart = 1, du^chart = 0 (chart is 0-based)
std::vector<VecP> plucker_linear_forms(const PluckerBasis& pb, int chart, const TablePtr& tab);

}  // namespace hamop
