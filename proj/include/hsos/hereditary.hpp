#pragma once

// Hereditary functional calculus psi_T on commuting matrix tuples: the
// monomial z^alpha zbar^beta maps to T^{*beta} T^{alpha} (all adjoints to
// the left). Normality / hyponormality diagnostics, the Halmos-Bram-Ito
// block test, kernel computation, and the explicit non-normal witness
// tuples for I(a,b) and J(a,U).
//
// Sign convention, fixed once: the self-commutator is [T*,T] = T^adj T -
// T T^adj, so the unilateral shift has [S*,S] >= 0 (hyponormal) and the
// lower 2x2 shift has [T*,T] = diag(1,-1) (not hyponormal).

#include <vector>

#include "hsos/ideal_geometry.hpp"
#include "hsos/poly.hpp"

namespace hsos {

class MatrixTuple {
public:
    // Throws if any pairwise commutator exceeds comm_tol*(1+|Tj||Tk|).
    explicit MatrixTuple(std::vector<CMatrix> mats, double comm_tol = 1e-10);

    int vars() const { return static_cast<int>(mats_.size()); }
    int dim() const { return static_cast<int>(mats_[0].rows()); }
    const CMatrix& mat(int j) const { return mats_[j]; }
    const std::vector<CMatrix>& mats() const { return mats_; }
    double comm_tol() const { return comm_tol_; }
    double max_comm_residual() const;

    // T^alpha = prod_j T_j^{alpha_j} (order immaterial, the tuple commutes).
    CMatrix power(const std::vector<int>& alpha) const;

private:
    std::vector<CMatrix> mats_;
    double comm_tol_;
};

CMatrix hereditary_eval(const HermPoly& f, const MatrixTuple& T);

struct TupleReport {
    bool commuting;
    bool normal;
    bool hyponormal;
    double max_comm_residual;
    double min_selfcommutator_eig;
};

TupleReport tuple_diagnostics(const MatrixTuple& T, double tol);

struct HbiResult {
    bool psd;
    double min_eig;
};

// Halmos-Bram-Ito block matrix with block (alpha,beta) = T^{*beta} T^{alpha}
// over all multi-indices of total degree <= degree.
HbiResult hbi_check(const MatrixTuple& T, int degree, int size_cap = 4096);

struct KernelBasis {
    int degree;
    std::vector<Monomial> monomials;
    std::vector<CVector> basis;  // coefficient vectors over `monomials`
    double rank_tol;
};

KernelBasis kernel_up_to_degree(const MatrixTuple& T, int degree, double rank_tol = 1e-9,
                                int size_cap = 4096);

// Coefficient vector -> polynomial, for feeding kernel elements onwards.
HermPoly kernel_polynomial(const KernelBasis& kb, int i, int n);

// 2x2 tuple with T_j u = a_j u, T_j v = b_j v for the fixed pair
// u = (1,0), v = (1,1)/sqrt(2); annihilates I(a,b), non-normal for a != b.
MatrixTuple witness_diamond_tuple(const CVector& a, const CVector& b);

// (r+1)x(r+1) block tuple T_j = [[a_j, 0],[w_j, a_j I_r]], annihilating
// J(a, W^* W). W is r x n with nonzero column span.
MatrixTuple witness_degenerate_tuple(const CVector& a, const CMatrix& W);

// N x N leading section of pi - S pi - pi S^* for the unilateral shift S and
// the rank-one projection pi onto e_0.
Eigen::MatrixXd shift_commutator(int N);

}  // namespace hsos
