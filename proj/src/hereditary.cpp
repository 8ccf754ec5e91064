#include "hsos/hereditary.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace hsos {

MatrixTuple::MatrixTuple(std::vector<CMatrix> mats, double comm_tol)
    : mats_(std::move(mats)), comm_tol_(comm_tol) {
    if (mats_.empty()) throw std::invalid_argument("empty tuple");
    int d = static_cast<int>(mats_[0].rows());
    for (auto& M : mats_)
        if (M.rows() != d || M.cols() != d)
            throw std::invalid_argument("tuple matrices must be square and equal-sized");
    for (size_t j = 0; j < mats_.size(); ++j)
        for (size_t k = j + 1; k < mats_.size(); ++k) {
            double comm = (mats_[j] * mats_[k] - mats_[k] * mats_[j]).norm();
            double scale = 1.0 + mats_[j].norm() * mats_[k].norm();
            if (comm > comm_tol_ * scale)
                throw std::invalid_argument("tuple does not commute within tolerance");
        }
}

double MatrixTuple::max_comm_residual() const {
    double r = 0.0;
    for (size_t j = 0; j < mats_.size(); ++j)
        for (size_t k = j + 1; k < mats_.size(); ++k)
            r = std::max(r, (mats_[j] * mats_[k] - mats_[k] * mats_[j]).norm());
    return r;
}

CMatrix MatrixTuple::power(const std::vector<int>& alpha) const {
    int d = dim();
    CMatrix P = CMatrix::Identity(d, d);
    for (size_t j = 0; j < mats_.size(); ++j)
        for (int e = 0; e < alpha[j]; ++e) P = P * mats_[j];
    return P;
}

CMatrix hereditary_eval(const HermPoly& f, const MatrixTuple& T) {
    if (f.vars() != T.vars()) throw std::invalid_argument("dimension mismatch");
    int d = T.dim();
    CMatrix R = CMatrix::Zero(d, d);
    for (auto& [m, c] : f.terms())
        R += c * (T.power(m.beta).adjoint() * T.power(m.alpha));
    return R;
}

TupleReport tuple_diagnostics(const MatrixTuple& T, double tol) {
    TupleReport rep;
    rep.max_comm_residual = T.max_comm_residual();
    rep.commuting = true;  // enforced at construction
    rep.normal = true;
    rep.hyponormal = true;
    rep.min_selfcommutator_eig = 0.0;
    bool first = true;
    for (auto& M : T.mats()) {
        CMatrix comm = M.adjoint() * M - M * M.adjoint();
        double scale = 1.0 + M.norm() * M.norm();
        if (comm.norm() > tol * scale) rep.normal = false;
        Eigen::SelfAdjointEigenSolver<CMatrix> es(comm);
        double mn = es.eigenvalues().minCoeff();
        if (first || mn < rep.min_selfcommutator_eig) rep.min_selfcommutator_eig = mn;
        first = false;
        if (mn < -tol) rep.hyponormal = false;
    }
    return rep;
}

HbiResult hbi_check(const MatrixTuple& T, int degree, int size_cap) {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    int n = T.vars(), d = T.dim();
    auto holo = holo_monomials_up_to(n, degree);
    int blocks = static_cast<int>(holo.size());
    if (d * blocks > size_cap)
        throw std::invalid_argument("HBI block matrix exceeds size cap");
    // block (i,j) = T^{*alpha_j} T^{alpha_i}: the adjoint power comes from
    // the column index. Caution: the transposed arrangement (adjoint from
    // the row) is a Gram matrix and trivially psd; this one is not.
    std::vector<CMatrix> pw(blocks);
    for (int i = 0; i < blocks; ++i) pw[i] = T.power(holo[i].alpha);
    CMatrix B(d * blocks, d * blocks);
    for (int i = 0; i < blocks; ++i)
        for (int j = 0; j < blocks; ++j)
            B.block(i * d, j * d, d, d) = pw[j].adjoint() * pw[i];
    // note B is exactly hermitian up to roundoff; symmetrize before solving
    CMatrix H = 0.5 * (B + B.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
    double mn = es.eigenvalues().minCoeff();
    double scale = std::max(1.0, H.norm());
    return {mn >= -1e-10 * scale, mn};
}

KernelBasis kernel_up_to_degree(const MatrixTuple& T, int degree, double rank_tol,
                                int size_cap) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    int n = T.vars(), d = T.dim();
    auto monos = monomials_up_to(n, degree);
    int cols = static_cast<int>(monos.size());
    if (d * d > size_cap || cols > size_cap)
        throw std::invalid_argument("kernel computation exceeds size cap");
    CMatrix A(d * d, cols);
    for (int c = 0; c < cols; ++c) {
        CMatrix M = T.power(monos[c].beta).adjoint() * T.power(monos[c].alpha);
        // column-major flatten
        A.col(c) = Eigen::Map<CVector>(M.data(), d * d);
    }
    Eigen::JacobiSVD<CMatrix> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double thresh = rank_tol * (sv.size() > 0 ? sv[0] : 0.0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > thresh) ++rank;
    KernelBasis kb;
    kb.degree = degree;
    kb.monomials = monos;
    kb.rank_tol = rank_tol;
    for (int i = rank; i < cols; ++i) kb.basis.push_back(svd.matrixV().col(i));
    return kb;
}

HermPoly kernel_polynomial(const KernelBasis& kb, int i, int n) {
    if (i < 0 || i >= static_cast<int>(kb.basis.size()))
        throw std::invalid_argument("kernel basis index out of range");
    HermPoly f(n);
    for (size_t c = 0; c < kb.monomials.size(); ++c) {
        Complex v = kb.basis[i][static_cast<int>(c)];
        if (std::abs(v) > 1e-14) f.add_term(kb.monomials[c], v);
    }
    return f;
}

MatrixTuple witness_diamond_tuple(const CVector& a, const CVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    if ((a - b).norm() <= 1e-12) throw std::invalid_argument("requires a != b");
    int n = static_cast<int>(a.size());
    // T_j [u v] = [a_j u, b_j v] with u = (1,0), v = (1,1); the scaling of v
    // does not change T_j. Closed form: T_j = [[a_j, b_j - a_j], [0, b_j]].
    std::vector<CMatrix> mats(n);
    for (int j = 0; j < n; ++j) {
        CMatrix M(2, 2);
        M << a[j], b[j] - a[j], 0.0, b[j];
        mats[j] = M;
    }
    return MatrixTuple(std::move(mats), 1e-10);
}

MatrixTuple witness_degenerate_tuple(const CVector& a, const CMatrix& W) {
    int n = static_cast<int>(a.size());
    if (W.cols() != n) throw std::invalid_argument("W must have n columns");
    if (W.norm() == 0.0) throw std::invalid_argument("W must be nonzero");
    int r = static_cast<int>(W.rows());
    std::vector<CMatrix> mats(n);
    for (int j = 0; j < n; ++j) {
        CMatrix M = CMatrix::Zero(r + 1, r + 1);
        M(0, 0) = a[j];
        for (int i = 0; i < r; ++i) {
            M(i + 1, 0) = W(i, j);
            M(i + 1, i + 1) = a[j];
        }
        mats[j] = M;
    }
    return MatrixTuple(std::move(mats), 1e-10);
}

Eigen::MatrixXd shift_commutator(int N) {
    if (N < 2) throw std::invalid_argument("N must be >= 2");
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
    M(0, 0) = 1.0;   // pi
    M(1, 0) = -1.0;  // -S pi
    M(0, 1) = -1.0;  // -pi S^*
    return M;
}

}  // namespace hsos
