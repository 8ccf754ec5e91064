#include "hsos/sdp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace hsos::sdp {

namespace {

double min_eig(const CMatrix& M) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(M);
    return es.eigenvalues().minCoeff();
}

// barrier objective t + mu * sum_i log det(G_i(s) - t I); -inf outside the cone
struct Eval {
    bool interior = false;
    double value = 0.0;
    std::vector<CMatrix> slack;  // G_i - t I
};

Eval evaluate(const BlockProblem& pb, const Eigen::VectorXd& s, double t, double mu) {
    Eval ev;
    ev.value = t;
    ev.slack.resize(pb.blocks());
    for (int i = 0; i < pb.blocks(); ++i) {
        CMatrix S = pb.C[i];
        for (int k = 0; k < pb.params(); ++k) S += s[k] * pb.B[i][k];
        S -= t * CMatrix::Identity(S.rows(), S.cols());
        S = 0.5 * (S + S.adjoint().eval());
        Eigen::LLT<CMatrix> llt(S);
        if (llt.info() != Eigen::Success) return ev;
        double logdet = 0.0;
        for (int r = 0; r < S.rows(); ++r)
            logdet += 2.0 * std::log(llt.matrixL()(r, r).real());
        ev.value += mu * logdet;
        ev.slack[i] = std::move(S);
    }
    ev.interior = true;
    return ev;
}

}  // namespace

Solution maximize_margin(const BlockProblem& pb, const SolverOptions& opt) {
    Solution sol;
    const int p = pb.params();
    const int nb = pb.blocks();
    sol.s = Eigen::VectorXd::Zero(p);

    if (nb == 0) {
        sol.status = Status::feasible;
        sol.t = std::numeric_limits<double>::infinity();
        return sol;
    }

    // strictly interior start: t below the smallest eigenvalue at s = 0
    double t = std::numeric_limits<double>::infinity();
    for (int i = 0; i < nb; ++i) t = std::min(t, min_eig(pb.C[i]));
    t -= 1.0;

    double mu = 1.0;
    int iters = 0;
    std::vector<CMatrix> inv(nb);

    while (true) {
        // Newton iterations at fixed mu
        for (int step = 0; step < 60 && iters < opt.max_newton; ++step, ++iters) {
            Eval ev = evaluate(pb, sol.s, t, mu);
            if (!ev.interior) break;  // should not happen
            for (int i = 0; i < nb; ++i)
                inv[i] = ev.slack[i].llt().solve(
                    CMatrix::Identity(ev.slack[i].rows(), ev.slack[i].cols()));

            // gradient and Hessian over (s, t)
            Eigen::VectorXd grad = Eigen::VectorXd::Zero(p + 1);
            Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(p + 1, p + 1);
            std::vector<std::vector<CMatrix>> M(nb);
            for (int i = 0; i < nb; ++i) {
                M[i].resize(p);
                for (int k = 0; k < p; ++k) {
                    M[i][k] = inv[i] * pb.B[i][k];
                    grad[k] += mu * M[i][k].trace().real();
                }
                grad[p] += 1.0;  // d t / d t
            }
            double tr_inv = 0.0, tr_inv2 = 0.0;
            for (int i = 0; i < nb; ++i) {
                tr_inv += inv[i].trace().real();
                tr_inv2 += (inv[i] * inv[i]).trace().real();
            }
            grad[p] = 1.0 - mu * tr_inv;
            for (int i = 0; i < nb; ++i)
                for (int k = 0; k < p; ++k) {
                    for (int l = k; l < p; ++l) {
                        double v = -mu * (M[i][k] * M[i][l]).trace().real();
                        hess(k, l) += v;
                        if (l != k) hess(l, k) += v;
                    }
                    double v = mu * (inv[i] * M[i][k]).trace().real();
                    hess(k, p) += v;
                    hess(p, k) += v;
                }
            hess(p, p) = -mu * tr_inv2;

            // solve for ascent direction; regularize the (concave) Hessian
            Eigen::MatrixXd H = -hess;
            double reg = 1e-12 * std::max(1.0, H.diagonal().cwiseAbs().maxCoeff());
            H.diagonal().array() += reg;
            Eigen::VectorXd dir = H.ldlt().solve(grad);
            double decrement = grad.dot(dir);
            if (!(decrement > 0) || !dir.allFinite()) break;
            if (decrement < 1e-12) break;

            double rho = 1.0;
            // the feasible set may be unbounded in scale; cap the step so t
            // cannot overshoot far past the certified-margin threshold
            if (dir[p] > 0) rho = std::min(rho, (opt.t_stop + 1.0 - t) / dir[p]);
            bool moved = false;
            for (int bt = 0; bt < 50; ++bt) {
                Eigen::VectorXd sn = sol.s + rho * dir.head(p);
                double tn = t + rho * dir[p];
                Eval evn = evaluate(pb, sn, tn, mu);
                if (evn.interior && evn.value > ev.value + 1e-14) {
                    sol.s = sn;
                    t = tn;
                    moved = true;
                    break;
                }
                rho *= 0.5;
            }
            if (!moved) break;
            if (t > opt.t_stop) break;  // margin certified; don't let the scale run away
            if (decrement < 1e-10) break;
        }

        if (t > opt.t_stop) break;  // clearly feasible, no need to keep centering
        if (mu < opt.mu_min || iters >= opt.max_newton) break;
        mu *= 0.2;
    }

    sol.newton_iterations = iters;
    sol.t = t;

    // dual estimate Z_i = mu * S_i^{-1}, normalized to sum of traces 1
    Eval ev = evaluate(pb, sol.s, t, std::max(mu, opt.mu_min));
    if (ev.interior) {
        double tr = 0.0;
        sol.Z.resize(nb);
        for (int i = 0; i < nb; ++i) {
            sol.Z[i] = ev.slack[i].llt().solve(
                CMatrix::Identity(ev.slack[i].rows(), ev.slack[i].cols()));
            tr += sol.Z[i].trace().real();
        }
        double dv = 0.0;
        for (int i = 0; i < nb; ++i) {
            sol.Z[i] /= tr;
            dv += (sol.Z[i] * pb.C[i]).trace().real();
        }
        sol.dual_value = dv;
    } else {
        sol.dual_value = t;
    }

    if (t >= -opt.feas_tol)
        sol.status = Status::feasible;
    else if (sol.dual_value < -opt.infeas_tol)
        sol.status = Status::infeasible;
    else
        sol.status = Status::unknown;
    return sol;
}

}  // namespace hsos::sdp
