#pragma once

// Dense semidefinite feasibility: given hermitian blocks G_i(s) affine in a
// real parameter vector s, maximize t subject to G_i(s) >= t*I via a
// short-step log-barrier Newton method. Infeasibility is detected through
// the dual objective; the dual blocks Z_i are reported for independent
// re-verification by the caller.

#include <vector>

#include "hsos/poly.hpp"

namespace hsos::sdp {

struct BlockProblem {
    // G_i(s) = C[i] + sum_k s_k * B[i][k]
    std::vector<CMatrix> C;
    std::vector<std::vector<CMatrix>> B;

    int blocks() const { return static_cast<int>(C.size()); }
    int params() const { return C.empty() ? 0 : static_cast<int>(B[0].size()); }
};

enum class Status { feasible, infeasible, unknown };

struct Solution {
    Status status = Status::unknown;
    Eigen::VectorXd s;
    double t = 0.0;            // achieved min-eigenvalue margin
    double dual_value = 0.0;   // approximate upper bound on the optimal t
    std::vector<CMatrix> Z;    // dual blocks (normalized to sum of traces 1)
    int newton_iterations = 0;
};

struct SolverOptions {
    double t_stop = 1e-4;      // stop early once this margin is certified
    double mu_min = 1e-9;
    int max_newton = 600;
    double feas_tol = 1e-9;    // t >= -feas_tol counts as feasible
    double infeas_tol = 1e-6;  // dual bound < -infeas_tol counts as infeasible
};

Solution maximize_margin(const BlockProblem& pb, const SolverOptions& opt = {});

}  // namespace hsos::sdp
