#include "hsos/ideal_geometry.hpp"

#include <functional>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace hsos {

DiamondSpec::DiamondSpec(CVector a_, CVector b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.size() != b.size()) throw std::invalid_argument("diamond points differ in dimension");
    if ((a - b).norm() <= 1e-12)
        throw std::invalid_argument("diamond spec requires a != b");
}

DegenerateSpec::DegenerateSpec(CVector a_, CMatrix U_) : a(std::move(a_)), U(std::move(U_)) {
    if (U.rows() != U.cols() || U.rows() != a.size())
        throw std::invalid_argument("degenerate spec dimension mismatch");
    double nrm = U.norm();
    if (nrm == 0.0) throw std::invalid_argument("U must be nonzero");
    if ((U - U.adjoint()).norm() > 1e-12 * nrm)
        throw std::invalid_argument("U must be hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(U);
    if (es.eigenvalues().minCoeff() < -1e-10 * nrm)
        throw std::invalid_argument("U must be positive semidefinite");
}

MembershipResult in_diamond(const HermPoly& f, const DiamondSpec& spec, double tol) {
    if (f.vars() != spec.a.size()) throw std::invalid_argument("dimension mismatch");
    CVector ac = spec.a.conjugate(), bc = spec.b.conjugate();
    double r = 0.0;
    r = std::max(r, std::abs(f.eval_pair(spec.a, ac)));
    r = std::max(r, std::abs(f.eval_pair(spec.b, bc)));
    r = std::max(r, std::abs(f.eval_pair(spec.a, bc)));
    r = std::max(r, std::abs(f.eval_pair(spec.b, ac)));
    return {r <= tol, r};
}

MembershipResult in_degenerate(const HermPoly& f, const DegenerateSpec& spec, double tol) {
    if (f.vars() != spec.a.size()) throw std::invalid_argument("dimension mismatch");
    double unorm = spec.U.norm();
    Jet2 jet = f.jet2(spec.a);
    double r = std::abs(jet.value);
    r = std::max(r, (spec.U * jet.grad_holo).norm() / unorm);
    r = std::max(r, (spec.U.conjugate() * jet.grad_anti).norm() / unorm);
    r = std::max(r, std::abs((spec.U * jet.levi).trace()) / unorm);
    return {r <= tol, r};
}

std::vector<HermPoly> degenerate_generators(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("rank r out of range");
    std::vector<HermPoly> gens;
    auto z = [&](int j) { return HermPoly::variable(n, j); };
    auto zb = [&](int j) { return HermPoly::conj_variable(n, j); };
    for (int j = 0; j < r; ++j)
        for (int k = j; k < r; ++k) gens.push_back(z(j) * z(k));
    for (int j = 0; j < r; ++j)
        for (int k = j; k < r; ++k) gens.push_back(zb(j) * zb(k));
    for (int j = 0; j < r; ++j)
        for (int k = j + 1; k < r; ++k) {
            gens.push_back(z(j) * zb(k));
            gens.push_back(z(k) * zb(j));
        }
    for (int j = 0; j + 1 < r; ++j)
        gens.push_back(z(j) * zb(j) - z(j + 1) * zb(j + 1));
    for (int j = r; j < n; ++j) {
        gens.push_back(z(j));
        gens.push_back(zb(j));
    }
    return gens;
}

// ---------------------------------------------------------------------------
// witness search

namespace {

using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

// Damped Gauss-Newton with a numerical Jacobian. Good enough for the tiny
// square-ish systems produced by the witness conditions.
bool levenberg_marquardt(const ResidualFn& fn, Eigen::VectorXd& x, int max_iter,
                         double tol) {
    double lambda = 1e-3;
    Eigen::VectorXd r = fn(x);
    for (int it = 0; it < max_iter; ++it) {
        if (r.lpNorm<Eigen::Infinity>() < tol) return true;
        const double h = 1e-7;
        Eigen::MatrixXd J(r.size(), x.size());
        for (int k = 0; k < x.size(); ++k) {
            Eigen::VectorXd xp = x, xm = x;
            xp[k] += h;
            xm[k] -= h;
            J.col(k) = (fn(xp) - fn(xm)) / (2 * h);
        }
        Eigen::MatrixXd A = J.transpose() * J;
        Eigen::VectorXd g = J.transpose() * r;
        bool stepped = false;
        for (int tries = 0; tries < 12; ++tries) {
            Eigen::MatrixXd Ad = A;
            Ad.diagonal().array() += lambda;
            Eigen::VectorXd dx = Ad.ldlt().solve(-g);
            Eigen::VectorXd rn = fn(x + dx);
            if (rn.squaredNorm() < r.squaredNorm()) {
                x += dx;
                r = rn;
                lambda = std::max(lambda * 0.3, 1e-12);
                stepped = true;
                break;
            }
            lambda *= 10;
        }
        if (!stepped) break;
    }
    return r.lpNorm<Eigen::Infinity>() < tol;
}

CVector unpack_complex(const Eigen::VectorXd& x, int offset, int n) {
    CVector v(n);
    for (int j = 0; j < n; ++j) v[j] = Complex(x[offset + 2 * j], x[offset + 2 * j + 1]);
    return v;
}

double witness_residual_diamond(const std::vector<HermPoly>& gens, const DiamondSpec& s) {
    double r = 0.0;
    for (auto& g : gens) r = std::max(r, in_diamond(g, s, 0.0).residual);
    return r;
}

double witness_residual_degenerate(const std::vector<HermPoly>& gens, const DegenerateSpec& s) {
    double r = 0.0;
    for (auto& g : gens) r = std::max(r, in_degenerate(g, s, 0.0).residual);
    return r;
}

}  // namespace

GWitness g_witness_search(const std::vector<HermPoly>& gens, const WitnessConfig& cfg) {
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    int n = gens[0].vars();
    for (auto& g : gens)
        if (g.vars() != n) throw std::invalid_argument("generators disagree on variable count");

    GWitness result;
    result.seed = cfg.seed;

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unif(-cfg.box, cfg.box);

    // Stacked residuals of the four diamond substitutions over all generators.
    auto diamond_fn = [&](const Eigen::VectorXd& x) {
        CVector a = unpack_complex(x, 0, n), b = unpack_complex(x, 2 * n, n);
        CVector ac = a.conjugate(), bc = b.conjugate();
        Eigen::VectorXd r(8 * static_cast<int>(gens.size()));
        int i = 0;
        for (auto& g : gens) {
            for (Complex v : {g.eval_pair(a, ac), g.eval_pair(b, bc), g.eval_pair(a, bc),
                              g.eval_pair(b, ac)}) {
                r[i++] = v.real();
                r[i++] = v.imag();
            }
        }
        return r;
    };

    bool saw_collapse = false;
    for (int s = 0; s < cfg.starts; ++s) {
        Eigen::VectorXd x(4 * n);
        for (int k = 0; k < x.size(); ++k) x[k] = unif(rng);
        if (!levenberg_marquardt(diamond_fn, x, cfg.max_iterations, cfg.tol / 10)) continue;
        CVector a = unpack_complex(x, 0, n), b = unpack_complex(x, 2 * n, n);
        if ((a - b).norm() < cfg.pair_collapse) {
            // degeneration a -> b belongs to the J(a,U) family
            saw_collapse = true;
            continue;
        }
        DiamondSpec spec(a, b);
        double res = witness_residual_diamond(gens, spec);
        if (res <= cfg.tol) {
            result.kind = GWitness::Kind::diamond;
            result.diamond = spec;
            result.residual = res;
            return result;
        }
    }
    (void)saw_collapse;

    // Degenerate search: U = W^* W with W of rank 1..n, plus a
    // normalization residual ||W||^2 = 1 to exclude W = 0.
    for (int rank = 1; rank <= n; ++rank) {
        auto degen_fn = [&](const Eigen::VectorXd& x) {
            CVector a = unpack_complex(x, 0, n);
            CMatrix W(rank, n);
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < n; ++j) {
                    int base = 2 * n + 2 * (i * n + j);
                    W(i, j) = Complex(x[base], x[base + 1]);
                }
            CMatrix U = W.adjoint() * W;
            std::vector<double> vals;
            vals.reserve(gens.size() * (4 * n + 4) + 1);
            for (auto& g : gens) {
                Jet2 jet = g.jet2(a);
                vals.push_back(jet.value.real());
                vals.push_back(jet.value.imag());
                CVector gh = U * jet.grad_holo;
                CVector ga = U.conjugate() * jet.grad_anti;
                for (int j = 0; j < n; ++j) {
                    vals.push_back(gh[j].real());
                    vals.push_back(gh[j].imag());
                    vals.push_back(ga[j].real());
                    vals.push_back(ga[j].imag());
                }
                Complex tr = (U * jet.levi).trace();
                vals.push_back(tr.real());
                vals.push_back(tr.imag());
            }
            vals.push_back(W.squaredNorm() - 1.0);
            return Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<int>(vals.size())).eval();
        };
        for (int s = 0; s < cfg.starts; ++s) {
            Eigen::VectorXd x(2 * n + 2 * rank * n);
            for (int k = 0; k < x.size(); ++k) x[k] = unif(rng);
            if (!levenberg_marquardt(degen_fn, x, cfg.max_iterations, cfg.tol / 10)) continue;
            CVector a = unpack_complex(x, 0, n);
            CMatrix W(rank, n);
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < n; ++j) {
                    int base = 2 * n + 2 * (i * n + j);
                    W(i, j) = Complex(x[base], x[base + 1]);
                }
            CMatrix U = W.adjoint() * W;
            if (U.norm() < 1e-8) continue;
            DegenerateSpec spec(a, U);
            double res = witness_residual_degenerate(gens, spec);
            if (res <= cfg.tol) {
                result.kind = GWitness::Kind::degenerate;
                result.degenerate = spec;
                result.residual = res;
                return result;
            }
        }
    }

    return result;  // kind == none: heuristic negative
}

DegenerateSpec disc_to_degenerate(const std::vector<std::vector<Complex>>& phi) {
    int n = static_cast<int>(phi.size());
    if (n == 0) throw std::invalid_argument("empty disc parametrization");
    CVector a(n);
    Eigen::RowVectorXcd u(n);
    for (int j = 0; j < n; ++j) {
        a[j] = phi[j].empty() ? Complex(0.0) : phi[j][0];
        u[j] = phi[j].size() > 1 ? phi[j][1] : Complex(0.0);
    }
    if (u.norm() == 0.0)
        throw std::invalid_argument("disc is not immersed at its center (zero linear term)");
    CMatrix U = u.adjoint() * u;  // rank-one psd
    return DegenerateSpec(std::move(a), std::move(U));
}

}  // namespace hsos
