#include "hsos/certify.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace hsos {

namespace {

Complex imag_unit() { return Complex(0.0, 1.0); }

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Self-adjoint real coefficient basis of degree <= d: e_mu for mu = mu^*,
// and (mu + mu^*), i(mu - mu^*) for conjugate pairs.
std::vector<HermPoly> selfadjoint_basis(int n, int d) {
    std::vector<HermPoly> basis;
    MonomialOrder less;
    for (auto& m : monomials_up_to(n, d)) {
        Monomial mc = m.conjugate();
        if (m == mc) {
            basis.push_back(HermPoly::term(n, m, 1.0));
        } else if (less(m, mc)) {
            basis.push_back(HermPoly::term(n, m, 1.0) + HermPoly::term(n, mc, 1.0));
            basis.push_back(HermPoly::term(n, m, imag_unit()) +
                            HermPoly::term(n, mc, -imag_unit()));
        }
    }
    return basis;
}

// Close a generator list under the involution, as self-adjoint combinations
// g + g^* and i(g - g^*).
std::vector<HermPoly> selfadjoint_closure(const std::vector<HermPoly>& gens) {
    std::vector<HermPoly> out;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.is_self_adjoint(0.0)) {
            out.push_back(g);
        } else {
            HermPoly u = g + g.star();
            HermPoly v = (g - g.star()) * imag_unit();
            if (!u.is_zero()) out.push_back(u);
            if (!v.is_zero()) out.push_back(v);
        }
    }
    return out;
}

// One Gram block: weight * (m^dag G m) with m the listed holomorphic basis.
struct BlockSpec {
    HermPoly weight;
    std::vector<Monomial> basis;
};

struct FreeSpec {
    HermPoly direction;  // polynomial contributed per unit of the parameter
    int generator = -1;  // which (closed) generator, for multiplier rebuild
    int basis_index = -1;
};

HermPoly gram_entry_poly(int n, const HermPoly& weight, const Monomial& row,
                         const Monomial& col) {
    // conj(m_row) * m_col = z^{col.alpha} zbar^{row.alpha}
    Monomial m(col.alpha, row.alpha);
    return weight * HermPoly::term(n, m, 1.0);
}

struct Assembled {
    std::vector<Monomial> support;
    std::map<Monomial, int, MonomialOrder> index;
    Eigen::MatrixXd E;  // 2|support| x (gram params + free params)
    Eigen::VectorXd c;
    std::vector<BlockSpec> blocks;
    std::vector<int> block_offset;  // first gram param of each block
    std::vector<int> block_params;
    std::vector<FreeSpec> frees;
    int gram_total = 0;

    int total_params() const { return gram_total + static_cast<int>(frees.size()); }
};

void add_support(std::map<Monomial, int, MonomialOrder>& idx, const HermPoly& p) {
    for (auto& [m, c] : p.terms()) idx.emplace(m, 0);
}

// Hermitian basis matrices of a block, in the fixed parameter order:
// diagonals first is not required; we enumerate (p,p), then (p,q) re/im.
template <typename F>
void for_each_gram_param(int m, F&& fn) {
    for (int p = 0; p < m; ++p) fn(p, p, 0);
    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q) {
            fn(p, q, 1);  // real part direction
            fn(p, q, 2);  // imaginary part direction
        }
}

HermPoly gram_param_poly(int n, const BlockSpec& bs, int p, int q, int which) {
    if (which == 0) return gram_entry_poly(n, bs.weight, bs.basis[p], bs.basis[p]);
    HermPoly A = gram_entry_poly(n, bs.weight, bs.basis[p], bs.basis[q]);
    HermPoly B = gram_entry_poly(n, bs.weight, bs.basis[q], bs.basis[p]);
    if (which == 1) return A + B;
    return (A - B) * imag_unit();
}

CMatrix gram_param_matrix(int m, int p, int q, int which) {
    CMatrix H = CMatrix::Zero(m, m);
    if (which == 0) {
        H(p, p) = 1.0;
    } else if (which == 1) {
        H(p, q) = 1.0;
        H(q, p) = 1.0;
    } else {
        H(p, q) = imag_unit();
        H(q, p) = -imag_unit();
    }
    return H;
}

Assembled assemble(int n, const HermPoly& target, std::vector<BlockSpec> blocks,
                   std::vector<FreeSpec> frees) {
    Assembled as;
    as.blocks = std::move(blocks);
    as.frees = std::move(frees);

    add_support(as.index, target);
    std::vector<std::vector<HermPoly>> gram_polys(as.blocks.size());
    for (size_t i = 0; i < as.blocks.size(); ++i) {
        auto& bs = as.blocks[i];
        for_each_gram_param(static_cast<int>(bs.basis.size()), [&](int p, int q, int w) {
            gram_polys[i].push_back(gram_param_poly(n, bs, p, q, w));
            add_support(as.index, gram_polys[i].back());
        });
    }
    for (auto& fs : as.frees) add_support(as.index, fs.direction);

    int row = 0;
    for (auto& [m, id] : as.index) {
        id = row++;
        as.support.push_back(m);
    }
    int rows = 2 * row;

    as.block_offset.resize(as.blocks.size());
    as.block_params.resize(as.blocks.size());
    int col = 0;
    for (size_t i = 0; i < as.blocks.size(); ++i) {
        as.block_offset[i] = col;
        as.block_params[i] = static_cast<int>(gram_polys[i].size());
        col += as.block_params[i];
    }
    as.gram_total = col;
    int cols = col + static_cast<int>(as.frees.size());

    as.E = Eigen::MatrixXd::Zero(rows, cols);
    auto fill_col = [&](int c_idx, const HermPoly& p) {
        for (auto& [m, v] : p.terms()) {
            int r = as.index.at(m);
            as.E(2 * r, c_idx) = v.real();
            as.E(2 * r + 1, c_idx) = v.imag();
        }
    };
    for (size_t i = 0; i < as.blocks.size(); ++i)
        for (size_t k = 0; k < gram_polys[i].size(); ++k)
            fill_col(as.block_offset[i] + static_cast<int>(k), gram_polys[i][k]);
    for (size_t k = 0; k < as.frees.size(); ++k)
        fill_col(as.gram_total + static_cast<int>(k), as.frees[k].direction);

    as.c = Eigen::VectorXd::Zero(rows);
    for (auto& [m, v] : target.terms()) {
        int r = as.index.at(m);
        as.c[2 * r] = v.real();
        as.c[2 * r + 1] = v.imag();
    }
    return as;
}

CMatrix extract_block(const Assembled& as, int i, const Eigen::VectorXd& x) {
    int m = static_cast<int>(as.blocks[i].basis.size());
    CMatrix G = CMatrix::Zero(m, m);
    int k = as.block_offset[i];
    for_each_gram_param(m, [&](int p, int q, int w) {
        double v = x[k++];
        if (w == 0)
            G(p, p) += v;
        else if (w == 1) {
            G(p, q) += v;
            G(q, p) += v;
        } else {
            G(p, q) += v * imag_unit();
            G(q, p) -= v * imag_unit();
        }
    });
    return G;
}

struct SolveOutcome {
    sdp::Status status;
    Eigen::VectorXd x;  // full parameter vector at the solution
    double margin = 0.0;
    double dual_value = 0.0;
    std::vector<CMatrix> Z;
    Eigen::MatrixXd null_basis;
    Eigen::VectorXd x0;
    bool linear_feasible = true;
    Eigen::VectorXd linear_residual;
};

SolveOutcome solve_assembled(const Assembled& as, const sdp::SolverOptions& sopt) {
    SolveOutcome out;
    double cscale = std::max(1.0, as.c.lpNorm<Eigen::Infinity>());

    Eigen::BDCSVD<Eigen::MatrixXd> svd(as.E, Eigen::ComputeThinU | Eigen::ComputeFullV);
    out.x0 = svd.solve(as.c);
    out.linear_residual = as.E * out.x0 - as.c;
    if (out.linear_residual.lpNorm<Eigen::Infinity>() > 1e-9 * cscale) {
        out.linear_feasible = false;
        out.status = sdp::Status::infeasible;
        return out;
    }

    const auto& sv = svd.singularValues();
    double thresh = (sv.size() ? sv[0] : 0.0) * 1e-11;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > thresh) ++rank;
    int p = static_cast<int>(as.E.cols()) - rank;
    out.null_basis = svd.matrixV().rightCols(p);

    sdp::BlockProblem pb;
    pb.C.resize(as.blocks.size());
    pb.B.resize(as.blocks.size());
    for (size_t i = 0; i < as.blocks.size(); ++i) {
        pb.C[i] = extract_block(as, static_cast<int>(i), out.x0);
        pb.B[i].resize(p);
        for (int k = 0; k < p; ++k)
            pb.B[i][k] =
                extract_block(as, static_cast<int>(i), out.null_basis.col(k));
    }

    sdp::Solution sol = sdp::maximize_margin(pb, sopt);
    out.status = sol.status;
    out.margin = sol.t;
    out.dual_value = sol.dual_value;
    out.Z = sol.Z;
    out.x = out.x0 + out.null_basis * sol.s;
    return out;
}

// Build the separating functional from the dual blocks, orthogonalize it
// against the free columns, and lift it back to matrices per block.
std::optional<SdpDualEvidence> build_dual_evidence(const Assembled& as,
                                                   const SolveOutcome& out,
                                                   double dual_tol) {
    int rows = static_cast<int>(as.E.rows());
    Eigen::VectorXd y;
    if (!out.linear_feasible) {
        // coefficient matching itself is unsolvable; the least-squares
        // residual is orthogonal to every column
        y = -out.linear_residual;
    } else {
        Eigen::VectorXd d = Eigen::VectorXd::Zero(as.E.cols());
        for (size_t i = 0; i < as.blocks.size(); ++i) {
            int m = static_cast<int>(as.blocks[i].basis.size());
            int k = as.block_offset[i];
            for_each_gram_param(m, [&](int p, int q, int w) {
                d[k++] = (out.Z[i] * gram_param_matrix(m, p, q, w)).trace().real();
            });
        }
        Eigen::BDCSVD<Eigen::MatrixXd> svd(as.E.transpose(),
                                           Eigen::ComputeThinU | Eigen::ComputeThinV);
        y = svd.solve(d);
    }

    // exact orthogonality against multiplier columns
    if (!as.frees.empty()) {
        Eigen::MatrixXd F = as.E.rightCols(static_cast<int>(as.frees.size()));
        Eigen::MatrixXd FtF = F.transpose() * F;
        Eigen::VectorXd proj = F * FtF.ldlt().solve(F.transpose() * y);
        y -= proj;
    }
    if (y.lpNorm<Eigen::Infinity>() == 0.0) return std::nullopt;

    auto phi = [&](const HermPoly& p) {
        double s = 0.0;
        for (auto& [m, v] : p.terms()) {
            auto it = as.index.find(m);
            if (it == as.index.end()) return std::numeric_limits<double>::quiet_NaN();
            s += y[2 * it->second] * v.real() + y[2 * it->second + 1] * v.imag();
        }
        return s;
    };

    int n = as.support.empty() ? 1 : as.support[0].vars();
    SdpDualEvidence ev;
    double trace_sum = 0.0;
    ev.lifted.resize(as.blocks.size());
    for (size_t i = 0; i < as.blocks.size(); ++i) {
        int m = static_cast<int>(as.blocks[i].basis.size());
        CMatrix W = CMatrix::Zero(m, m);
        for (int p = 0; p < m; ++p) {
            W(p, p) = phi(gram_param_poly(n, as.blocks[i], p, p, 0));
            for (int q = p + 1; q < m; ++q) {
                double re = 0.5 * phi(gram_param_poly(n, as.blocks[i], p, q, 1));
                double im = 0.5 * phi(gram_param_poly(n, as.blocks[i], p, q, 2));
                W(p, q) = Complex(re, im);
                W(q, p) = Complex(re, -im);
            }
        }
        trace_sum += W.trace().real();
        ev.lifted[i] = W;
    }
    double scale = (trace_sum > 1e-300) ? trace_sum : y.norm();
    if (scale <= 0) return std::nullopt;
    y /= scale;
    for (auto& W : ev.lifted) W /= scale;

    ev.min_lifted_eig = 0.0;
    for (auto& W : ev.lifted) {
        if (W.rows() == 0) continue;
        Eigen::SelfAdjointEigenSolver<CMatrix> es(W);
        ev.min_lifted_eig = std::min(ev.min_lifted_eig, es.eigenvalues().minCoeff());
    }
    ev.max_free_residual = 0.0;
    for (size_t k = 0; k < as.frees.size(); ++k)
        ev.max_free_residual = std::max(
            ev.max_free_residual,
            std::abs(y.dot(as.E.col(as.gram_total + static_cast<int>(k)))));

    ev.value_on_target = y.dot(as.c);
    ev.monomials = as.support;
    ev.weights.resize(as.support.size());
    for (size_t i = 0; i < as.support.size(); ++i)
        ev.weights[i] = Complex(y[2 * i], y[2 * i + 1]);

    // the certificate must re-verify: psd lifts, orthogonality, negativity
    if (ev.min_lifted_eig < -1e-8) return std::nullopt;
    if (ev.max_free_residual > 1e-8) return std::nullopt;
    if (!(ev.value_on_target < -dual_tol)) return std::nullopt;
    return ev;
}

std::vector<HermPoly> rebuild_multipliers(const Assembled& as,
                                          const std::vector<HermPoly>& closed_gens,
                                          const std::vector<std::vector<HermPoly>>& h_bases,
                                          const Eigen::VectorXd& x) {
    std::vector<HermPoly> lambdas;
    int n = closed_gens.empty() ? 1 : closed_gens[0].vars();
    for (size_t j = 0; j < closed_gens.size(); ++j)
        lambdas.push_back(HermPoly(n));
    for (size_t k = 0; k < as.frees.size(); ++k) {
        const FreeSpec& fs = as.frees[k];
        double v = x[as.gram_total + static_cast<int>(k)];
        if (fs.generator >= 0 && v != 0.0)
            lambdas[fs.generator] =
                lambdas[fs.generator] + h_bases[fs.generator][fs.basis_index] * Complex(0.5 * v);
    }
    return lambdas;
}

}  // namespace

bool is_psd_shifted(const CMatrix& G, double psd_tol) {
    CMatrix S = 0.5 * (G + G.adjoint());
    S += psd_tol * std::max(1.0, S.norm()) * CMatrix::Identity(S.rows(), S.cols());
    Eigen::LDLT<CMatrix> ldlt(S);
    if (ldlt.info() != Eigen::Success) return false;
    return ldlt.isPositive();
}

double verify_certificate(const GramCertificate& cert, const HermPoly& f,
                          const std::vector<HermPoly>& gens) {
    int n = f.vars();
    HermPoly r = f;
    const std::vector<HermPoly>& gs = cert.generators.empty() ? gens : cert.generators;
    auto gram_expand = [&](const std::vector<Monomial>& basis, const CMatrix& G) {
        HermPoly p(n);
        int m = static_cast<int>(basis.size());
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                Complex g = G(a, b);
                if (g == Complex(0.0)) continue;
                p.add_term(Monomial(basis[b].alpha, basis[a].alpha), g);
            }
        return p;
    };
    if (cert.mode == CertMode::module) {
        for (size_t i = 0; i < cert.gram.size(); ++i) {
            HermPoly w = (i == 0) ? HermPoly::constant(n, 1.0) : gs[i - 1];
            r = r - w * gram_expand(cert.bases[i], cert.gram[i]);
        }
    } else {
        double sign = cert.archimedean_constant ? 1.0 : -1.0;
        r = r + gram_expand(cert.bases[0], cert.gram[0]) * Complex(sign);
        if (cert.archimedean_constant)
            r = r + HermPoly::constant(n, *cert.archimedean_constant);
        for (size_t j = 0; j < gs.size() && j < cert.multipliers.size(); ++j) {
            HermPoly t = cert.multipliers[j] * gs[j];
            r = r - t - t.star();
        }
    }
    return r.coeff_norm();
}

CertifyResult certify_sos(const HermPoly& f, const std::vector<HermPoly>& gens,
                          CertMode mode, int degree, const CertifyOptions& opts) {
    int n = f.vars();
    double fscale = 1.0 + f.coeff_norm();
    if (!f.is_self_adjoint(1e-12 * fscale))
        throw std::invalid_argument("certify_sos requires a self-adjoint target");
    if (degree < ceil_div(std::max(f.degree(), 0), 2))
        throw std::invalid_argument("degree below ceil(deg(f)/2)");

    std::vector<BlockSpec> blocks;
    std::vector<FreeSpec> frees;
    std::vector<HermPoly> closed;
    std::vector<std::vector<HermPoly>> h_bases;

    if (mode == CertMode::ideal) {
        blocks.push_back({HermPoly::constant(n, 1.0), holo_monomials_up_to(n, degree)});
        closed = selfadjoint_closure(gens);
        h_bases.resize(closed.size());
        for (size_t j = 0; j < closed.size(); ++j) {
            int dmult = std::max(0, 2 * degree - closed[j].degree());
            h_bases[j] = selfadjoint_basis(n, dmult);
            for (size_t b = 0; b < h_bases[j].size(); ++b)
                frees.push_back({h_bases[j][b] * closed[j], static_cast<int>(j),
                                 static_cast<int>(b)});
        }
    } else {
        for (auto& g : gens)
            if (!g.is_self_adjoint(1e-12 * (1.0 + g.coeff_norm())))
                throw std::invalid_argument("module generators must be self-adjoint");
        closed = gens;
        blocks.push_back({HermPoly::constant(n, 1.0), holo_monomials_up_to(n, degree)});
        for (auto& g : gens) {
            int bd = (2 * degree - g.degree()) / 2;
            if (bd < 0) continue;
            blocks.push_back({g, holo_monomials_up_to(n, bd)});
        }
    }

    Assembled as = assemble(n, f, std::move(blocks), std::move(frees));
    sdp::SolverOptions sopt = opts.solver;
    sopt.feas_tol = opts.psd_tol;
    sopt.infeas_tol = opts.dual_tol;
    SolveOutcome out = solve_assembled(as, sopt);

    if (out.status == sdp::Status::feasible) {
        GramCertificate cert;
        cert.mode = mode;
        cert.generators = closed;
        for (size_t i = 0; i < as.blocks.size(); ++i) {
            cert.bases.push_back(as.blocks[i].basis);
            CMatrix G = extract_block(as, static_cast<int>(i), out.x);
            cert.gram.push_back(0.5 * (G + G.adjoint().eval()));
        }
        if (mode == CertMode::ideal)
            cert.multipliers = rebuild_multipliers(as, closed, h_bases, out.x);
        cert.residual = verify_certificate(cert, f, closed);
        bool psd_ok = true;
        for (auto& G : cert.gram)
            if (!is_psd_shifted(G, opts.psd_tol)) psd_ok = false;
        if (cert.residual <= opts.certify_tol * fscale && psd_ok) return cert;
        return Unknown{degree, "solver reported feasible but verification failed"};
    }

    if (out.status == sdp::Status::infeasible) {
        auto ev = build_dual_evidence(as, out, opts.dual_tol);
        if (ev) {
            Refutation ref;
            ref.kind = Refutation::Kind::sdp_dual;
            ref.degree_bound = degree;
            ref.sdp = std::move(*ev);
            return ref;
        }
        return Unknown{degree, "solver reported infeasible but the dual did not verify"};
    }
    return Unknown{degree, "numerically inconclusive at this degree"};
}

std::variant<GramCertificate, Unknown> archimedean_search(
    const std::vector<HermPoly>& gens, int degree, const CertifyOptions& opts) {
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    int n = gens[0].vars();

    // ||z||^2 = sum_j h_j g_j - (m^dag G m) - a : target ||z||^2, gram block
    // with weight -1, one free real constant direction -1.
    HermPoly norm2(n);
    for (int j = 0; j < n; ++j)
        norm2 = norm2 + HermPoly::variable(n, j) * HermPoly::conj_variable(n, j);

    std::vector<BlockSpec> blocks;
    blocks.push_back({HermPoly::constant(n, -1.0), holo_monomials_up_to(n, degree)});

    std::vector<FreeSpec> frees;
    std::vector<HermPoly> closed = selfadjoint_closure(gens);
    std::vector<std::vector<HermPoly>> h_bases(closed.size());
    for (size_t j = 0; j < closed.size(); ++j) {
        int dmult = std::max(0, 2 * degree - closed[j].degree());
        h_bases[j] = selfadjoint_basis(n, dmult);
        for (size_t b = 0; b < h_bases[j].size(); ++b)
            frees.push_back({h_bases[j][b] * closed[j], static_cast<int>(j),
                             static_cast<int>(b)});
    }
    int const_dir = static_cast<int>(frees.size());
    frees.push_back({HermPoly::constant(n, -1.0), -1, -1});

    Assembled as = assemble(n, norm2, std::move(blocks), std::move(frees));
    sdp::SolverOptions sopt = opts.solver;
    sopt.feas_tol = opts.psd_tol;
    SolveOutcome out = solve_assembled(as, sopt);

    if (out.status != sdp::Status::feasible)
        return Unknown{degree, "no archimedean witness found at this degree"};

    GramCertificate cert;
    cert.mode = CertMode::ideal;
    cert.generators = closed;
    cert.bases.push_back(as.blocks[0].basis);
    CMatrix G = extract_block(as, 0, out.x);
    cert.gram.push_back(0.5 * (G + G.adjoint().eval()));
    // lambda g + (lambda g)^* = h g with lambda = h/2
    cert.multipliers = rebuild_multipliers(as, closed, h_bases, out.x);
    cert.archimedean_constant = out.x[as.gram_total + const_dir];
    cert.residual = verify_certificate(cert, norm2, closed);
    bool psd_ok = is_psd_shifted(cert.gram[0], opts.psd_tol);
    if (cert.residual <= opts.certify_tol && psd_ok) return cert;
    return Unknown{degree, "solver reported feasible but verification failed"};
}

// ---------------------------------------------------------------------------
// leading-form obstruction (n = 1)

namespace {

// lf == a (z zbar)^m with a > 0?
std::optional<double> positive_diag_power(const HermPoly& lf) {
    if (lf.terms().size() != 1) return std::nullopt;
    auto& [m, c] = *lf.terms().begin();
    if (m.alpha != m.beta) return std::nullopt;
    if (std::abs(c.imag()) > 0 || c.real() <= 0) return std::nullopt;
    return c.real();
}

std::optional<std::pair<Complex, double>> find_negative_point(const HermPoly& f) {
    double scale = 1.0 + f.coeff_norm();
    for (int ir = 0; ir <= 200; ++ir) {
        double r = 4.0 * ir / 200.0;
        int nth = ir == 0 ? 1 : 128;
        for (int it = 0; it < nth; ++it) {
            double th = 2 * M_PI * it / nth;
            CVector a(1);
            a[0] = std::polar(r, th);
            double v = f.eval(a).real();
            if (v < -1e-10 * scale) return std::make_pair(a[0], v);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Refutation> leading_form_obstruction(const HermPoly& f,
                                                   const std::vector<HermPoly>& gens) {
    if (f.is_zero()) return std::nullopt;
    int n = f.vars();
    if (n != 1) {
        // general n: only the bare Sigma_h leading-form test
        if (!gens.empty()) return std::nullopt;
        CertifyResult r = certify_sos(f.leading_form(), {}, CertMode::ideal,
                                      ceil_div(f.degree(), 2));
        if (auto* ref = std::get_if<Refutation>(&r)) return *ref;
        return std::nullopt;
    }

    HermPoly lf = f.leading_form();
    auto diag = positive_diag_power(lf);

    auto offending = [](const HermPoly& form) {
        std::vector<std::pair<Monomial, Complex>> off;
        for (auto& [m, c] : form.terms())
            if (m.alpha != m.beta) off.emplace_back(m, c);
        if (off.empty())
            for (auto& [m, c] : form.terms()) off.emplace_back(m, c);
        return off;
    };

    if (gens.empty()) {
        if (diag) return std::nullopt;
        Refutation ref;
        ref.kind = Refutation::Kind::leading_form;
        ref.degree_bound = f.degree();
        ref.leading = LeadingFormEvidence{
            "leading form is not a positive multiple of (z*zbar)^m", offending(lf), {}};
        return ref;
    }
    if (gens.size() != 1) return std::nullopt;  // exact path handles one generator
    const HermPoly& g = gens[0];
    if (g.is_zero() || !g.is_self_adjoint(0.0)) return std::nullopt;

    int df = f.degree(), dg = g.degree();
    if (df > dg) return std::nullopt;  // cancellations against lf(f) possible

    // multipliers of degree >= 1: lf(g)*lf(h) must equal a (z zbar)^m, which
    // forces lf(g) to be a single monomial
    HermPoly lg = g.leading_form();
    if (lg.terms().size() == 1) return std::nullopt;

    LeadingFormEvidence ev;
    ev.reason = "leading form of the generator is not a monomial, and every "
                "constant multiplier is excluded";
    ev.offending_coeffs = offending(lg);

    // constant multipliers c: lf(f + c g) must be a(z zbar)^m with a > 0, and
    // f + c g must be nonnegative on C
    if (df < dg) {
        // c != 0 gives lf = c*lf(g), multi-term since lf(g) is not a
        // monomial, hence never a(z zbar)^m; only c == 0 remains, where f
        // itself would have to lie in Sigma_h
        if (diag) {
            auto neg = find_negative_point(f);
            if (!neg) return std::nullopt;
            ev.negativity_witness = neg;
        }
        Refutation ref;
        ref.kind = Refutation::Kind::leading_form;
        ref.degree_bound = df;
        ref.leading = std::move(ev);
        return ref;
    }

    // df == dg: solve lf(f) + c lf(g) diagonal in the single real unknown c
    std::optional<double> forced_c;
    bool consistent = true;
    std::map<Monomial, Complex, MonomialOrder> off_f, off_g;
    for (auto& [m, c] : lf.terms())
        if (m.alpha != m.beta) off_f[m] = c;
    for (auto& [m, c] : lg.terms())
        if (m.alpha != m.beta) off_g[m] = c;
    for (auto& [m, cg] : off_g) {
        Complex cf = off_f.count(m) ? off_f[m] : Complex(0.0);
        Complex ratio = -cf / cg;
        if (std::abs(ratio.imag()) > 1e-12 * (1.0 + std::abs(ratio))) {
            consistent = false;
            break;
        }
        if (forced_c && std::abs(*forced_c - ratio.real()) > 1e-12) {
            consistent = false;
            break;
        }
        forced_c = ratio.real();
    }
    for (auto& [m, cf] : off_f)
        if (!off_g.count(m) && std::abs(cf) > 0) consistent = false;
    if (consistent) {
        double c = forced_c.value_or(0.0);
        HermPoly cand = f + g * Complex(c);
        if (cand.is_zero()) return std::nullopt;
        if (cand.degree() < df) return std::nullopt;  // leading forms cancelled
        if (positive_diag_power(cand.leading_form())) {
            auto neg = find_negative_point(cand);
            if (!neg) return std::nullopt;
            ev.negativity_witness = neg;
        }
        // candidate excluded either by leading form or by negativity
    }
    Refutation ref;
    ref.kind = Refutation::Kind::leading_form;
    ref.degree_bound = df;
    ref.leading = std::move(ev);
    return ref;
}

}  // namespace hsos
