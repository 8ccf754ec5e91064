// hermsos: certificates and refutations for hermitian positivity of
// conjugation-invariant polynomial ideals, with finite-rank operator
// diagnostics. Every subcommand prints one JSON document on stdout.
// Exit codes: 0 definite answer, 2 unknown, 1 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <regex>

#include "hsos/certify.hpp"
#include "hsos/conics.hpp"
#include "hsos/hereditary.hpp"
#include "hsos/ideal_geometry.hpp"
#include "hsos/radial_refute.hpp"
#include "hsos/riesz_fejer.hpp"

using json = nlohmann::ordered_json;
using namespace hsos;

namespace {

constexpr const char* kVersion = "1.0.0";

json cpx(Complex z) { return json::array({z.real(), z.imag()}); }

json vec_json(const CVector& v) {
    json a = json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(cpx(v[i]));
    return a;
}

json mat_json(const CMatrix& M) {
    json rows = json::array();
    for (int i = 0; i < M.rows(); ++i) {
        json r = json::array();
        for (int j = 0; j < M.cols(); ++j) r.push_back(cpx(M(i, j)));
        rows.push_back(r);
    }
    return rows;
}

json rmat_json(const Eigen::MatrixXd& M) {
    json rows = json::array();
    for (int i = 0; i < M.rows(); ++i) {
        json r = json::array();
        for (int j = 0; j < M.cols(); ++j) r.push_back(M(i, j));
        rows.push_back(r);
    }
    return rows;
}

// "1+2i", "-i", "0.5" etc: parse as a constant polynomial and evaluate
Complex parse_complex(const std::string& s) {
    HermPoly p = parse_poly(s, 1);
    if (p.degree() > 0) throw std::invalid_argument("expected a number: " + s);
    CVector z(1);
    z[0] = 0.0;
    return p.eval(z);
}

CVector parse_cvector(const std::string& s) {
    std::vector<Complex> vals;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        vals.push_back(parse_complex(s.substr(pos, next - pos)));
        pos = next + 1;
        if (next == s.size()) break;
    }
    CVector v(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) v[static_cast<int>(i)] = vals[i];
    return v;
}

CMatrix parse_cmatrix(const std::string& s) {
    std::vector<CVector> rows;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(';', pos);
        if (next == std::string::npos) next = s.size();
        rows.push_back(parse_cvector(s.substr(pos, next - pos)));
        pos = next + 1;
        if (next == s.size()) break;
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    CMatrix M(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != M.cols())
            throw std::invalid_argument("ragged matrix rows");
        M.row(static_cast<int>(i)) = rows[i].transpose();
    }
    return M;
}

// "3/4", "-2", "0.125" as exact rationals
Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos)
        return Rational(boost::multiprecision::cpp_int(s.substr(0, slash)),
                        boost::multiprecision::cpp_int(s.substr(slash + 1)));
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    boost::multiprecision::cpp_int den = 1;
    for (size_t k = dot + 1; k < s.size(); ++k) den *= 10;
    return Rational(boost::multiprecision::cpp_int(digits), den);
}

int infer_vars(const std::vector<std::string>& texts) {
    static const std::regex var_re("z(?:bar)?([0-9]+)");
    int n = 1;
    for (auto& t : texts) {
        for (auto it = std::sregex_iterator(t.begin(), t.end(), var_re);
             it != std::sregex_iterator(); ++it)
            n = std::max(n, std::stoi((*it)[1].str()));
    }
    return n;
}

json poly_json(const HermPoly& p) { return p.to_string(); }

json certificate_json(const GramCertificate& cert) {
    json j;
    j["status"] = "certificate";
    j["mode"] = cert.mode == CertMode::ideal ? "ideal" : "module";
    json blocks = json::array();
    for (size_t i = 0; i < cert.gram.size(); ++i) {
        json b;
        json basis = json::array();
        for (auto& m : cert.bases[i]) basis.push_back(to_string(m));
        b["basis"] = basis;
        b["gram"] = mat_json(cert.gram[i]);
        blocks.push_back(b);
    }
    j["blocks"] = blocks;
    if (!cert.multipliers.empty()) {
        json mult = json::array();
        for (size_t k = 0; k < cert.multipliers.size(); ++k) {
            json m;
            m["generator"] = poly_json(cert.generators[k]);
            m["lambda"] = poly_json(cert.multipliers[k]);
            mult.push_back(m);
        }
        j["multipliers"] = mult;
    }
    if (cert.archimedean_constant) j["constant"] = *cert.archimedean_constant;
    j["residual"] = cert.residual;
    return j;
}

json refutation_json(const Refutation& ref) {
    json j;
    j["status"] = "refuted";
    switch (ref.kind) {
        case Refutation::Kind::leading_form: j["kind"] = "leading_form"; break;
        case Refutation::Kind::radial_lp: j["kind"] = "radial_lp"; break;
        case Refutation::Kind::sdp_dual: j["kind"] = "sdp_dual"; break;
    }
    j["degree_bound"] = ref.degree_bound;
    if (ref.sdp) {
        json d;
        json monos = json::array(), w = json::array();
        for (size_t i = 0; i < ref.sdp->monomials.size(); ++i) {
            monos.push_back(to_string(ref.sdp->monomials[i]));
            w.push_back(cpx(ref.sdp->weights[i]));
        }
        d["monomials"] = monos;
        d["weights"] = w;
        d["value_on_target"] = ref.sdp->value_on_target;
        d["min_lifted_eig"] = ref.sdp->min_lifted_eig;
        d["max_free_residual"] = ref.sdp->max_free_residual;
        j["dual"] = d;
    }
    if (ref.leading) {
        json d;
        d["reason"] = ref.leading->reason;
        json off = json::array();
        for (auto& [m, c] : ref.leading->offending_coeffs) {
            json o;
            o["monomial"] = to_string(m);
            o["coeff"] = cpx(c);
            off.push_back(o);
        }
        d["offending_coeffs"] = off;
        if (ref.leading->negativity_witness) {
            d["point"] = cpx(ref.leading->negativity_witness->first);
            d["value"] = ref.leading->negativity_witness->second;
        }
        j["leading_form"] = d;
    }
    return j;
}

struct Emitter {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    json tolerances;
    std::optional<std::uint64_t> seed;

    int emit(json body, int code) {
        json doc;
        doc["tool"] = "hermsos";
        doc["version"] = kVersion;
        if (seed) doc["seed"] = *seed;
        if (!tolerances.empty()) doc["tolerances"] = tolerances;
        for (auto& [k, v] : body.items()) doc[k] = v;
        doc["wall_time_s"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::cout << doc.dump(2) << "\n";
        return code;
    }
};

std::vector<HermPoly> parse_gens(const std::vector<std::string>& texts, int n) {
    std::vector<HermPoly> gens;
    for (auto& t : texts) gens.push_back(parse_poly(t, n));
    return gens;
}

MatrixTuple parse_tuple(const std::vector<std::string>& mats, double comm_tol) {
    std::vector<CMatrix> ms;
    for (auto& s : mats) ms.push_back(parse_cmatrix(s));
    return MatrixTuple(std::move(ms), comm_tol);
}

json tuple_report_json(const TupleReport& rep) {
    json j;
    j["commuting"] = rep.commuting;
    j["normal"] = rep.normal;
    j["hyponormal"] = rep.hyponormal;
    j["max_comm_residual"] = rep.max_comm_residual;
    j["min_selfcommutator_eig"] = rep.min_selfcommutator_eig;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hermitian sum-of-squares certificates and finite-rank diagnostics"};
    app.require_subcommand(1);
    Emitter em;

    // ---- classify-conic
    auto* conic = app.add_subcommand("classify-conic", "decide the conic properties");
    std::string c_a = "0", c_alpha = "0", c_beta = "0", c_c = "0", c_poly;
    double c_zero_tol = 0.0;
    conic->add_option("--a", c_a);
    conic->add_option("--alpha", c_alpha);
    conic->add_option("--beta", c_beta);
    conic->add_option("--c", c_c);
    conic->add_option("--f", c_poly, "conic as polynomial text (overrides a/alpha/beta/c)");
    conic->add_option("--zero-tol", c_zero_tol);

    // ---- certify
    auto* cert = app.add_subcommand("certify", "hermitian SOS modulo an ideal or module");
    std::string ce_f;
    std::vector<std::string> ce_ideal, ce_module;
    int ce_degree = 2, ce_n = 0;
    double ce_tol = 1e-8;
    cert->add_option("--f", ce_f)->required();
    cert->add_option("--ideal", ce_ideal);
    cert->add_option("--module", ce_module);
    cert->add_option("--degree", ce_degree);
    cert->add_option("--n", ce_n);
    cert->add_option("--tol", ce_tol);

    // ---- archimedean
    auto* arch = app.add_subcommand("archimedean", "search ||z||^2 + p + a in the ideal");
    std::vector<std::string> ar_ideal;
    int ar_degree = 2, ar_n = 0;
    arch->add_option("--ideal", ar_ideal)->required();
    arch->add_option("--degree", ar_degree);
    arch->add_option("--n", ar_n);

    // ---- membership
    auto* memb = app.add_subcommand("membership", "test f in I(a,b) or J(a,U)");
    std::string mb_f, mb_a, mb_b, mb_U;
    double mb_tol = 1e-9;
    memb->add_option("--f", mb_f)->required();
    memb->add_option("--a", mb_a)->required();
    memb->add_option("--b", mb_b);
    memb->add_option("--U", mb_U);
    memb->add_option("--tol", mb_tol);

    // ---- witness
    auto* wit = app.add_subcommand("witness", "search a diamond or degenerate witness");
    std::vector<std::string> wi_ideal;
    WitnessConfig wcfg;
    int wi_n = 0;
    wit->add_option("--ideal", wi_ideal)->required();
    wit->add_option("--n", wi_n);
    wit->add_option("--starts", wcfg.starts);
    wit->add_option("--seed", wcfg.seed);
    wit->add_option("--tol", wcfg.tol);

    // ---- tuple-diagnose / tuple-kernel / hbi
    auto* tdiag = app.add_subcommand("tuple-diagnose", "normality diagnostics");
    auto* tker = app.add_subcommand("tuple-kernel", "hereditary kernel basis");
    auto* thbi = app.add_subcommand("hbi", "Halmos-Bram-Ito block test");
    std::vector<std::string> td_mats, tk_mats, hb_mats;
    double td_tol = 1e-10, tk_rank_tol = 1e-9;
    int tk_degree = 2, hb_degree = 1;
    tdiag->add_option("--matrix", td_mats)->required();
    tdiag->add_option("--tol", td_tol);
    tker->add_option("--matrix", tk_mats)->required();
    tker->add_option("--degree", tk_degree);
    tker->add_option("--rank-tol", tk_rank_tol);
    thbi->add_option("--matrix", hb_mats)->required();
    thbi->add_option("--degree", hb_degree);

    // ---- witness-tuple
    auto* wtup = app.add_subcommand("witness-tuple", "non-normal tuple from a witness");
    std::string wt_a, wt_b, wt_W;
    wtup->add_option("--a", wt_a)->required();
    wtup->add_option("--b", wt_b);
    wtup->add_option("--W", wt_W);

    // ---- riesz-fejer
    auto* rf = app.add_subcommand("riesz-fejer", "circle spectral factorization");
    std::string rf_f;
    double rf_tol = 1e-9;
    rf->add_option("--f", rf_f)->required();
    rf->add_option("--tol", rf_tol);

    // ---- refute-radial
    auto* rr = app.add_subcommand("refute-radial", "exact radial-coefficient refutation");
    int rr_m = 2, rr_gdeg = 8;
    std::vector<std::string> rr_a;
    rr->add_option("--m", rr_m);
    rr->add_option("--a", rr_a)->required();
    rr->add_option("--g-degree", rr_gdeg);

    // ---- shift-commutator
    auto* sc = app.add_subcommand("shift-commutator", "leading section of [S*,S] variant");
    int sc_n = 2;
    sc->add_option("--n", sc_n);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        json err;
        err["error"] = e.what();
        return em.emit(err, 1);
    }

    try {
        if (conic->parsed()) {
            ConicInput in;
            if (!c_poly.empty()) {
                in = conic_from_poly(parse_poly(c_poly, 1));
            } else {
                in.a = parse_complex(c_a).real();
                in.alpha = parse_complex(c_alpha);
                in.beta = parse_complex(c_beta);
                in.c = parse_complex(c_c).real();
            }
            ConicReport rep = c_zero_tol > 0 ? classify_conic_tol(in, c_zero_tol)
                                             : classify_conic(in);
            json j;
            j["flags"] = {{"A", rep.A}, {"Q", rep.Q}, {"S", rep.S},
                          {"Sf", rep.Sf}, {"G", rep.G}};
            j["label"] = rep.label;
            j["quadratic_invariants"] = {{"trace", rep.trace}, {"det", rep.det}};
            return em.emit(j, 0);
        }

        if (cert->parsed()) {
            if (!ce_ideal.empty() && !ce_module.empty())
                throw std::invalid_argument("--ideal and --module are exclusive");
            if (ce_tol <= 0) throw std::invalid_argument("tolerance must be > 0");
            std::vector<std::string> all{ce_f};
            for (auto& g : ce_ideal) all.push_back(g);
            for (auto& g : ce_module) all.push_back(g);
            int n = ce_n > 0 ? ce_n : infer_vars(all);
            HermPoly f = parse_poly(ce_f, n);
            CertMode mode = ce_module.empty() ? CertMode::ideal : CertMode::module;
            auto gens = parse_gens(ce_module.empty() ? ce_ideal : ce_module, n);
            CertifyOptions opts;
            opts.certify_tol = ce_tol;
            em.tolerances = {{"certify_tol", opts.certify_tol},
                             {"psd_tol", opts.psd_tol},
                             {"dual_tol", opts.dual_tol}};
            // cheap exact obstruction first, then the SDP
            if (mode == CertMode::ideal) {
                if (auto ref = leading_form_obstruction(f, gens))
                    return em.emit(refutation_json(*ref), 0);
            }
            CertifyResult res = certify_sos(f, gens, mode, ce_degree, opts);
            if (auto* c = std::get_if<GramCertificate>(&res))
                return em.emit(certificate_json(*c), 0);
            if (auto* r = std::get_if<Refutation>(&res))
                return em.emit(refutation_json(*r), 0);
            auto& u = std::get<Unknown>(res);
            json j;
            j["status"] = "unknown";
            j["degree"] = u.degree;
            j["note"] = u.note;
            return em.emit(j, 2);
        }

        if (arch->parsed()) {
            int n = ar_n > 0 ? ar_n : infer_vars(ar_ideal);
            auto gens = parse_gens(ar_ideal, n);
            auto res = archimedean_search(gens, ar_degree);
            if (auto* c = std::get_if<GramCertificate>(&res)) {
                json j = certificate_json(*c);
                j["status"] = "archimedean";
                return em.emit(j, 0);
            }
            auto& u = std::get<Unknown>(res);
            json j;
            j["status"] = "unknown";
            j["degree"] = u.degree;
            j["note"] = u.note;
            return em.emit(j, 2);
        }

        if (memb->parsed()) {
            if (mb_tol <= 0) throw std::invalid_argument("tolerance must be > 0");
            CVector a = parse_cvector(mb_a);
            int n = static_cast<int>(a.size());
            HermPoly f = parse_poly(mb_f, n);
            em.tolerances = {{"tol", mb_tol}};
            MembershipResult res{false, 0.0};
            json j;
            if (!mb_b.empty()) {
                DiamondSpec spec(a, parse_cvector(mb_b));
                res = in_diamond(f, spec, mb_tol);
                j["ideal"] = "diamond";
            } else if (!mb_U.empty()) {
                DegenerateSpec spec(a, parse_cmatrix(mb_U));
                res = in_degenerate(f, spec, mb_tol);
                j["ideal"] = "degenerate";
            } else {
                throw std::invalid_argument("provide --b (diamond) or --U (degenerate)");
            }
            j["member"] = res.member;
            j["residual"] = res.residual;
            return em.emit(j, 0);
        }

        if (wit->parsed()) {
            int n = wi_n > 0 ? wi_n : infer_vars(wi_ideal);
            if (wcfg.tol <= 0) throw std::invalid_argument("tolerance must be > 0");
            auto gens = parse_gens(wi_ideal, n);
            em.seed = wcfg.seed;
            em.tolerances = {{"tol", wcfg.tol}};
            GWitness w = g_witness_search(gens, wcfg);
            json j;
            if (w.kind == GWitness::Kind::diamond) {
                j["kind"] = "diamond";
                j["a"] = vec_json(w.diamond->a);
                j["b"] = vec_json(w.diamond->b);
            } else if (w.kind == GWitness::Kind::degenerate) {
                j["kind"] = "degenerate";
                j["a"] = vec_json(w.degenerate->a);
                j["U"] = mat_json(w.degenerate->U);
            } else {
                j["kind"] = "none";
                j["note"] = "no witness found; heuristic negative, not a proof";
            }
            j["residual"] = w.residual;
            return em.emit(j, w.kind == GWitness::Kind::none ? 2 : 0);
        }

        if (tdiag->parsed()) {
            if (td_tol <= 0) throw std::invalid_argument("tolerance must be > 0");
            em.tolerances = {{"tol", td_tol}};
            MatrixTuple T = parse_tuple(td_mats, 1e-10);
            return em.emit(tuple_report_json(tuple_diagnostics(T, td_tol)), 0);
        }

        if (tker->parsed()) {
            MatrixTuple T = parse_tuple(tk_mats, 1e-10);
            em.tolerances = {{"rank_tol", tk_rank_tol}};
            KernelBasis kb = kernel_up_to_degree(T, tk_degree, tk_rank_tol);
            json j;
            j["degree"] = kb.degree;
            json basis = json::array();
            for (size_t i = 0; i < kb.basis.size(); ++i)
                basis.push_back(
                    kernel_polynomial(kb, static_cast<int>(i), T.vars()).to_string());
            j["dimension"] = kb.basis.size();
            j["basis"] = basis;
            return em.emit(j, 0);
        }

        if (thbi->parsed()) {
            MatrixTuple T = parse_tuple(hb_mats, 1e-10);
            HbiResult r = hbi_check(T, hb_degree);
            json j;
            j["degree"] = hb_degree;
            j["psd"] = r.psd;
            j["min_eig"] = r.min_eig;
            return em.emit(j, 0);
        }

        if (wtup->parsed()) {
            CVector a = parse_cvector(wt_a);
            MatrixTuple T = !wt_b.empty()
                                ? witness_diamond_tuple(a, parse_cvector(wt_b))
                                : witness_degenerate_tuple(a, parse_cmatrix(wt_W));
            json j;
            j["kind"] = !wt_b.empty() ? "diamond" : "degenerate";
            json mats = json::array();
            for (auto& M : T.mats()) mats.push_back(mat_json(M));
            j["matrices"] = mats;
            j["diagnostics"] = tuple_report_json(tuple_diagnostics(T, 1e-10));
            return em.emit(j, 0);
        }

        if (rf->parsed()) {
            if (rf_tol <= 0) throw std::invalid_argument("tolerance must be > 0");
            em.tolerances = {{"tol", rf_tol}};
            RieszFejer r = riesz_fejer(parse_poly(rf_f, 1), rf_tol);
            json j;
            j["h"] = r.h.to_string();
            j["g"] = r.g.to_string();
            j["residual"] = r.residual;
            j["circle_min"] = r.circle_min;
            return em.emit(j, 0);
        }

        if (rr->parsed()) {
            std::vector<Rational> a;
            for (auto& s : rr_a) a.push_back(parse_rational(s));
            RadialRefutation r = radial_refute(rr_m, a, rr_gdeg);
            json j;
            j["status"] = r.verified ? "refuted" : "unknown";
            j["kind"] = "radial_lp";
            j["m"] = r.m;
            j["g_degree"] = r.g_degree;
            json ineqs = json::array();
            for (auto& iq : r.inequalities) {
                json q;
                q["label"] = iq.label;
                q["constant"] = iq.constant.str();
                json cs = json::array();
                for (auto& c : iq.coeffs) cs.push_back(c.str());
                q["coeffs"] = cs;
                ineqs.push_back(q);
            }
            j["inequalities"] = ineqs;
            json fk = json::array();
            for (auto& c : r.farkas) fk.push_back(c.str());
            j["farkas"] = fk;
            j["combination_constant"] = r.combination_constant.str();
            j["degree_independent"] = r.degree_independent;
            return em.emit(j, r.verified ? 0 : 2);
        }

        if (sc->parsed()) {
            Eigen::MatrixXd M = shift_commutator(sc_n);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
            json j;
            j["matrix"] = rmat_json(M);
            j["min_eig"] = es.eigenvalues().minCoeff();
            return em.emit(j, 0);
        }
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        return em.emit(err, 1);
    }
    return 1;
}
