#pragma once

// Certificate search and refutation: hermitian sums of squares modulo an
// ideal or a hermitian module, via Gram-matrix semidefinite feasibility;
// the archimedean criterion; the leading-form obstruction. Every
// certificate returned has been re-verified by exact polynomial
// re-expansion, never trusted from the solver.

#include <optional>
#include <variant>

#include "hsos/poly.hpp"
#include "hsos/sdp.hpp"

namespace hsos {

enum class CertMode { ideal, module };

struct GramCertificate {
    CertMode mode;
    std::vector<std::vector<Monomial>> bases;  // holomorphic basis per block
    std::vector<CMatrix> gram;                 // G_0 .. G_k (psd)
    std::vector<HermPoly> multipliers;         // lambda_j (ideal mode)
    std::vector<HermPoly> generators;          // the gens the identity refers to
    // set for archimedean certificates: ||z||^2 + m^dag G m + a = sum (lambda g + *)
    std::optional<double> archimedean_constant;
    double residual = 0.0;
};

// Separating functional on the coefficient space, lifted back to psd
// matrices W_i on each block for independent verification: for any feasible
// Gram data, 0 <= sum <W_i, G_i> = <functional, coeffs> < 0, a contradiction.
struct SdpDualEvidence {
    std::vector<Monomial> monomials;
    std::vector<Complex> weights;    // functional weight per monomial coefficient
    double value_on_target = 0.0;    // < 0
    double min_lifted_eig = 0.0;     // over the lifted blocks W_i
    double max_free_residual = 0.0;  // functional on multiplier columns
    std::vector<CMatrix> lifted;
};

struct LeadingFormEvidence {
    std::string reason;
    std::vector<std::pair<Monomial, Complex>> offending_coeffs;
    // point where f (or f + c*g for the forced constant c) is negative
    std::optional<std::pair<Complex, double>> negativity_witness;
};

struct Refutation {
    enum class Kind { leading_form, radial_lp, sdp_dual };
    Kind kind;
    int degree_bound = 0;
    std::optional<SdpDualEvidence> sdp;
    std::optional<LeadingFormEvidence> leading;
};

struct Unknown {
    int degree = 0;
    std::string note;
};

using CertifyResult = std::variant<GramCertificate, Refutation, Unknown>;

struct CertifyOptions {
    double certify_tol = 1e-8;
    double psd_tol = 1e-9;
    double dual_tol = 1e-6;
    sdp::SolverOptions solver;
};

// f = m^dag G0 m + sum_j (lambda_j g_j + (lambda_j g_j)^*)          (ideal)
// f = m0^dag G0 m0 + sum_i g_i (m_i^dag G_i m_i)                    (module)
// `degree` bounds the holomorphic basis degree and multiplier degree.
CertifyResult certify_sos(const HermPoly& f, const std::vector<HermPoly>& gens,
                          CertMode mode, int degree, const CertifyOptions& opts = {});

// Recomputes the certificate identity in polynomial arithmetic; returns the
// coefficientwise max-norm residual. Independent of the solver path.
double verify_certificate(const GramCertificate& cert, const HermPoly& f,
                          const std::vector<HermPoly>& gens);

// Search for ||z||^2 + p + a in the ideal, p in Sigma_h, a real.
// Success certifies the archimedean property; Unknown certifies nothing.
std::variant<GramCertificate, Unknown> archimedean_search(
    const std::vector<HermPoly>& gens, int degree, const CertifyOptions& opts = {});

// Exact leading-form test (n = 1): rules out f in Sigma_h + (g) by the
// degree bookkeeping on leading forms. nullopt means inconclusive.
std::optional<Refutation> leading_form_obstruction(const HermPoly& f,
                                                   const std::vector<HermPoly>& gens);

// Shared helper: c_{1,1}-style psd check with pivoted Cholesky after a
// psd_tol shift (independent of the eigensolver used inside the SDP).
bool is_psd_shifted(const CMatrix& G, double psd_tol);

}  // namespace hsos
