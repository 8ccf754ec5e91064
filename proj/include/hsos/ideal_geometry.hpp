#pragma once

// Obstruction ideals for geometric normality: the four-point "diamond"
// ideals I(a,b), their degenerations J(a,U), membership tests, generator
// lists for J(0,U_r), numerical witness search and the analytic-disc
// reduction to a rank-one degenerate spec.

#include <cstdint>
#include <optional>
#include <vector>

#include "hsos/poly.hpp"

namespace hsos {

struct DiamondSpec {
    CVector a, b;
    DiamondSpec(CVector a_, CVector b_);  // requires a != b
};

struct DegenerateSpec {
    CVector a;
    CMatrix U;  // hermitian psd, nonzero
    DegenerateSpec(CVector a_, CMatrix U_);
};

struct MembershipResult {
    bool member;
    double residual;
};

// f in I(a,b): the four substitutions f(a,abar), f(b,bbar), f(a,bbar),
// f(b,abar) all vanish to tol.
MembershipResult in_diamond(const HermPoly& f, const DiamondSpec& spec, double tol);

// f in J(a,U): vanishing value, U-contracted gradients and U-traced Levi
// form at a. Gradient/Levi violations are scaled by ||U||.
MembershipResult in_degenerate(const HermPoly& f, const DegenerateSpec& spec, double tol);

// The generator list for J(0, U_r), U_r = diag(1,..,1,0,..,0) of rank r.
std::vector<HermPoly> degenerate_generators(int n, int r);

struct WitnessConfig {
    std::uint64_t seed = 0;
    int starts = 64;
    int max_iterations = 120;
    double tol = 1e-9;
    double box = 2.0;             // multistart box half-width (per real coordinate)
    double pair_collapse = 1e-6;  // |a-b| below this reroutes to degenerate search
};

struct GWitness {
    enum class Kind { none, diamond, degenerate };
    Kind kind = Kind::none;
    std::optional<DiamondSpec> diamond;
    std::optional<DegenerateSpec> degenerate;
    double residual = 0.0;
    std::uint64_t seed = 0;
};

// Multistart Levenberg-Marquardt search for a diamond pair (a,b) or a
// degenerate pair (a,U) annihilating every generator. kind == none is a
// heuristic negative, not a proof.
GWitness g_witness_search(const std::vector<HermPoly>& gens, const WitnessConfig& cfg);

// phi = truncated power series phi_j(zeta) = sum_k phi[j][k] zeta^k.
// Returns (a = phi(0), U = u^* u) with u the linear coefficient row vector.
DegenerateSpec disc_to_degenerate(const std::vector<std::vector<Complex>>& phi);

}  // namespace hsos
