#pragma once

// Exact refutation of archimedeanness for the radial lemniscate family
//     f = |z|^{2m} - sum_{j<m} a_j |z|^{2j},   a_j >= 0, m >= 2.
// Any membership c - |z|^2 + f*g in Sigma_h forces the diagonal
// coefficients of the left side to be nonnegative; reading them off gives
// the linear inequalities
//     I1 :  -1 - a_1 b_0 - a_0 b_1 >= 0
//     E_k:  b_k - a_{m-1} b_{k+1} - ... - a_0 b_{k+m} >= 0   (k >= 0)
// on the radial coefficients b_k of g. A downward induction turns the E_k
// into b_k >= 0 for all k, contradicting I1. The induction is replayed
// here as an explicit Farkas combination in rational arithmetic, valid for
// every multiplier degree, so the refutation is degree-independent.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace hsos {

using Rational = boost::multiprecision::cpp_rational;

struct RadialInequality {
    std::string label;               // "I1" or "E_k"
    Rational constant;               // constant term of the >= 0 form
    std::vector<Rational> coeffs;    // coefficient of b_0 .. b_L
};

struct RadialRefutation {
    int m = 0;
    std::vector<Rational> a;
    int g_degree = 0;                         // cap on deg g; L = g_degree / 2
    std::vector<RadialInequality> inequalities;
    std::vector<Rational> farkas;             // one multiplier per inequality
    Rational combination_constant;            // == -1 when verified
    bool verified = false;                    // exact: sum is the constant -1
    bool degree_independent = true;           // the induction works for any L
};

// Throws std::invalid_argument on m < 2, wrong coefficient count, or
// negative a_j.
RadialRefutation radial_refute(int m, const std::vector<Rational>& a, int g_degree);

}  // namespace hsos
