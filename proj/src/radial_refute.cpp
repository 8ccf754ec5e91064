#include "hsos/radial_refute.hpp"

#include <stdexcept>

namespace hsos {

RadialRefutation radial_refute(int m, const std::vector<Rational>& a, int g_degree) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    if (static_cast<int>(a.size()) != m)
        throw std::invalid_argument("expected m coefficients a_0..a_{m-1}");
    for (auto& aj : a)
        if (aj < 0) throw std::invalid_argument("coefficients must be >= 0");
    if (g_degree < 0) throw std::invalid_argument("g_degree must be >= 0");

    RadialRefutation out;
    out.m = m;
    out.a = a;
    out.g_degree = g_degree;
    int L = g_degree / 2;  // b_0 .. b_L

    auto zero = [&] { return std::vector<Rational>(L + 1, Rational(0)); };

    // I1: coefficient of |z|^2 in c - |z|^2 + f g
    {
        RadialInequality ineq{"I1", Rational(-1), zero()};
        // the b_{1-m} term vanishes since m >= 2
        ineq.coeffs[0] -= a[1];
        if (L >= 1) ineq.coeffs[1] -= a[0];
        out.inequalities.push_back(std::move(ineq));
    }
    // E_k: coefficient of |z|^{2(m+k)}, k = 0..L
    for (int k = 0; k <= L; ++k) {
        RadialInequality ineq{"E_" + std::to_string(k), Rational(0), zero()};
        ineq.coeffs[k] += 1;
        for (int i = 1; i <= m; ++i)
            if (k + i <= L) ineq.coeffs[k + i] -= a[m - i];
        out.inequalities.push_back(std::move(ineq));
    }

    // Farkas combination replaying the downward induction: cert_k is a
    // multiplier vector over {I1, E_0..E_L} proving b_k >= 0.
    int ni = static_cast<int>(out.inequalities.size());
    std::vector<std::vector<Rational>> cert(L + 1, std::vector<Rational>(ni, Rational(0)));
    for (int k = L; k >= 0; --k) {
        cert[k][1 + k] = 1;  // E_k
        for (int i = 1; i <= m; ++i) {
            if (k + i > L) continue;
            Rational w = a[m - i];
            if (w == 0) continue;
            for (int j = 0; j < ni; ++j) cert[k][j] += w * cert[k + i][j];
        }
    }
    out.farkas.assign(ni, Rational(0));
    out.farkas[0] = 1;  // I1
    for (int j = 0; j < ni; ++j) {
        out.farkas[j] += a[1] * cert[0][j];
        if (L >= 1) out.farkas[j] += a[0] * cert[1][j];
    }

    // exact verification: the combination has zero coefficients on every b_k
    // and a negative constant, so the system is infeasible
    Rational cst(0);
    std::vector<Rational> total = zero();
    bool nonneg = true;
    for (int j = 0; j < ni; ++j) {
        if (out.farkas[j] < 0) nonneg = false;
        cst += out.farkas[j] * out.inequalities[j].constant;
        for (int k = 0; k <= L; ++k)
            total[k] += out.farkas[j] * out.inequalities[j].coeffs[k];
    }
    bool zero_coeffs = true;
    for (auto& t : total)
        if (t != 0) zero_coeffs = false;
    out.combination_constant = cst;
    out.verified = nonneg && zero_coeffs && cst < 0;
    return out;
}

}  // namespace hsos
