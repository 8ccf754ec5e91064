#include "hsos/riesz_fejer.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>

namespace hsos {

namespace {

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
    // coeffs[k] multiplies z^k; leading coefficient nonzero
    int d = static_cast<int>(coeffs.size()) - 1;
    if (d < 1) return {};
    CMatrix C = CMatrix::Zero(d, d);
    for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) C(i, d - 1) = -coeffs[i] / coeffs[d];
    Eigen::ComplexEigenSolver<CMatrix> es(C, false);
    std::vector<Complex> roots(d);
    for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()[i];
    return roots;
}

HermPoly holo_from_coeffs(const std::vector<Complex>& c) {
    HermPoly h(1);
    for (size_t k = 0; k < c.size(); ++k)
        if (c[k] != Complex(0.0)) h.add_term(Monomial({static_cast<int>(k)}, {0}), c[k]);
    return h;
}

}  // namespace

RieszFejer riesz_fejer(const HermPoly& f, double tol) {
    if (f.vars() != 1) throw std::invalid_argument("riesz_fejer requires one variable");
    double scale = 1.0 + f.coeff_norm();
    if (!f.is_self_adjoint(1e-12 * scale))
        throw std::invalid_argument("riesz_fejer requires a self-adjoint polynomial");

    // circle restriction as a Laurent polynomial q(z) = sum c_k z^k,
    // c_k = sum over alpha - beta = k of the coefficients
    int m = 0;
    for (auto& [mono, c] : f.terms())
        m = std::max(m, std::abs(mono.alpha[0] - mono.beta[0]));
    std::vector<Complex> q(2 * m + 1, 0.0);
    for (auto& [mono, c] : f.terms()) q[mono.alpha[0] - mono.beta[0] + m] += c;

    RieszFejer out{HermPoly(1), HermPoly(1), 0.0, 0.0};

    const int grid = 1024;
    out.circle_min = std::numeric_limits<double>::infinity();
    for (int k = 0; k < grid; ++k) {
        CVector z(1);
        z[0] = std::polar(1.0, 2 * M_PI * k / grid);
        out.circle_min = std::min(out.circle_min, f.eval(z).real());
    }
    if (out.circle_min < -tol * scale)
        throw std::invalid_argument("polynomial is negative on the unit circle");

    // trim numerically-zero outer Laurent coefficients
    while (m > 0 && std::abs(q[2 * m]) <= 1e-13 * scale &&
           std::abs(q[0]) <= 1e-13 * scale) {
        q.erase(q.begin());
        q.pop_back();
        --m;
    }

    bool q_zero = true;
    for (auto& c : q)
        if (std::abs(c) > 1e-13 * scale) q_zero = false;

    if (!q_zero) {
        // P(z) = z^m q(z); roots come in pairs (r, 1/conj(r)). Take the
        // open-disc roots, and one of each near-circle pair.
        std::vector<Complex> roots = polynomial_roots(q);
        std::vector<Complex> inside, on_circle;
        for (auto& r : roots) {
            double ar = std::abs(r);
            if (ar < 1.0 - 1e-7)
                inside.push_back(r);
            else if (ar <= 1.0 + 1e-7)
                on_circle.push_back(r);
        }
        // circle roots have even multiplicity; greedily pair nearest ones
        std::vector<bool> used(on_circle.size(), false);
        for (size_t i = 0; i < on_circle.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            size_t best = i;
            double bd = std::numeric_limits<double>::infinity();
            for (size_t j = i + 1; j < on_circle.size(); ++j) {
                if (used[j]) continue;
                double d = std::abs(on_circle[i] - on_circle[j]);
                if (d < bd) {
                    bd = d;
                    best = j;
                }
            }
            if (best != i) used[best] = true;
            inside.push_back(0.5 * (on_circle[i] + (best != i ? on_circle[best]
                                                              : on_circle[i])));
        }

        // h_unit = prod (z - r_i)
        std::vector<Complex> hc{1.0};
        for (auto& r : inside) {
            std::vector<Complex> nxt(hc.size() + 1, 0.0);
            for (size_t k = 0; k < hc.size(); ++k) {
                nxt[k + 1] += hc[k];
                nxt[k] -= r * hc[k];
            }
            hc = std::move(nxt);
        }

        // scale: least-squares fit of s * |h_unit|^2 to q on the circle grid
        double num = 0.0, den = 0.0;
        for (int k = 0; k < grid; ++k) {
            Complex z = std::polar(1.0, 2 * M_PI * k / grid);
            Complex hv = 0.0;
            for (size_t j = hc.size(); j-- > 0;) hv = hv * z + hc[j];
            double u = std::norm(hv);
            Complex qv = 0.0;
            for (size_t j = q.size(); j-- > 0;) qv = qv * z + q[j];
            qv *= std::pow(z, -m);
            num += u * qv.real();
            den += u * u;
        }
        double s = (den > 0) ? num / den : 0.0;
        if (s < 0) s = 0.0;
        for (auto& c : hc) c *= std::sqrt(s);
        out.h = holo_from_coeffs(hc);
    }

    // g = (|h|^2 - f) / (z zbar - 1), by division with leading term z zbar
    HermPoly r = out.h * out.h.star() - f;
    HermPoly gq(1);
    HermPoly divisor = HermPoly::variable(1, 0) * HermPoly::conj_variable(1, 0) -
                       HermPoly::constant(1, 1.0);
    while (true) {
        const Monomial* pick = nullptr;
        Complex pc;
        for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it)
            if (it->first.alpha[0] >= 1 && it->first.beta[0] >= 1) {
                pick = &it->first;
                pc = it->second;
                break;
            }
        if (!pick) break;
        HermPoly t = HermPoly::term(1, Monomial({pick->alpha[0] - 1}, {pick->beta[0] - 1}), pc);
        gq = gq + t;
        r = r - t * divisor;
    }
    out.g = gq;
    out.residual = r.coeff_norm();
    // report the residual of the actual identity, not just the remainder
    HermPoly check = f - out.h * out.h.star() + divisor * out.g;
    out.residual = check.coeff_norm();
    return out;
}

}  // namespace hsos
