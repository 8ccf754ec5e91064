#include "hsos/conics.hpp"

namespace hsos {

namespace {

std::string label_conic(const ConicInput& in) {
    double p = in.alpha.real(), q = in.alpha.imag();
    // real quadratic form A, linear part b, constant c
    Eigen::Matrix2d A;
    A << in.a + 2 * p, -2 * q, -2 * q, in.a - 2 * p;
    Eigen::Vector2d b(2 * in.beta.real(), -2 * in.beta.imag());
    double det2 = in.a * in.a - 4 * std::norm(in.alpha);

    if (in.a == 0.0 && in.alpha == Complex(0.0)) return "line";

    Eigen::Matrix3d M3;
    M3 << A(0, 0), A(0, 1), b(0) / 2, A(1, 0), A(1, 1), b(1) / 2, b(0) / 2,
        b(1) / 2, in.c;
    double det3 = M3.determinant();
    double scale = std::max({std::abs(in.a), std::abs(in.alpha), std::abs(in.beta),
                             std::abs(in.c), 1.0});
    bool deg3 = std::abs(det3) <= 1e-12 * scale * scale * scale;

    if (det2 > 0) {
        // definite form; sign-normalize by the trace and complete the square
        double s = (in.a > 0) ? 1.0 : -1.0;
        Eigen::Vector2d v = A.colPivHouseholderQr().solve(-b / 2);
        double minval = s * (in.c + 0.5 * b.dot(v));
        if (minval >= -1e-12 * scale) return "point-or-empty";
        return in.alpha == Complex(0.0) ? "circle" : "ellipse";
    }
    if (det2 < 0) {
        if (deg3) return "degenerate-pair";
        return in.a == 0.0 ? "rectangular-hyperbola" : "hyperbola";
    }
    return deg3 ? "degenerate-pair" : "parabola-type";
}

}  // namespace

ConicReport classify_conic(const ConicInput& in) {
    if (in.a == 0.0 && in.alpha == Complex(0.0) && in.beta == Complex(0.0))
        throw std::invalid_argument("constant conic input");
    ConicReport rep;
    bool alpha_zero = in.alpha == Complex(0.0);
    rep.A = alpha_zero && in.a != 0.0;
    rep.Q = alpha_zero;
    rep.S = rep.Sf = rep.G = (in.a != 0.0 || alpha_zero);
    rep.trace = 2 * in.a;
    rep.det = in.a * in.a - 4 * std::norm(in.alpha);
    rep.label = label_conic(in);
    return rep;
}

ConicReport classify_conic_tol(const ConicInput& in, double zero_tol) {
    if (zero_tol < 0) throw std::invalid_argument("zero_tol must be >= 0");
    ConicInput z = in;
    auto chop = [&](double x) { return std::abs(x) <= zero_tol ? 0.0 : x; };
    z.a = chop(z.a);
    z.c = chop(z.c);
    z.alpha = Complex(chop(z.alpha.real()), chop(z.alpha.imag()));
    if (std::abs(z.alpha) <= zero_tol) z.alpha = 0.0;
    z.beta = Complex(chop(z.beta.real()), chop(z.beta.imag()));
    if (std::abs(z.beta) <= zero_tol) z.beta = 0.0;
    return classify_conic(z);
}

ConicInput conic_from_poly(const HermPoly& f) {
    if (f.vars() != 1) throw std::invalid_argument("conic input must be univariate");
    if (f.degree() > 2) throw std::invalid_argument("conic input must have degree <= 2");
    ConicInput in;
    for (auto& [m, v] : f.terms()) {
        int A = m.alpha[0], B = m.beta[0];
        if (A == 1 && B == 1)
            in.a = v.real();
        else if (A == 2 && B == 0)
            in.alpha = v;
        else if (A == 1 && B == 0)
            in.beta = v;
        else if (A == 0 && B == 0)
            in.c = v.real();
        else if (!((A == 0 && B == 2) || (A == 0 && B == 1)))
            throw std::invalid_argument("polynomial is not of the conic shape");
    }
    double scale = 1.0 + f.coeff_norm();
    HermPoly diff = f - conic_poly(in);
    if (diff.coeff_norm() > 1e-12 * scale)
        throw std::invalid_argument("polynomial is not self-adjoint of conic shape");
    return in;
}

HermPoly conic_poly(const ConicInput& in) {
    HermPoly f(1);
    auto add = [&](int a, int b, Complex c) {
        if (c != Complex(0.0)) f.add_term(Monomial({a}, {b}), c);
    };
    add(1, 1, in.a);
    add(2, 0, in.alpha);
    add(0, 2, std::conj(in.alpha));
    add(1, 0, in.beta);
    add(0, 1, std::conj(in.beta));
    add(0, 0, in.c);
    return f;
}

}  // namespace hsos
