#pragma once

// Complete decision procedure for plane conics
//     f = a z zbar + alpha z^2 + conj(alpha) zbar^2 + beta z + conj(beta) zbar + c
// with geometric labeling via the real quadratic form
//     (a + 2 Re alpha) x^2 - 4 (Im alpha) xy + (a - 2 Re alpha) y^2,
// whose determinant invariant is a^2 - 4 |alpha|^2. The property flags are
// purely algebraic in (a, alpha): zero tests are exact on the given input;
// classify_conic_tol zeroes out entries below a threshold first.

#include <string>

#include "hsos/poly.hpp"

namespace hsos {

struct ConicInput {
    double a = 0.0;
    Complex alpha{0.0, 0.0};
    Complex beta{0.0, 0.0};
    double c = 0.0;
};

struct ConicReport {
    bool A, Q, S, Sf, G;
    std::string label;  // circle, ellipse, parabola-type, hyperbola,
                        // rectangular-hyperbola, line, degenerate-pair,
                        // point-or-empty
    double trace;       // 2a
    double det;         // a^2 - 4|alpha|^2
};

// Throws std::invalid_argument on constant input (a = alpha = beta = 0).
ConicReport classify_conic(const ConicInput& in);

// Floating-point entry: entries with magnitude <= zero_tol are treated as
// exact zeros before classifying.
ConicReport classify_conic_tol(const ConicInput& in, double zero_tol = 1e-12);

// Pattern-match a univariate polynomial of degree <= 2 to the conic shape.
// Throws std::invalid_argument if f is not of that form or not self-adjoint.
ConicInput conic_from_poly(const HermPoly& f);

// The polynomial of a conic input (for feeding the cross-check modules).
HermPoly conic_poly(const ConicInput& in);

}  // namespace hsos
