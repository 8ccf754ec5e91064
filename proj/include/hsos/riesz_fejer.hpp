#pragma once

// Spectral factorization on the unit circle: a self-adjoint f(z, zbar) in
// one variable that is nonnegative on |z| = 1 splits as
//     f = |h(z)|^2 + (1 - z zbar) g(z, zbar)
// with h holomorphic. The circle restriction is a nonnegative trigonometric
// polynomial, factored by splitting the roots of its Laurent lift at the
// unit circle; g is then obtained by exact polynomial division.

#include "hsos/poly.hpp"

namespace hsos {

struct RieszFejer {
    HermPoly h;          // holomorphic factor
    HermPoly g;          // cofactor of (1 - z zbar)
    double residual;     // coefficient norm of f - |h|^2 - (1 - z zbar) g
    double circle_min;   // sampled minimum of f on |z| = 1
};

// Throws std::invalid_argument if f is not univariate self-adjoint or is
// negative on the circle beyond tol.
RieszFejer riesz_fejer(const HermPoly& f, double tol = 1e-9);

}  // namespace hsos
