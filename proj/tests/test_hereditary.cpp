#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "hsos/hereditary.hpp"

using namespace hsos;

namespace {
MatrixTuple single(const CMatrix& M) { return MatrixTuple({M}, 1e-10); }
}  // namespace

TEST_CASE("tuple construction rejects non-commuting matrices") {
    CMatrix A(2, 2), B(2, 2);
    A << 0, 1, 0, 0;
    B << 0, 0, 1, 0;
    CHECK_THROWS_AS(MatrixTuple({A, B}), std::invalid_argument);
    CHECK_NOTHROW(MatrixTuple({A, A}));
}

TEST_CASE("hereditary evaluation puts adjoints to the left") {
    // T = [[1,-2],[0,-1]]: T^2 = I, T^adj T = [[1,-2],[-2,5]]
    CMatrix T(2, 2);
    T << 1, -2, 0, -1;
    MatrixTuple tup = single(T);
    CMatrix TT = hereditary_eval(parse_poly("z1*zbar1", 1), tup);
    CMatrix expect(2, 2);
    expect << 1, -2, -2, 5;
    CHECK((TT - expect).norm() < 1e-14);
    CMatrix sq = hereditary_eval(parse_poly("z1^2", 1), tup);
    CHECK((sq - CMatrix::Identity(2, 2)).norm() < 1e-14);
    // psi_T is linear and conjugate-symmetric: psi(f^*) = psi(f)^adj
    auto f = parse_poly("(1+2i)*z1^2*zbar1 + 3*z1", 1);
    CHECK((hereditary_eval(f.star(), tup) - hereditary_eval(f, tup).adjoint()).norm() <
          1e-13);
}

TEST_CASE("self-commutator sign convention") {
    // lower 2x2 shift: [T*,T] = diag(1,-1), not hyponormal
    CMatrix S(2, 2);
    S << 0, 0, 1, 0;
    TupleReport rep = tuple_diagnostics(single(S), 1e-10);
    CHECK_FALSE(rep.normal);
    CHECK_FALSE(rep.hyponormal);
    CHECK(rep.min_selfcommutator_eig == doctest::Approx(-1.0).epsilon(1e-12));

    CMatrix T(2, 2);
    T << 1, -2, 0, -1;
    rep = tuple_diagnostics(single(T), 1e-10);
    CHECK_FALSE(rep.normal);
    CHECK_FALSE(rep.hyponormal);
    // [T*,T] = [[-4,-4],[-4,4]], eigenvalues +-sqrt(32)
    CHECK(rep.min_selfcommutator_eig == doctest::Approx(-std::sqrt(32.0)).epsilon(1e-12));
}

TEST_CASE("normal tuple diagnostics") {
    CMatrix D = CMatrix::Zero(2, 2);
    D(0, 0) = Complex(1, 1);
    D(1, 1) = Complex(0, -2);
    TupleReport rep = tuple_diagnostics(single(D), 1e-10);
    CHECK(rep.normal);
    CHECK(rep.hyponormal);
    CHECK(rep.max_comm_residual == 0.0);
}

TEST_CASE("degree-1 HBI matches hyponormality") {
    CMatrix S(2, 2);
    S << 0, 0, 1, 0;
    CHECK_FALSE(hbi_check(single(S), 1).psd);
    CMatrix D = CMatrix::Zero(2, 2);
    D(0, 0) = 1;
    D(1, 1) = 2;
    CHECK(hbi_check(single(D), 1).psd);
    CHECK(hbi_check(single(D), 3).psd);
    CHECK_THROWS_AS(hbi_check(single(D), 0), std::invalid_argument);
    CHECK_THROWS_AS(hbi_check(single(D), 3000), std::invalid_argument);  // size cap
}

TEST_CASE("kernel of the basic degenerate tuple is {z^2, zbar^2}") {
    CVector a = CVector::Zero(1);
    CMatrix W(1, 1);
    W(0, 0) = 1.0;
    MatrixTuple T = witness_degenerate_tuple(a, W);
    KernelBasis kb = kernel_up_to_degree(T, 2);
    REQUIRE(kb.basis.size() == 2);
    // z^2 and zbar^2 lie in the span of the kernel basis
    auto in_span = [&](const HermPoly& f) {
        CVector c = CVector::Zero(static_cast<int>(kb.monomials.size()));
        for (size_t i = 0; i < kb.monomials.size(); ++i) c[i] = f.coeff(kb.monomials[i]);
        CVector proj = CVector::Zero(c.size());
        for (auto& v : kb.basis) proj += v.dot(c) * v;
        return (c - proj).norm() < 1e-9;
    };
    CHECK(in_span(parse_poly("z1^2", 1)));
    CHECK(in_span(parse_poly("zbar1^2", 1)));
    CHECK_FALSE(in_span(parse_poly("z1*zbar1", 1)));
    // kernel polynomials annihilate the tuple
    for (size_t i = 0; i < kb.basis.size(); ++i) {
        HermPoly f = kernel_polynomial(kb, static_cast<int>(i), 1);
        CHECK(hereditary_eval(f, T).norm() < 1e-12);
    }
}

TEST_CASE("diamond witness tuple annihilates I(a,b) and is not normal") {
    CVector a(1), b(1);
    a[0] = 1.0;
    b[0] = -1.0;
    MatrixTuple T = witness_diamond_tuple(a, b);
    auto f = parse_poly("0.5*z1^2 + 0.5*zbar1^2 - 1", 1);
    CHECK(hereditary_eval(f, T).norm() < 1e-12);
    TupleReport rep = tuple_diagnostics(T, 1e-10);
    CHECK_FALSE(rep.normal);
    CHECK_THROWS_AS(witness_diamond_tuple(a, a), std::invalid_argument);
}

TEST_CASE("degenerate witness tuple annihilates J(a, W^*W)") {
    CVector a(2);
    a[0] = Complex(0.5, 0);
    a[1] = Complex(0, -0.5);
    CMatrix W(1, 2);
    W << Complex(1, 0), Complex(2, 1);
    MatrixTuple T = witness_degenerate_tuple(a, W);
    // (z1 - a1)(z2 - a2) and its star vanish on J(a, U) and under psi_T
    HermPoly z1 = HermPoly::variable(2, 0), z2 = HermPoly::variable(2, 1);
    HermPoly g = (z1 - HermPoly::constant(2, a[0])) * (z2 - HermPoly::constant(2, a[1]));
    CHECK(hereditary_eval(g, T).norm() < 1e-12);
    CHECK(hereditary_eval(g.star(), T).norm() < 1e-12);
    TupleReport rep = tuple_diagnostics(T, 1e-10);
    CHECK_FALSE(rep.normal);
}

TEST_CASE("shift commutator section") {
    Eigen::MatrixXd M = shift_commutator(2);
    CHECK(M(0, 0) == 1.0);
    CHECK(M(0, 1) == -1.0);
    CHECK(M(1, 0) == -1.0);
    CHECK(M(1, 1) == 0.0);
    Eigen::MatrixXd M5 = shift_commutator(5);
    CHECK(M5.block(0, 0, 2, 2) == M);
    CHECK(M5.block(2, 2, 3, 3).norm() == 0.0);
    CHECK_THROWS_AS(shift_commutator(1), std::invalid_argument);
}
