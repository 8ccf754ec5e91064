#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hsos/certify.hpp"
#include "hsos/radial_refute.hpp"
#include "hsos/riesz_fejer.hpp"

using namespace hsos;

static const HermPoly kCircle = parse_poly("z1*zbar1 - 1", 1);

TEST_CASE("input validation") {
    CHECK_THROWS_AS(certify_sos(parse_poly("z1^2", 1), {}, CertMode::ideal, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(certify_sos(parse_poly("z1^2 + zbar1^2", 1), {}, CertMode::ideal, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(certify_sos(parse_poly("z1*zbar1", 1), {parse_poly("z1", 1)},
                                CertMode::module, 1),
                    std::invalid_argument);
}

TEST_CASE("circle certificate with verified residual") {
    auto f = parse_poly("3 - z1*zbar1", 1);
    auto res = certify_sos(f, {kCircle}, CertMode::ideal, 2);
    auto* cert = std::get_if<GramCertificate>(&res);
    REQUIRE(cert != nullptr);
    CHECK(cert->residual <= 1e-8);
    CHECK(verify_certificate(*cert, f, cert->generators) <= 1e-8);
    CHECK(is_psd_shifted(cert->gram[0], 1e-9));

    // tampering with a Gram entry shows up in the re-verification
    GramCertificate bad = *cert;
    bad.gram[0](0, 0) += 1e-3;
    CHECK(verify_certificate(bad, f, bad.generators) >= 0.9e-3);
}

TEST_CASE("monotonicity in the degree on the circle family") {
    auto f = parse_poly("2 + 0.5*z1 + 0.5*zbar1 - 0.5*z1*zbar1", 1);
    for (int d = 1; d <= 3; ++d) {
        auto res = certify_sos(f, {kCircle}, CertMode::ideal, d);
        CHECK(std::holds_alternative<GramCertificate>(res));
    }
}

TEST_CASE("hermitian-square reconstruction on the variety") {
    auto f = parse_poly("3 - z1*zbar1 + 0.25*(z1 + zbar1)", 1);
    auto res = certify_sos(f, {kCircle}, CertMode::ideal, 2);
    auto* cert = std::get_if<GramCertificate>(&res);
    REQUIRE(cert != nullptr);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(0.0, 2 * M_PI);
    for (int s = 0; s < 20; ++s) {
        CVector a(1);
        a[0] = std::polar(1.0, unif(rng));  // on V_R(zzbar - 1)
        // f(a) = m(a)^dag G m(a) since the ideal terms vanish on the variety
        CVector m(static_cast<int>(cert->bases[0].size()));
        for (size_t k = 0; k < cert->bases[0].size(); ++k)
            m[static_cast<int>(k)] = std::pow(a[0], cert->bases[0][k].alpha[0]);
        Complex quad = (m.adjoint() * cert->gram[0] * m)(0, 0);
        CHECK(std::abs(f.eval(a) - quad) < 1e-7);
    }
}

TEST_CASE("ball-module infeasibility with verified dual") {
    auto f = parse_poly("0.5 + (1 - z1*zbar1)^2", 1);
    auto ball = parse_poly("1 - z1*zbar1", 1);
    for (int d = 2; d <= 3; ++d) {
        auto res = certify_sos(f, {ball}, CertMode::module, d);
        auto* ref = std::get_if<Refutation>(&res);
        REQUIRE(ref != nullptr);
        CHECK(ref->kind == Refutation::Kind::sdp_dual);
        REQUIRE(ref->sdp.has_value());
        CHECK(ref->sdp->value_on_target < -1e-6);
        CHECK(ref->sdp->min_lifted_eig >= -1e-8);
        CHECK(ref->sdp->max_free_residual <= 1e-8);
    }
}

TEST_CASE("Motzkin-type separation via the dual path") {
    // y1^4 y2^2 + y1^2 y2^4 - 3 y1^2 y2^2 + 1 with y_j = (z_j - zbar_j)/2i is
    // nonnegative on V_R(x1, x2) but not a hermitian sum of squares mod (x1, x2)
    HermPoly y1 = (HermPoly::variable(2, 0) - HermPoly::conj_variable(2, 0)) *
                  Complex(0.0, -0.5);
    HermPoly y2 = (HermPoly::variable(2, 1) - HermPoly::conj_variable(2, 1)) *
                  Complex(0.0, -0.5);
    HermPoly f = y1.pow(4) * y2.pow(2) + y1.pow(2) * y2.pow(4) -
                 y1.pow(2) * y2.pow(2) * Complex(3.0) + HermPoly::constant(2, 1.0);
    std::vector<HermPoly> gens{parse_poly("z1 + zbar1", 2), parse_poly("z2 + zbar2", 2)};
    auto res = certify_sos(f, gens, CertMode::ideal, 3);
    auto* ref = std::get_if<Refutation>(&res);
    REQUIRE(ref != nullptr);
    CHECK(ref->kind == Refutation::Kind::sdp_dual);
}

TEST_CASE("archimedean search on the circle") {
    auto res = archimedean_search({kCircle}, 1);
    auto* cert = std::get_if<GramCertificate>(&res);
    REQUIRE(cert != nullptr);
    CHECK(cert->residual <= 1e-8);
    REQUIRE(cert->archimedean_constant.has_value());
    // the search certifies ||z||^2 + p + a in the ideal; nothing more
    HermPoly norm2 = HermPoly::variable(1, 0) * HermPoly::conj_variable(1, 0);
    CHECK(verify_certificate(*cert, norm2, cert->generators) <= 1e-8);
}

TEST_CASE("archimedean search stays unknown on the radial lemniscate") {
    // |z|^4 - |z|^2 - 1: provably not archimedean (see the radial module);
    // the search must come back empty-handed, never with a certificate
    auto f = parse_poly("z1^2*zbar1^2 - z1*zbar1 - 1", 1);
    auto res = archimedean_search({f}, 2);
    CHECK(std::holds_alternative<Unknown>(res));
}

TEST_CASE("leading form obstruction examples") {
    CHECK(leading_form_obstruction(parse_poly("z1^2 + zbar1^2 + 1", 1), {}).has_value());
    CHECK_FALSE(leading_form_obstruction(parse_poly("z1*zbar1 + 1", 1), {}).has_value());

    auto ell = parse_poly("0.625*z1*zbar1 - 0.1875*(z1^2 + zbar1^2) - 1", 1);
    auto tst = parse_poly("(z1 - 2)*(zbar1 - 2) - 0.01", 1);
    auto ref = leading_form_obstruction(tst, {ell});
    REQUIRE(ref.has_value());
    CHECK(ref->kind == Refutation::Kind::leading_form);
    REQUIRE(ref->leading.has_value());
    REQUIRE(ref->leading->negativity_witness.has_value());
    // the witness point really makes the candidate negative
    auto [pt, val] = *ref->leading->negativity_witness;
    CVector a(1);
    a[0] = pt;
    CHECK(tst.eval(a).real() == doctest::Approx(val));
    CHECK(val < 0);
}

TEST_CASE("riesz-fejer round trip") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        // random h with all roots in the open unit disc, degree <= 4
        int deg = 1 + static_cast<int>(rng() % 4);
        HermPoly h = HermPoly::constant(1, Complex(unif(rng) + 1.5, unif(rng)));
        for (int k = 0; k < deg; ++k) {
            Complex root = 0.9 * std::polar(std::abs(unif(rng)), M_PI * unif(rng));
            h = h * (HermPoly::variable(1, 0) - HermPoly::constant(1, root));
        }
        HermPoly f = h * h.star();
        RieszFejer rf = riesz_fejer(f);
        CHECK(rf.residual <= 1e-8 * (1 + f.coeff_norm()));
        CHECK(rf.circle_min >= -1e-12);
        // recovery up to a unimodular constant
        Complex num = 0.0;
        double den = 0.0;
        for (auto& [m, c] : rf.h.terms()) {
            num += std::conj(c) * h.coeff(m);
            den += std::norm(c);
        }
        REQUIRE(den > 0);
        Complex phase = num / std::abs(num);
        CHECK(std::abs(std::abs(phase) - 1.0) < 1e-7);
        double err = (h - rf.h * phase).coeff_norm();
        CHECK(err <= 1e-7 * (1 + h.coeff_norm()));
    }
}

TEST_CASE("riesz-fejer splits a mixed-sign polynomial") {
    // f = 1 + z + zbar + z zbar: on the circle |1 + z|^2
    auto f = parse_poly("1 + z1 + zbar1 + z1*zbar1", 1);
    RieszFejer rf = riesz_fejer(f);
    CHECK(rf.residual <= 1e-10);
    CHECK(rf.h.degree() == 1);
    CHECK_THROWS_AS(riesz_fejer(parse_poly("z1 + zbar1", 1)), std::invalid_argument);
    CHECK_THROWS_AS(riesz_fejer(parse_poly("z1", 1)), std::invalid_argument);
}

TEST_CASE("radial refutation matches the displayed inequalities") {
    auto r = radial_refute(2, {1, 1}, 8);
    CHECK(r.verified);
    CHECK(r.degree_independent);
    CHECK(r.combination_constant == Rational(-1));
    // I1: -1 - a_1 b_0 - a_0 b_1 >= 0
    REQUIRE(r.inequalities[0].label == "I1");
    CHECK(r.inequalities[0].constant == Rational(-1));
    CHECK(r.inequalities[0].coeffs[0] == Rational(-1));
    CHECK(r.inequalities[0].coeffs[1] == Rational(-1));
    // E_0: b_0 - a_1 b_1 - a_0 b_2 >= 0
    REQUIRE(r.inequalities[1].label == "E_0");
    CHECK(r.inequalities[1].constant == Rational(0));
    CHECK(r.inequalities[1].coeffs[0] == Rational(1));
    CHECK(r.inequalities[1].coeffs[1] == Rational(-1));
    CHECK(r.inequalities[1].coeffs[2] == Rational(-1));
    // E_1: b_1 - a_1 b_2 - a_0 b_3 >= 0
    REQUIRE(r.inequalities[2].label == "E_1");
    CHECK(r.inequalities[2].coeffs[1] == Rational(1));
    CHECK(r.inequalities[2].coeffs[2] == Rational(-1));
    CHECK(r.inequalities[2].coeffs[3] == Rational(-1));
    // Farkas multipliers are nonnegative
    for (auto& m : r.farkas) CHECK(m >= 0);
}

TEST_CASE("radial refutation edge and larger cases") {
    CHECK(radial_refute(2, {0, 0}, 8).verified);   // f = |z|^4
    CHECK(radial_refute(3, {1, 0, 1}, 10).verified);
    CHECK(radial_refute(2, {Rational(1, 2), Rational(3, 4)}, 12).verified);
    CHECK_THROWS_AS(radial_refute(1, {1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(radial_refute(2, {1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(radial_refute(2, {-1, 1}, 4), std::invalid_argument);
}
