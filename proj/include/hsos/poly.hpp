#pragma once

// Sparse polynomials in z_1..z_n, zbar_1..zbar_n with complex coefficients,
// together with the conjugation involution z_j^* = zbar_j, evaluation at
// point pairs, formal derivatives and leading forms.

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hsos {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Exponent pair z^alpha * zbar^beta.
struct Monomial {
    std::vector<int> alpha;  // holomorphic exponents
    std::vector<int> beta;   // antiholomorphic exponents

    Monomial() = default;
    Monomial(std::vector<int> a, std::vector<int> b);

    int vars() const { return static_cast<int>(alpha.size()); }
    int degree() const;
    bool is_holomorphic() const;
    Monomial conjugate() const { return Monomial(beta, alpha); }

    bool operator==(const Monomial& o) const {
        return alpha == o.alpha && beta == o.beta;
    }
};

// Graded lexicographic order on (alpha, beta) concatenated. Fixes the
// canonical printing/term order; nothing downstream depends on the choice.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Second-order jet of f at (a, conj(a)).
struct Jet2 {
    Complex value;
    CVector grad_holo;  // d f / d z_j
    CVector grad_anti;  // d f / d zbar_j
    CMatrix levi;       // d^2 f / (d z_j d zbar_k)
};

class HermPoly {
public:
    using TermMap = std::map<Monomial, Complex, MonomialOrder>;

    explicit HermPoly(int n);

    static HermPoly constant(int n, Complex c);
    static HermPoly variable(int n, int j);       // z_{j+1}, 0-based j
    static HermPoly conj_variable(int n, int j);  // zbar_{j+1}
    static HermPoly term(int n, const Monomial& m, Complex c);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    const TermMap& terms() const { return terms_; }
    Complex coeff(const Monomial& m) const;
    double coeff_norm() const;  // max |c| over stored terms

    void set_coeff(const Monomial& m, Complex c);
    void add_term(const Monomial& m, Complex c);

    HermPoly star() const;
    bool is_self_adjoint(double tol = 0.0) const;

    HermPoly operator-() const;
    HermPoly operator+(const HermPoly& o) const;
    HermPoly operator-(const HermPoly& o) const;
    HermPoly operator*(const HermPoly& o) const;
    HermPoly operator*(Complex c) const;
    HermPoly pow(int k) const;

    bool operator==(const HermPoly& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

    Complex eval_pair(const CVector& a, const CVector& b) const;
    Complex eval(const CVector& a) const;  // eval_pair(a, conj(a))
    Jet2 jet2(const CVector& a) const;

    HermPoly leading_form() const;  // throws on zero polynomial

    std::string to_string() const;

private:
    int n_;
    TermMap terms_;
};

inline HermPoly operator*(Complex c, const HermPoly& f) { return f * c; }

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos);
};

// Grammar: variables z1..zN, conjugates zbar1..zbarN (alias conj(zK));
// operators + - * ^; parentheses; literals 3, 2.5, i, (1+2i).
HermPoly parse_poly(const std::string& text, int n);

std::string to_string(const Monomial& m);

// All monomials of total degree <= d, in canonical order.
std::vector<Monomial> monomials_up_to(int n, int d);
// Holomorphic monomials (beta = 0) of total degree <= d.
std::vector<Monomial> holo_monomials_up_to(int n, int d);

}  // namespace hsos
