#include "hsos/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace hsos {

Monomial::Monomial(std::vector<int> a, std::vector<int> b)
    : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("monomial exponent vectors differ in length");
    for (int e : alpha)
        if (e < 0) throw std::invalid_argument("negative exponent");
    for (int e : beta)
        if (e < 0) throw std::invalid_argument("negative exponent");
}

int Monomial::degree() const {
    return std::accumulate(alpha.begin(), alpha.end(), 0) +
           std::accumulate(beta.begin(), beta.end(), 0);
}

bool Monomial::is_holomorphic() const {
    return std::all_of(beta.begin(), beta.end(), [](int e) { return e == 0; });
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.beta < b.beta;
}

HermPoly::HermPoly(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("number of variables must be positive");
}

HermPoly HermPoly::constant(int n, Complex c) {
    HermPoly f(n);
    if (c != Complex(0.0))
        f.terms_[Monomial(std::vector<int>(n, 0), std::vector<int>(n, 0))] = c;
    return f;
}

HermPoly HermPoly::variable(int n, int j) {
    if (j < 0 || j >= n) throw std::invalid_argument("variable index out of range");
    std::vector<int> a(n, 0), b(n, 0);
    a[j] = 1;
    return term(n, Monomial(a, b), 1.0);
}

HermPoly HermPoly::conj_variable(int n, int j) {
    if (j < 0 || j >= n) throw std::invalid_argument("variable index out of range");
    std::vector<int> a(n, 0), b(n, 0);
    b[j] = 1;
    return term(n, Monomial(a, b), 1.0);
}

HermPoly HermPoly::term(int n, const Monomial& m, Complex c) {
    if (m.vars() != n) throw std::invalid_argument("monomial/variable count mismatch");
    HermPoly f(n);
    if (c != Complex(0.0)) f.terms_[m] = c;
    return f;
}

int HermPoly::degree() const {
    if (terms_.empty()) return -1;
    // canonical order is graded, so the last term has the highest degree
    return terms_.rbegin()->first.degree();
}

Complex HermPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Complex(0.0) : it->second;
}

double HermPoly::coeff_norm() const {
    double r = 0.0;
    for (auto& [m, c] : terms_) r = std::max(r, std::abs(c));
    return r;
}

void HermPoly::set_coeff(const Monomial& m, Complex c) {
    if (m.vars() != n_) throw std::invalid_argument("monomial/variable count mismatch");
    if (c == Complex(0.0))
        terms_.erase(m);
    else
        terms_[m] = c;
}

void HermPoly::add_term(const Monomial& m, Complex c) {
    if (m.vars() != n_) throw std::invalid_argument("monomial/variable count mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != Complex(0.0)) terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == Complex(0.0)) terms_.erase(it);
    }
}

HermPoly HermPoly::star() const {
    HermPoly r(n_);
    for (auto& [m, c] : terms_) r.terms_[m.conjugate()] = std::conj(c);
    return r;
}

bool HermPoly::is_self_adjoint(double tol) const {
    for (auto& [m, c] : terms_) {
        Complex other = coeff(m.conjugate());
        if (std::abs(c - std::conj(other)) > tol) return false;
    }
    return true;
}

HermPoly HermPoly::operator-() const { return (*this) * Complex(-1.0); }

HermPoly HermPoly::operator+(const HermPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    HermPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

HermPoly HermPoly::operator-(const HermPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    HermPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

HermPoly HermPoly::operator*(const HermPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    HermPoly r(n_);
    for (auto& [ma, ca] : terms_) {
        for (auto& [mb, cb] : o.terms_) {
            std::vector<int> a(n_), b(n_);
            for (int j = 0; j < n_; ++j) {
                a[j] = ma.alpha[j] + mb.alpha[j];
                b[j] = ma.beta[j] + mb.beta[j];
            }
            r.add_term(Monomial(std::move(a), std::move(b)), ca * cb);
        }
    }
    return r;
}

HermPoly HermPoly::operator*(Complex c) const {
    HermPoly r(n_);
    if (c == Complex(0.0)) return r;
    for (auto& [m, coef] : terms_) r.terms_[m] = coef * c;
    return r;
}

HermPoly HermPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    HermPoly r = constant(n_, 1.0);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

static Complex ipow(Complex z, int k) {
    Complex r = 1.0;
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

Complex HermPoly::eval_pair(const CVector& a, const CVector& b) const {
    if (a.size() != n_ || b.size() != n_)
        throw std::invalid_argument("point dimension mismatch");
    Complex s = 0.0;
    for (auto& [m, c] : terms_) {
        Complex t = c;
        for (int j = 0; j < n_; ++j) {
            t *= ipow(a[j], m.alpha[j]);
            t *= ipow(b[j], m.beta[j]);
        }
        s += t;
    }
    return s;
}

Complex HermPoly::eval(const CVector& a) const { return eval_pair(a, a.conjugate()); }

Jet2 HermPoly::jet2(const CVector& a) const {
    if (a.size() != n_) throw std::invalid_argument("point dimension mismatch");
    CVector ac = a.conjugate();
    Jet2 jet;
    jet.value = eval_pair(a, ac);
    jet.grad_holo = CVector::Zero(n_);
    jet.grad_anti = CVector::Zero(n_);
    jet.levi = CMatrix::Zero(n_, n_);
    for (auto& [m, c] : terms_) {
        // base = a^alpha * conj(a)^beta with individual factors reusable
        for (int j = 0; j < n_; ++j) {
            if (m.alpha[j] > 0) {
                Complex t = c * double(m.alpha[j]);
                for (int k = 0; k < n_; ++k) {
                    t *= ipow(a[k], m.alpha[k] - (k == j ? 1 : 0));
                    t *= ipow(ac[k], m.beta[k]);
                }
                jet.grad_holo[j] += t;
            }
            if (m.beta[j] > 0) {
                Complex t = c * double(m.beta[j]);
                for (int k = 0; k < n_; ++k) {
                    t *= ipow(a[k], m.alpha[k]);
                    t *= ipow(ac[k], m.beta[k] - (k == j ? 1 : 0));
                }
                jet.grad_anti[j] += t;
            }
            for (int k = 0; k < n_; ++k) {
                if (m.alpha[j] > 0 && m.beta[k] > 0) {
                    Complex t = c * double(m.alpha[j]) * double(m.beta[k]);
                    for (int l = 0; l < n_; ++l) {
                        t *= ipow(a[l], m.alpha[l] - (l == j ? 1 : 0));
                        t *= ipow(ac[l], m.beta[l] - (l == k ? 1 : 0));
                    }
                    jet.levi(j, k) += t;
                }
            }
        }
    }
    return jet;
}

HermPoly HermPoly::leading_form() const {
    if (terms_.empty()) throw std::invalid_argument("leading form of zero polynomial");
    int d = degree();
    HermPoly r(n_);
    for (auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_[m] = c;
    return r;
}

// ---------------------------------------------------------------------------
// printing

static std::string format_double(double x) {
    char buf[40];
    // shortest representation that round-trips
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
        if (std::stod(buf) == x) break;
    }
    return buf;
}

static std::string format_coeff(Complex c) {
    double re = c.real(), im = c.imag();
    if (im == 0.0) return format_double(re);
    if (re == 0.0) {
        if (im == 1.0) return "i";
        if (im == -1.0) return "-i";
        return format_double(im) + "i";
    }
    std::string s = "(" + format_double(re);
    if (im > 0) s += "+";
    if (im == 1.0)
        s += "i)";
    else if (im == -1.0)
        s += "-i)";
    else
        s += format_double(im) + "i)";
    return s;
}

std::string to_string(const Monomial& m) {
    std::string s;
    auto app = [&](const std::string& name, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += name;
        if (e > 1) s += "^" + std::to_string(e);
    };
    for (int j = 0; j < m.vars(); ++j) app("z" + std::to_string(j + 1), m.alpha[j]);
    for (int j = 0; j < m.vars(); ++j) app("zbar" + std::to_string(j + 1), m.beta[j]);
    return s.empty() ? "1" : s;
}

std::string HermPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [m, c] : terms_) {
        std::string mono = hsos::to_string(m);
        Complex coef = c;
        bool negative = (coef.imag() == 0.0 && coef.real() < 0) ||
                        (coef.real() == 0.0 && coef.imag() < 0);
        if (negative) coef = -coef;
        if (s.empty()) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        if (mono == "1") {
            s += format_coeff(coef);
        } else if (coef == Complex(1.0)) {
            s += mono;
        } else {
            s += format_coeff(coef) + "*" + mono;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// parser

ParseError::ParseError(const std::string& msg, size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}

namespace {

class Parser {
public:
    Parser(const std::string& text, int n) : text_(text), n_(n) {}

    HermPoly parse() {
        HermPoly r = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return r;
    }

private:
    const std::string& text_;
    int n_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    HermPoly expr() {
        bool neg = false;
        skip_ws();
        if (accept('-'))
            neg = true;
        else
            accept('+');
        HermPoly r = term();
        if (neg) r = -r;
        while (true) {
            if (accept('+'))
                r = r + term();
            else if (accept('-'))
                r = r - term();
            else
                break;
        }
        return r;
    }

    HermPoly term() {
        HermPoly r = factor();
        while (accept('*')) r = r * factor();
        return r;
    }

    HermPoly factor() {
        HermPoly base = primary();
        if (accept('^')) {
            skip_ws();
            size_t start = pos_;
            int e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                e = e * 10 + (text_[pos_++] - '0');
            if (pos_ == start) throw ParseError("expected exponent", pos_);
            base = base.pow(e);
        }
        return base;
    }

    int parse_index() {
        size_t start = pos_;
        long idx = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            idx = idx * 10 + (text_[pos_++] - '0');
        if (pos_ == start) throw ParseError("expected variable index", pos_);
        if (idx < 1 || idx > n_)
            throw ParseError("variable index out of range (n=" + std::to_string(n_) + ")", start);
        return static_cast<int>(idx - 1);
    }

    HermPoly primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return -primary();
        }
        if (c == '(') {
            ++pos_;
            HermPoly r = expr();
            expect(')');
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                    text_[pos_] == 'e' || text_[pos_] == 'E' ||
                    ((text_[pos_] == '+' || text_[pos_] == '-') &&
                     (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E'))))
                ++pos_;
            double v;
            try {
                v = std::stod(text_.substr(start, pos_ - start));
            } catch (const std::exception&) {
                throw ParseError("malformed number", start);
            }
            if (pos_ < text_.size() && text_[pos_] == 'i') {
                ++pos_;
                return HermPoly::constant(n_, Complex(0.0, v));
            }
            return HermPoly::constant(n_, Complex(v, 0.0));
        }
        if (text_.compare(pos_, 4, "conj") == 0) {
            pos_ += 4;
            expect('(');
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != 'z')
                throw ParseError("conj() expects a variable", pos_);
            ++pos_;
            int j = parse_index();
            expect(')');
            return HermPoly::conj_variable(n_, j);
        }
        if (text_.compare(pos_, 4, "zbar") == 0) {
            pos_ += 4;
            return HermPoly::conj_variable(n_, parse_index());
        }
        if (c == 'z') {
            ++pos_;
            return HermPoly::variable(n_, parse_index());
        }
        if (c == 'i' &&
            (pos_ + 1 == text_.size() ||
             !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
            ++pos_;
            return HermPoly::constant(n_, Complex(0.0, 1.0));
        }
        throw ParseError("unexpected character", pos_);
    }
};

}  // namespace

HermPoly parse_poly(const std::string& text, int n) {
    return Parser(text, n).parse();
}

// ---------------------------------------------------------------------------
// monomial enumeration

static void enumerate_exponents(int slots, int budget, std::vector<int>& cur,
                                std::vector<std::vector<int>>& out) {
    if (cur.size() == static_cast<size_t>(slots)) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= budget; ++e) {
        cur.push_back(e);
        enumerate_exponents(slots, budget - e, cur, out);
        cur.pop_back();
    }
}

std::vector<Monomial> monomials_up_to(int n, int d) {
    std::vector<std::vector<int>> expos;
    std::vector<int> cur;
    enumerate_exponents(2 * n, d, cur, expos);
    std::vector<Monomial> out;
    out.reserve(expos.size());
    for (auto& e : expos)
        out.emplace_back(std::vector<int>(e.begin(), e.begin() + n),
                         std::vector<int>(e.begin() + n, e.end()));
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return MonomialOrder()(a, b);
    });
    return out;
}

std::vector<Monomial> holo_monomials_up_to(int n, int d) {
    std::vector<std::vector<int>> expos;
    std::vector<int> cur;
    enumerate_exponents(n, d, cur, expos);
    std::vector<Monomial> out;
    out.reserve(expos.size());
    for (auto& e : expos) out.emplace_back(e, std::vector<int>(n, 0));
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return MonomialOrder()(a, b);
    });
    return out;
}

}  // namespace hsos
