#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "salembraid/ball.hpp"
#include "salembraid/errors.hpp"

namespace salembraid {

class Vars;
using VarsPtr = std::shared_ptr<const Vars>;

// Ordered variable declaration together with the bar involution: inverted
// variables map to their reciprocals, fixed variables stay put.  Every
// element of a ring shares one Vars object; mixing rings is an error.
class Vars {
public:
    struct Decl {
        std::string name;
        bool inverted;
    };

    static VarsPtr make(std::vector<Decl> decls);

    size_t size() const { return decls_.size(); }
    const std::string& name(size_t i) const { return decls_[i].name; }
    bool inverted(size_t i) const { return decls_[i].inverted; }
    std::optional<size_t> find(const std::string& name) const;
    bool operator==(const Vars& o) const;

private:
    std::vector<Decl> decls_;
    explicit Vars(std::vector<Decl> decls) : decls_(std::move(decls)) {}
};

void require_same_vars(const VarsPtr& a, const VarsPtr& b);

// Exponent vector, one slot per declared variable; entries may be negative.
using Exps = std::vector<int>;

// Exact complex rational, used for evaluation at Gaussian rational points
// (for instance t = 1 or (a, L) = (i, 1)) where ball radii would obscure an
// exact equality.
struct GaussianRational {
    mpq_class re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational inv() const;
    GaussianRational pow(long e) const;
};

// Multivariate Laurent polynomial with unbounded integer coefficients.
// Terms are kept in a map ordered lexicographically on exponent vectors,
// with no stored zero coefficients.
class LaurentPoly {
public:
    using Terms = std::map<Exps, mpz_class>;

    explicit LaurentPoly(VarsPtr vars) : vars_(std::move(vars)) {}
    static LaurentPoly constant(VarsPtr vars, mpz_class c);
    static LaurentPoly variable(VarsPtr vars, size_t idx, int exp = 1);
    static LaurentPoly monomial(VarsPtr vars, mpz_class c, Exps e);
    static LaurentPoly from_terms(VarsPtr vars, Terms t);

    const VarsPtr& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() <= 1; }
    // True for units of the Laurent ring: +-1 times a monomial.
    bool is_unit() const;
    std::optional<mpz_class> constant_value() const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const;

    LaurentPoly bar() const;  // the involution from vars()
    LaurentPoly pow(long e) const;
    LaurentPoly mul_mpz(const mpz_class& c) const;

    // Per-variable minimum exponent over all terms (zero polynomial: all 0).
    Exps min_exps() const;
    // Multiply by the monomial with exponent vector delta.
    LaurentPoly shift(const Exps& delta) const;

    mpz_class content() const;  // gcd of coefficients, nonnegative
    int lead_sign() const;      // sign of the lex-largest term, 0 for zero
    long total_degree() const;  // max over terms of sum of |exponents|

    ComplexBall evaluate(const std::vector<ComplexBall>& point) const;
    GaussianRational evaluate_gaussian(const std::vector<GaussianRational>& point) const;

    std::string str() const;

private:
    VarsPtr vars_;
    Terms terms_;
};

// Greatest common divisor in the Laurent ring, canonically normalized: an
// ordinary polynomial with minimum exponent 0 in every variable, positive
// leading coefficient, and content equal to gcd of the contents.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);
// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

// Element of the fraction field, kept in canonical lowest terms: den is an
// ordinary polynomial (minimum exponent 0 per variable) with positive
// leading coefficient, coprime to num; monomial units live in num.
class RatFunc {
public:
    explicit RatFunc(VarsPtr vars) : num_(vars), den_(LaurentPoly::constant(vars, 1)) {}
    RatFunc(LaurentPoly num);  // NOLINT: implicit lift is intended
    RatFunc(LaurentPoly num, LaurentPoly den);
    static RatFunc constant(VarsPtr vars, const mpq_class& q);
    static RatFunc variable(VarsPtr vars, size_t idx, int exp = 1);

    const VarsPtr& vars() const { return num_.vars(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    // The underlying Laurent polynomial when den = 1.
    std::optional<LaurentPoly> as_laurent() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const;  // canonical forms, structural

    RatFunc inv() const;  // throws SingularMatrix on zero
    RatFunc bar() const;
    RatFunc pow(long e) const;

    ComplexBall evaluate(const std::vector<ComplexBall>& point) const;
    GaussianRational evaluate_gaussian(const std::vector<GaussianRational>& point) const;

    std::string str() const;

private:
    LaurentPoly num_, den_;
    void normalize();
};

// Square matrix of complex balls (the result of evaluating a RingMatrix).
struct BallMatrix {
    size_t n = 0;
    std::vector<ComplexBall> e;

    BallMatrix() = default;
    explicit BallMatrix(size_t dim) : n(dim), e(dim * dim) {}
    static BallMatrix identity(size_t dim, mpfr_prec_t prec);

    ComplexBall& at(size_t i, size_t j) { return e[i * n + j]; }
    const ComplexBall& at(size_t i, size_t j) const { return e[i * n + j]; }

    friend BallMatrix operator*(const BallMatrix& a, const BallMatrix& b);
    friend BallMatrix operator-(const BallMatrix& a, const BallMatrix& b);
    bool contains_zero() const;  // every entry encloses 0
};

// Square matrix over the fraction field with the shared involution.
class RingMatrix {
public:
    RingMatrix(VarsPtr vars, size_t dim);
    static RingMatrix identity(VarsPtr vars, size_t dim);

    size_t dim() const { return dim_; }
    const VarsPtr& vars() const { return vars_; }
    RatFunc& at(size_t i, size_t j) { return entries_[i * dim_ + j]; }
    const RatFunc& at(size_t i, size_t j) const { return entries_[i * dim_ + j]; }

    friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b);
    friend RingMatrix operator-(const RingMatrix& a, const RingMatrix& b);
    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
    bool operator==(const RingMatrix& o) const;

    RingMatrix scale(const RatFunc& c) const;
    RingMatrix transpose() const;
    RingMatrix bar() const;   // entrywise involution
    RingMatrix star() const;  // transpose with entrywise involution
    bool is_zero() const;

    RatFunc determinant() const;  // fraction-free (Bareiss) elimination
    RingMatrix inverse() const;   // throws SingularMatrix

    BallMatrix evaluate(const std::vector<ComplexBall>& point) const;
    std::vector<GaussianRational> evaluate_gaussian(
        const std::vector<GaussianRational>& point) const;  // row-major

private:
    VarsPtr vars_;
    size_t dim_;
    std::vector<RatFunc> entries_;
};

// Basis of the right nullspace of a rectangular matrix over the fraction
// field.  The forward pass is fraction-free on denominator-cleared rows;
// each basis vector has its first nonzero coordinate normalized to 1.
std::vector<std::vector<RatFunc>> nullspace(const std::vector<std::vector<RatFunc>>& rows,
                                            const VarsPtr& vars, size_t width);

// Expression parser for the canonical syntax: integers, declared variable
// names, + - * / ^ with integer (possibly negative) exponents, parentheses.
// line_base seeds error positions when the text comes from a larger file.
RatFunc parse_ratfunc(const std::string& src, const VarsPtr& vars, int line_base = 1);
LaurentPoly parse_laurent(const std::string& src, const VarsPtr& vars, int line_base = 1);

}  // namespace salembraid
