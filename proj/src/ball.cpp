#include "salembraid/ball.hpp"

#include <cstdio>
#include <utility>

namespace salembraid {

namespace {

// Upper bound for the rounding error of a correctly rounded result `x`
// computed at precision p with ternary value t: zero if the operation was
// exact, otherwise half an ulp of x.
Mpfr rounding_error(mpfr_srcptr x, int ternary) {
    Mpfr e(RealBall::kRadPrec);
    if (ternary == 0) return e;
    if (mpfr_zero_p(x) || !mpfr_number_p(x))
        throw PrecisionInsufficient("nonrepresentable rounding error");
    mpfr_set_ui_2exp(e.p(), 1, mpfr_get_exp(x) - mpfr_get_prec(x) - 1, MPFR_RNDU);
    return e;
}

void radd(Mpfr& acc, const Mpfr& x) { mpfr_add(acc.p(), acc.p(), x.p(), MPFR_RNDU); }

Mpfr rmul(const Mpfr& a, const Mpfr& b) {
    Mpfr r(RealBall::kRadPrec);
    mpfr_mul(r.p(), a.p(), b.p(), MPFR_RNDU);
    return r;
}

Mpfr rabs(mpfr_srcptr x) {
    Mpfr r(RealBall::kRadPrec);
    mpfr_abs(r.p(), x, MPFR_RNDU);
    return r;
}

void check_finite(mpfr_srcptr x) {
    if (!mpfr_number_p(x)) throw PrecisionInsufficient("overflow in ball arithmetic");
}

}  // namespace

void RealBall::absorb_rounding(int ternary) {
    if (ternary != 0) radd(rad_, rounding_error(mid_.p(), ternary));
}

RealBall RealBall::exact_int(long v, mpfr_prec_t prec) {
    RealBall r(prec);
    int t = mpfr_set_si(r.mid_.p(), v, MPFR_RNDN);
    r.absorb_rounding(t);
    return r;
}

RealBall RealBall::exact_mpz(const mpz_class& v, mpfr_prec_t prec) {
    RealBall r(prec);
    int t = mpfr_set_z(r.mid_.p(), v.get_mpz_t(), MPFR_RNDN);
    r.absorb_rounding(t);
    return r;
}

RealBall RealBall::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
    RealBall r(prec);
    int t = mpfr_set_q(r.mid_.p(), v.get_mpq_t(), MPFR_RNDN);
    check_finite(r.mid_.p());
    r.absorb_rounding(t);
    return r;
}

RealBall RealBall::pi(mpfr_prec_t prec) {
    RealBall r(prec);
    int t = mpfr_const_pi(r.mid_.p(), MPFR_RNDN);
    r.absorb_rounding(t);
    return r;
}

RealBall RealBall::from_endpoints(const Mpfr& lo, const Mpfr& hi, mpfr_prec_t prec) {
    if (mpfr_cmp(lo.p(), hi.p()) > 0)
        throw PrecisionInsufficient("from_endpoints: empty interval");
    RealBall r(prec);
    int t = mpfr_add(r.mid_.p(), lo.p(), hi.p(), MPFR_RNDN);
    mpfr_div_2si(r.mid_.p(), r.mid_.p(), 1, MPFR_RNDN);  // exact
    r.absorb_rounding(t);
    Mpfr d1(kRadPrec), d2(kRadPrec);
    mpfr_sub(d1.p(), hi.p(), r.mid_.p(), MPFR_RNDU);
    mpfr_sub(d2.p(), r.mid_.p(), lo.p(), MPFR_RNDU);
    if (mpfr_cmp(d1.p(), d2.p()) < 0) mpfr_swap(d1.p(), d2.p());
    if (mpfr_sgn(d1.p()) > 0) radd(r.rad_, d1);
    return r;
}

RealBall operator+(const RealBall& a, const RealBall& b) {
    RealBall r(std::max(a.prec(), b.prec()));
    int t = mpfr_add(r.mid_.p(), a.mid_.p(), b.mid_.p(), MPFR_RNDN);
    check_finite(r.mid_.p());
    mpfr_add(r.rad_.p(), a.rad_.p(), b.rad_.p(), MPFR_RNDU);
    r.absorb_rounding(t);
    return r;
}

RealBall operator-(const RealBall& a, const RealBall& b) {
    RealBall r(std::max(a.prec(), b.prec()));
    int t = mpfr_sub(r.mid_.p(), a.mid_.p(), b.mid_.p(), MPFR_RNDN);
    check_finite(r.mid_.p());
    mpfr_add(r.rad_.p(), a.rad_.p(), b.rad_.p(), MPFR_RNDU);
    r.absorb_rounding(t);
    return r;
}

RealBall operator*(const RealBall& a, const RealBall& b) {
    RealBall r(std::max(a.prec(), b.prec()));
    int t = mpfr_mul(r.mid_.p(), a.mid_.p(), b.mid_.p(), MPFR_RNDN);
    check_finite(r.mid_.p());
    // |x*y - mx*my| <= |mx|*ry + |my|*rx + rx*ry
    Mpfr s = rmul(rabs(a.mid_.p()), b.rad_);
    radd(s, rmul(rabs(b.mid_.p()), a.rad_));
    radd(s, rmul(a.rad_, b.rad_));
    r.rad_ = s;
    r.absorb_rounding(t);
    return r;
}

RealBall operator/(const RealBall& a, const RealBall& b) { return a * b.inv(); }

RealBall RealBall::operator-() const {
    RealBall r(*this);
    mpfr_neg(r.mid_.p(), r.mid_.p(), MPFR_RNDN);  // exact
    return r;
}

RealBall RealBall::inv() const {
    // lo = |mid| - rad rounded down must be positive, else 0 is not excluded.
    Mpfr lo(kRadPrec);
    mpfr_abs(lo.p(), mid_.p(), MPFR_RNDD);
    mpfr_sub(lo.p(), lo.p(), rad_.p(), MPFR_RNDD);
    if (mpfr_sgn(lo.p()) <= 0)
        throw PrecisionInsufficient("inv: ball does not exclude zero");
    RealBall r(prec());
    int t = mpfr_ui_div(r.mid_.p(), 1, mid_.p(), MPFR_RNDN);
    check_finite(r.mid_.p());
    // |1/x - 1/m| = |x-m| / (|x|*|m|) <= rad / (lo*|m|)
    Mpfr den(kRadPrec);
    mpfr_abs(den.p(), mid_.p(), MPFR_RNDD);
    mpfr_mul(den.p(), den.p(), lo.p(), MPFR_RNDD);
    mpfr_div(r.rad_.p(), rad_.p(), den.p(), MPFR_RNDU);
    r.absorb_rounding(t);
    return r;
}

RealBall RealBall::abs() const {
    RealBall r(*this);
    mpfr_abs(r.mid_.p(), r.mid_.p(), MPFR_RNDN);  // exact
    return r;
}

RealBall RealBall::sqrt_pos() const {
    Mpfr lo(kRadPrec);
    mpfr_set(lo.p(), mid_.p(), MPFR_RNDD);
    mpfr_sub(lo.p(), lo.p(), rad_.p(), MPFR_RNDD);
    if (mpfr_sgn(lo.p()) <= 0)
        throw PrecisionInsufficient("sqrt_pos: ball is not certified positive");
    RealBall r(prec());
    int t = mpfr_sqrt(r.mid_.p(), mid_.p(), MPFR_RNDN);
    // |sqrt(x) - sqrt(m)| <= rad / (2*sqrt(lo))
    Mpfr den(kRadPrec);
    mpfr_sqrt(den.p(), lo.p(), MPFR_RNDD);
    mpfr_mul_2si(den.p(), den.p(), 1, MPFR_RNDD);
    mpfr_div(r.rad_.p(), rad_.p(), den.p(), MPFR_RNDU);
    r.absorb_rounding(t);
    return r;
}

RealBall RealBall::sin() const {
    RealBall r(prec());
    int t = mpfr_sin(r.mid_.p(), mid_.p(), MPFR_RNDN);
    r.rad_ = rad_;  // Lipschitz constant 1
    r.absorb_rounding(t);
    return r;
}

RealBall RealBall::cos() const {
    RealBall r(prec());
    int t = mpfr_cos(r.mid_.p(), mid_.p(), MPFR_RNDN);
    r.rad_ = rad_;  // Lipschitz constant 1
    r.absorb_rounding(t);
    return r;
}

RealBall RealBall::acos() const {
    // Require |x| certifiably below 1; hi bounds sup |x|.
    Mpfr hi(kRadPrec);
    mpfr_abs(hi.p(), mid_.p(), MPFR_RNDU);
    mpfr_add(hi.p(), hi.p(), rad_.p(), MPFR_RNDU);
    if (mpfr_cmp_ui(hi.p(), 1) >= 0)
        throw PrecisionInsufficient("acos: argument not certified inside (-1, 1)");
    RealBall r(prec());
    int t = mpfr_acos(r.mid_.p(), mid_.p(), MPFR_RNDN);
    // |acos'| <= 1/sqrt(1 - hi^2) on the ball
    Mpfr w(kRadPrec);
    mpfr_mul(w.p(), hi.p(), hi.p(), MPFR_RNDU);
    mpfr_ui_sub(w.p(), 1, w.p(), MPFR_RNDD);
    if (mpfr_sgn(w.p()) <= 0)
        throw PrecisionInsufficient("acos: derivative bound degenerate");
    mpfr_sqrt(w.p(), w.p(), MPFR_RNDD);
    mpfr_div(r.rad_.p(), rad_.p(), w.p(), MPFR_RNDU);
    r.absorb_rounding(t);
    return r;
}

RealBall RealBall::pow_ui(unsigned long e) const {
    RealBall acc = RealBall::exact_int(1, prec());
    RealBall base(*this);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

RealBall RealBall::mul_z(const mpz_class& k) const {
    RealBall r(prec());
    int t = mpfr_mul_z(r.mid_.p(), mid_.p(), k.get_mpz_t(), MPFR_RNDN);
    check_finite(r.mid_.p());
    Mpfr ak(kRadPrec);
    mpfr_set_z(ak.p(), k.get_mpz_t(), MPFR_RNDU);
    mpfr_abs(ak.p(), ak.p(), MPFR_RNDU);
    mpfr_mul(r.rad_.p(), rad_.p(), ak.p(), MPFR_RNDU);
    r.absorb_rounding(t);
    return r;
}

RealBall RealBall::mul_q(const mpq_class& k) const {
    return *this * RealBall::from_mpq(k, prec());
}

RealBall RealBall::div_2exp(long e) const {
    RealBall r(*this);
    mpfr_div_2si(r.mid_.p(), r.mid_.p(), e, MPFR_RNDN);  // exact
    mpfr_div_2si(r.rad_.p(), r.rad_.p(), e, MPFR_RNDU);
    return r;
}

bool RealBall::gt_zero() const {
    Mpfr lo(kRadPrec);
    mpfr_set(lo.p(), mid_.p(), MPFR_RNDD);
    mpfr_sub(lo.p(), lo.p(), rad_.p(), MPFR_RNDD);
    return mpfr_sgn(lo.p()) > 0;
}

bool RealBall::lt_zero() const {
    Mpfr hi(kRadPrec);
    mpfr_set(hi.p(), mid_.p(), MPFR_RNDU);
    mpfr_add(hi.p(), hi.p(), rad_.p(), MPFR_RNDU);
    return mpfr_sgn(hi.p()) < 0;
}

bool RealBall::contains_mpq(const mpq_class& q) const {
    // Exact: both mid and rad are dyadic rationals.
    mpq_class m, r;
    mpfr_get_q(m.get_mpq_t(), mid_.p());
    mpfr_get_q(r.get_mpq_t(), rad_.p());
    mpq_class d = m - q;
    return ::abs(d) <= r;
}

std::optional<mpz_class> RealBall::unique_integer() const {
    if (mpfr_cmp_d(rad_.p(), 0.5) >= 0) return std::nullopt;
    Mpfr rounded(mid_.prec());
    mpfr_rint(rounded.p(), mid_.p(), MPFR_RNDN);
    mpz_class n;
    mpfr_get_z(n.get_mpz_t(), rounded.p(), MPFR_RNDN);
    if (!contains_mpq(mpq_class(n))) return std::nullopt;
    return n;
}

Mpfr RealBall::inf_down() const {
    Mpfr lo(mid_.prec() + kRadPrec);
    mpfr_sub(lo.p(), mid_.p(), rad_.p(), MPFR_RNDD);
    return lo;
}

Mpfr RealBall::sup_up() const {
    Mpfr hi(mid_.prec() + kRadPrec);
    mpfr_add(hi.p(), mid_.p(), rad_.p(), MPFR_RNDU);
    return hi;
}

std::string RealBall::str(int digits) const {
    char* m = nullptr;
    char* r = nullptr;
    mpfr_asprintf(&m, "%.*Rg", digits, mid_.p());
    mpfr_asprintf(&r, "%.3Rg", rad_.p());
    std::string out = std::string(m) + " +/- " + std::string(r);
    mpfr_free_str(m);
    mpfr_free_str(r);
    return out;
}

std::string RealBall::hex_interval() const {
    Mpfr lo = inf_down(), hi = sup_up();
    char* a = nullptr;
    char* b = nullptr;
    mpfr_asprintf(&a, "%Ra", lo.p());
    mpfr_asprintf(&b, "%Ra", hi.p());
    std::string out = std::string("[") + a + "," + b + "]";
    mpfr_free_str(a);
    mpfr_free_str(b);
    return out;
}

ComplexBall ComplexBall::from_real(const RealBall& r) {
    return ComplexBall(r, RealBall::exact_int(0, r.prec()));
}

ComplexBall ComplexBall::exact_int(long v, mpfr_prec_t prec) {
    return ComplexBall(RealBall::exact_int(v, prec), RealBall::exact_int(0, prec));
}

ComplexBall ComplexBall::unit(const RealBall& angle) {
    return ComplexBall(angle.cos(), angle.sin());
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
    return ComplexBall(a.re + b.re, a.im + b.im);
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
    return ComplexBall(a.re - b.re, a.im - b.im);
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    return ComplexBall(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) { return a * b.inv(); }

ComplexBall ComplexBall::operator-() const { return ComplexBall(-re, -im); }

ComplexBall ComplexBall::conj() const { return ComplexBall(re, -im); }

ComplexBall ComplexBall::inv() const {
    RealBall n2 = abs2();
    if (!n2.gt_zero())
        throw PrecisionInsufficient("complex inv: ball does not exclude zero");
    RealBall s = n2.inv();
    return ComplexBall(re * s, -(im * s));
}

ComplexBall ComplexBall::pow_si(long e) const {
    if (e < 0) return inv().pow_si(-e);
    ComplexBall acc = ComplexBall::exact_int(1, re.prec());
    ComplexBall base(*this);
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

RealBall ComplexBall::abs2() const { return re * re + im * im; }

RealBall ComplexBall::abs() const {
    RealBall n2 = abs2();
    Mpfr lo2 = n2.inf_down(), hi2 = n2.sup_up();
    if (mpfr_sgn(lo2.p()) < 0) mpfr_set_zero(lo2.p(), 1);
    if (mpfr_sgn(hi2.p()) < 0)
        throw PrecisionInsufficient("complex abs: negative modulus bound");
    Mpfr lo(n2.prec()), hi(n2.prec());
    mpfr_sqrt(lo.p(), lo2.p(), MPFR_RNDD);
    mpfr_sqrt(hi.p(), hi2.p(), MPFR_RNDU);
    return RealBall::from_endpoints(lo, hi, n2.prec());
}

std::string ComplexBall::str(int digits) const {
    return "(" + re.str(digits) + ") + i*(" + im.str(digits) + ")";
}

}  // namespace salembraid
