#pragma once

#include <cstdio>

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <vector>

#include "salembraid/errors.hpp"

namespace salembraid {

// RAII wrapper for a single mpfr_t with value semantics.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Mpfr() : Mpfr(64) {}
    Mpfr(const Mpfr& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Mpfr(Mpfr&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    Mpfr& operator=(Mpfr o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Mpfr() { mpfr_clear(v_); }

    mpfr_ptr p() { return v_; }
    mpfr_srcptr p() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    int sgn() const { return mpfr_sgn(v_); }
    double d() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

// Rigorous real ball: the represented value lies in [mid - rad, mid + rad].
// mid carries the working precision; rad is kept at a fixed low precision
// and every operation on it rounds upward, so containment is preserved by
// all arithmetic below.  Center operations use MPFR's correctly rounded
// primitives and account for their half-ulp rounding error through the
// ternary value.
class RealBall {
public:
    static constexpr mpfr_prec_t kRadPrec = 64;

    RealBall() : RealBall(64) {}
    explicit RealBall(mpfr_prec_t prec) : mid_(prec), rad_(kRadPrec) {}

    static RealBall exact_int(long v, mpfr_prec_t prec);
    static RealBall exact_mpz(const mpz_class& v, mpfr_prec_t prec);
    static RealBall from_mpq(const mpq_class& v, mpfr_prec_t prec);
    static RealBall pi(mpfr_prec_t prec);
    // Ball covering [lo, hi]; endpoints are taken as exact.
    static RealBall from_endpoints(const Mpfr& lo, const Mpfr& hi, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mid_.prec(); }
    const Mpfr& mid() const { return mid_; }
    const Mpfr& rad() const { return rad_; }
    bool is_exact() const { return mpfr_zero_p(rad_.p()); }

    friend RealBall operator+(const RealBall& a, const RealBall& b);
    friend RealBall operator-(const RealBall& a, const RealBall& b);
    friend RealBall operator*(const RealBall& a, const RealBall& b);
    friend RealBall operator/(const RealBall& a, const RealBall& b);
    RealBall operator-() const;

    RealBall inv() const;       // throws PrecisionInsufficient if 0 is not excluded
    RealBall abs() const;
    RealBall sqrt_pos() const;  // requires a certified positive ball
    RealBall sin() const;
    RealBall cos() const;
    RealBall acos() const;      // requires |x| certifiably < 1
    RealBall pow_ui(unsigned long e) const;
    RealBall mul_z(const mpz_class& k) const;
    RealBall mul_q(const mpq_class& k) const;
    RealBall div_2exp(long e) const;  // exact scaling by 2^-e

    // Certified sign queries.  gt_zero/lt_zero only answer true when the
    // whole ball lies on that side of zero; contains_zero is the honest
    // complement (true when the sign cannot be certified).
    bool gt_zero() const;
    bool lt_zero() const;
    bool contains_zero() const { return !gt_zero() && !lt_zero(); }
    bool gt(const RealBall& o) const { return (*this - o).gt_zero(); }
    bool lt(const RealBall& o) const { return (o - *this).gt_zero(); }

    // Exact containment test against a rational (no rounding involved).
    bool contains_mpq(const mpq_class& q) const;
    // If rad < 1/2 and the ball contains an integer, that integer is unique;
    // returns it, or nullopt when no integer is enclosed.
    std::optional<mpz_class> unique_integer() const;

    Mpfr inf_down() const;  // certified lower bound (rounded down)
    Mpfr sup_up() const;    // certified upper bound (rounded up)
    double mid_d() const { return mid_.d(); }
    double rad_d() const { return rad_.d(); }

    std::string str(int digits = 20) const;
    // "[<hex-float lower>,<hex-float upper>]", loss-free endpoints.
    std::string hex_interval() const;

private:
    Mpfr mid_;
    Mpfr rad_;

    // Adds the rounding error implied by a ternary value to rad_.
    void absorb_rounding(int ternary);
    friend class ComplexBall;
};

// Rectangular complex ball.
class ComplexBall {
public:
    RealBall re, im;

    ComplexBall() = default;
    ComplexBall(RealBall r, RealBall i) : re(std::move(r)), im(std::move(i)) {}

    static ComplexBall from_real(const RealBall& r);
    static ComplexBall exact_int(long v, mpfr_prec_t prec);
    // e^{i*angle}
    static ComplexBall unit(const RealBall& angle);

    friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
    ComplexBall operator-() const;

    ComplexBall conj() const;
    ComplexBall inv() const;  // throws PrecisionInsufficient if 0 is not excluded
    ComplexBall pow_si(long e) const;
    RealBall abs2() const;
    RealBall abs() const;

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool contains_gaussian(const mpq_class& x, const mpq_class& y) const {
        return re.contains_mpq(x) && im.contains_mpq(y);
    }

    std::string str(int digits = 20) const;
};

}  // namespace salembraid
