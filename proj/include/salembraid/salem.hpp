#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "salembraid/ball.hpp"
#include "salembraid/errors.hpp"

namespace salembraid {

// Integer polynomial; coeffs_[k] is the coefficient of x^k, leading
// coefficient nonzero, degree at least 1.
class IntPoly {
public:
    explicit IntPoly(std::vector<mpz_class> ascending_coeffs);

    // Accepts either whitespace-separated integer coefficients with the
    // constant term last, or the expression syntax of the ring module in the
    // single variable x (nonnegative exponents only).
    static IntPoly from_string(const std::string& src);

    size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    bool is_monic() const { return coeffs_.back() == 1; }

    mpq_class evaluate_q(const mpq_class& x) const;
    RealBall evaluate_ball(const RealBall& x) const;
    IntPoly derivative() const;

    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    std::string str() const;

private:
    std::vector<mpz_class> coeffs_;
};

bool is_reciprocal(const IntPoly& p);

// For a monic palindromic polynomial of even degree 2d, the degree-d trace
// polynomial Q with p(x) = x^d Q(x + 1/x).
IntPoly trace_polynomial(const IntPoly& p);

// Certificate for a Salem number: the minimal polynomial together with
// rigorous enclosures of every Galois conjugate. The unit-circle conjugates
// are carried as their arguments theta_j in (0, pi), ascending.
struct SalemCert {
    IntPoly poly;
    RealBall s_ball;
    RealBall s_inv_ball;
    std::vector<RealBall> arg_balls;
    long precision_bits = 0;
};

struct NotSalem {
    // One of: NotMonic, NotReciprocal, Reducible, RootLocationFails.
    std::string reason;
    std::string detail;
};

using SalemResult = std::variant<SalemCert, NotSalem>;

SalemResult salem_check(const IntPoly& p, const Precision& pc = {});

// Certificate for s^m; degree_collapsed marks the defensive case where the
// power generates a proper subfield and the returned degree is smaller.
struct PowerResult {
    SalemCert cert;
    bool degree_collapsed = false;
};

PowerResult power(const SalemCert& cert, unsigned long m, const Precision& pc = {});

enum class ArcStatus { Certified, Unknown };

// Exponents m <= m_max whose unit-circle conjugate arguments all reduce,
// modulo 2*pi, strictly inside the open symmetric arc (-half_width,
// half_width). Exponents certified outside are omitted.
std::vector<std::pair<unsigned long, ArcStatus>> power_in_arc(const SalemCert& cert,
                                                              const RealBall& half_width,
                                                              unsigned long m_max,
                                                              const Precision& pc = {});

// Balls for s^m, s^{-m}, and e^{+-i m theta_j}, in that order (pairs by
// ascending theta, + before -).
std::vector<ComplexBall> conjugate_points(const SalemCert& cert, unsigned long m);

// Re-derives the conjugate enclosures of an already validated Salem
// polynomial at a specific working precision.
SalemCert refine_cert(const IntPoly& p, long precision_bits);

}  // namespace salembraid
