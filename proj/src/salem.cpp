#include "salembraid/salem.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

#include "salembraid/ring.hpp"

namespace salembraid {

// ------------------------------------------------------------- IntPoly ----

IntPoly::IntPoly(std::vector<mpz_class> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty() || (coeffs_.size() == 1 && coeffs_[0] == 0))
        throw Error("IntPoly: zero polynomial");
}

IntPoly IntPoly::from_string(const std::string& src) {
    const bool expression = src.find('x') != std::string::npos;
    if (expression) {
        auto vars = Vars::make({{"x", false}});
        LaurentPoly p = parse_laurent(src, vars);
        if (p.is_zero()) throw ParseError("zero polynomial", 1, 1);
        long maxdeg = 0;
        for (const auto& [e, c] : p.terms()) {
            (void)c;
            if (e[0] < 0) throw ParseError("negative exponent in integer polynomial", 1, 1);
            maxdeg = std::max(maxdeg, static_cast<long>(e[0]));
        }
        std::vector<mpz_class> coeffs(static_cast<size_t>(maxdeg) + 1);
        for (const auto& [e, c] : p.terms()) coeffs[static_cast<size_t>(e[0])] = c;
        if (coeffs.size() < 2) throw ParseError("degree must be at least 1", 1, 1);
        return IntPoly(std::move(coeffs));
    }
    std::istringstream in(src);
    std::vector<mpz_class> lead_first;
    std::string tok;
    while (in >> tok) {
        try {
            lead_first.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad integer coefficient '" + tok + "'", 1, 1);
        }
    }
    while (!lead_first.empty() && lead_first.front() == 0) lead_first.erase(lead_first.begin());
    if (lead_first.size() < 2) throw ParseError("degree must be at least 1", 1, 1);
    std::vector<mpz_class> coeffs(lead_first.rbegin(), lead_first.rend());
    return IntPoly(std::move(coeffs));
}

mpq_class IntPoly::evaluate_q(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
}

RealBall IntPoly::evaluate_ball(const RealBall& x) const {
    const mpfr_prec_t p = x.prec();
    RealBall acc = RealBall::exact_int(0, p);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + RealBall::exact_mpz(*it, p);
    return acc;
}

IntPoly IntPoly::derivative() const {
    std::vector<mpz_class> d;
    for (size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
    return IntPoly(std::move(d));
}

std::string IntPoly::str() const {
    auto vars = Vars::make({{"x", false}});
    LaurentPoly p(vars);
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0)
            p = p + LaurentPoly::monomial(vars, coeffs_[k], {static_cast<int>(k)});
    return p.str();
}

bool is_reciprocal(const IntPoly& p) {
    const auto& c = p.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != c[c.size() - 1 - i]) return false;
    return true;
}

IntPoly trace_polynomial(const IntPoly& p) {
    assert(is_reciprocal(p) && p.degree() % 2 == 0);
    const size_t d = p.degree() / 2;
    const auto& c = p.coeffs();
    // V_k(y) with x^k + x^-k = V_k(x + 1/x): V_0 = 2, V_1 = y,
    // V_k = y V_{k-1} - V_{k-2}.
    std::vector<std::vector<mpz_class>> V(d + 1);
    V[0] = {2};
    if (d >= 1) V[1] = {0, 1};
    for (size_t k = 2; k <= d; ++k) {
        V[k].assign(k + 1, 0);
        for (size_t i = 0; i < V[k - 1].size(); ++i) V[k][i + 1] += V[k - 1][i];
        for (size_t i = 0; i < V[k - 2].size(); ++i) V[k][i] -= V[k - 2][i];
    }
    std::vector<mpz_class> q(d + 1, 0);
    q[0] = c[d];
    for (size_t k = 1; k <= d; ++k)
        for (size_t i = 0; i < V[k].size(); ++i) q[i] += c[d + k] * V[k][i];
    return IntPoly(std::move(q));
}

// ------------------------------------------- exact Sturm root location ----

namespace {

using QPoly = std::vector<mpq_class>;  // ascending, trimmed

QPoly qtrim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

long qdeg(const QPoly& p) { return static_cast<long>(p.size()) - 1; }

mpq_class qeval(const QPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly qderiv(const QPoly& p) {
    QPoly d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    return qtrim(std::move(d));
}

QPoly qrem(QPoly a, const QPoly& b) {
    while (qdeg(a) >= qdeg(b)) {
        mpq_class f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        a = qtrim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

// Sturm chain of a rational polynomial; counts real roots exactly.
struct Sturm {
    std::vector<QPoly> seq;

    explicit Sturm(const QPoly& q) {
        seq.push_back(qtrim(q));
        QPoly d = qderiv(q);
        if (!d.empty()) seq.push_back(d);
        while (seq.back().size() > 1) {
            QPoly r = qrem(seq[seq.size() - 2], seq.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            seq.push_back(std::move(r));
        }
    }

    // gcd(q, q') is the last nonzero remainder; constant iff squarefree
    bool squarefree() const { return seq.back().size() == 1; }

    static long variations(const std::vector<int>& signs) {
        long v = 0;
        int prev = 0;
        for (int s : signs) {
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    long var_at(const mpq_class& x) const {
        std::vector<int> signs;
        for (const auto& p : seq) signs.push_back(sgn(qeval(p, x)));
        return variations(signs);
    }

    long var_at_pinf() const {
        std::vector<int> signs;
        for (const auto& p : seq) signs.push_back(sgn(p.back()));
        return variations(signs);
    }

    // Number of roots in the open interval; endpoints must not be roots.
    long count_open(const mpq_class& a, const mpq_class& b) const {
        assert(qeval(seq[0], a) != 0 && qeval(seq[0], b) != 0);
        return var_at(a) - var_at(b);
    }
};

// Exclusive upper bound on root magnitudes.
mpq_class cauchy_bound(const QPoly& p) {
    mpq_class m = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        mpq_class t = abs(p[i] / p.back());
        if (t > m) m = t;
    }
    return m + 1;
}

struct Bracket {
    mpq_class a, b;  // sign change across (a, b), exactly one root inside
};

void isolate_rec(const Sturm& st, const QPoly& q, const mpq_class& lo, const mpq_class& hi,
                 std::vector<Bracket>& out) {
    long n = st.count_open(lo, hi);
    if (n == 0) return;
    if (n == 1 && sgn(qeval(q, lo)) * sgn(qeval(q, hi)) < 0) {
        out.push_back({lo, hi});
        return;
    }
    // Split at a non-root interior point; a rational root at the first try
    // is bracketed by shrinking a window around it.
    mpq_class m = (lo + hi) / 2;
    if (qeval(q, m) == 0) {
        mpq_class eps = (hi - lo) / 4;
        while (st.count_open(m - eps, m + eps) != 1 || qeval(q, m - eps) == 0 ||
               qeval(q, m + eps) == 0)
            eps /= 2;
        out.push_back({m - eps, m + eps});
        isolate_rec(st, q, lo, m - eps, out);
        isolate_rec(st, q, m + eps, hi, out);
        return;
    }
    isolate_rec(st, q, lo, m, out);
    isolate_rec(st, q, m, hi, out);
}

std::vector<Bracket> isolate(const Sturm& st, const QPoly& q, const mpq_class& lo,
                             const mpq_class& hi) {
    std::vector<Bracket> out;
    isolate_rec(st, q, lo, hi, out);
    std::sort(out.begin(), out.end(), [](const Bracket& x, const Bracket& y) { return x.a < y.a; });
    return out;
}

mpq_class mpq_from_mpfr(mpfr_srcptr x) {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
}

RealBall interval_ball(const mpq_class& a, const mpq_class& b, long prec) {
    Mpfr lo(prec), hi(prec);
    mpfr_set_q(lo.p(), a.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.p(), b.get_mpq_t(), MPFR_RNDU);
    return RealBall::from_endpoints(lo, hi, prec);
}

std::optional<RealBall> intersect(const RealBall& x, const RealBall& y, long prec) {
    Mpfr xl = x.inf_down(), xh = x.sup_up(), yl = y.inf_down(), yh = y.sup_up();
    const Mpfr& lo = mpfr_cmp(xl.p(), yl.p()) >= 0 ? xl : yl;
    const Mpfr& hi = mpfr_cmp(xh.p(), yh.p()) <= 0 ? xh : yh;
    if (mpfr_cmp(lo.p(), hi.p()) > 0) return std::nullopt;
    return RealBall::from_endpoints(lo, hi, prec);
}

bool rad_below_2exp(const RealBall& x, long e) {
    Mpfr t(64);
    mpfr_set_ui_2exp(t.p(), 1, e, MPFR_RNDN);
    return mpfr_cmp(x.rad().p(), t.p()) < 0;
}

// Certified enclosure of the single simple root inside the bracket, with
// radius below 2^(16-prec). Interval Newton after the bracket is tight;
// exact rational bisection both seeds it and serves as the fallback, so the
// result never depends on Newton converging.
RealBall refine_root(const IntPoly& q, const IntPoly& dq, Bracket br, long prec) {
    mpq_class width = br.b - br.a;
    int sa = sgn(q.evaluate_q(br.a));
    auto bisect_until = [&](const mpq_class& target) {
        while (br.b - br.a > target) {
            mpq_class m = (br.a + br.b) / 2;
            mpq_class v = q.evaluate_q(m);
            if (v == 0) {
                br.a = br.b = m;
                return;
            }
            if (sgn(v) == sa)
                br.a = m;
            else
                br.b = m;
        }
    };
    bisect_until(width / 64);
    if (br.a == br.b) return RealBall::from_mpq(br.a, prec);

    RealBall I = interval_ball(br.a, br.b, prec);
    for (int iter = 0; iter < 64; ++iter) {
        if (rad_below_2exp(I, 16 - prec)) return I;
        RealBall mid = RealBall::from_mpq(mpq_from_mpfr(I.mid().p()), prec);
        RealBall dqI = dq.evaluate_ball(I);
        if (dqI.contains_zero()) break;
        RealBall N = mid - q.evaluate_ball(mid) / dqI;
        auto I2 = intersect(N, I, prec);
        if (!I2) break;
        // stop once contraction stalls at the evaluation noise floor
        Mpfr prev_rad = I.rad();
        I = *I2;
        if (mpfr_cmp(I.rad().p(), prev_rad.p()) >= 0) break;
    }
    if (rad_below_2exp(I, 16 - prec)) return I;
    // fallback: exact bisection all the way down
    mpq_class target(1);
    for (long i = 0; i < prec - 16; ++i) target /= 2;
    bisect_until(target);
    if (br.a == br.b) return RealBall::from_mpq(br.a, prec);
    return interval_ball(br.a, br.b, prec);
}

// Exact division in Z[x] by a monic polynomial; true iff remainder is zero.
bool zdivides(const std::vector<mpz_class>& p, const std::vector<mpz_class>& f,
              std::vector<mpz_class>* quotient = nullptr) {
    assert(f.back() == 1);
    std::vector<mpz_class> r = p;
    std::vector<mpz_class> q(p.size() >= f.size() ? p.size() - f.size() + 1 : 0, 0);
    while (r.size() >= f.size()) {
        mpz_class c = r.back();
        size_t off = r.size() - f.size();
        if (c != 0) {
            q[off] = c;
            for (size_t i = 0; i < f.size(); ++i) r[off + i] -= c * f[i];
        }
        assert(r.back() == 0);
        r.pop_back();
    }
    for (const auto& c : r)
        if (c != 0) return false;
    if (quotient) *quotient = std::move(q);
    return true;
}

std::vector<RealBall> ball_poly_mul(const std::vector<RealBall>& a, const std::vector<RealBall>& b,
                                    long prec) {
    std::vector<RealBall> r(a.size() + b.size() - 1, RealBall::exact_int(0, prec));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

// Enclosures for all conjugates of an already located Salem polynomial.
SalemCert build_cert(const IntPoly& p, const IntPoly& q, const Bracket& br_s,
                     const std::vector<Bracket>& br_mid, long prec) {
    IntPoly dq = q.derivative();
    RealBall y0 = refine_root(q, dq, br_s, prec);
    RealBall s =
        (y0 + (y0 * y0 - RealBall::exact_int(4, prec)).sqrt_pos()).div_2exp(1);
    if (!s.gt(RealBall::exact_int(1, prec)))
        throw PrecisionInsufficient("Salem root enclosure touches 1");
    RealBall s_inv = s.inv();
    if (!s_inv.gt_zero() || !s_inv.lt(RealBall::exact_int(1, prec)))
        throw PrecisionInsufficient("inverse root enclosure not inside (0,1)");

    std::vector<RealBall> args;
    for (const auto& br : br_mid) {
        RealBall y = refine_root(q, dq, br, prec);
        args.push_back(y.div_2exp(1).acos());
    }
    std::sort(args.begin(), args.end(),
              [](const RealBall& a, const RealBall& b) { return mpfr_cmp(a.mid().p(), b.mid().p()) < 0; });
    RealBall pi = RealBall::pi(prec);
    for (size_t j = 0; j < args.size(); ++j) {
        if (!args[j].gt_zero() || !args[j].lt(pi))
            throw PrecisionInsufficient("argument enclosure leaves (0, pi)");
        if (j + 1 < args.size() && !args[j].lt(args[j + 1]))
            throw PrecisionInsufficient("argument enclosures overlap");
    }
    return SalemCert{p, s, s_inv, std::move(args), prec};
}

// Searches for a proper monic integer factor by rounding certified
// coefficient balls of conjugation-closed root subset products. Real factors
// must take each unit-circle pair together, so the units are x - s, x - 1/s,
// and x^2 - y_j x + 1. Sound and complete once every coefficient ball has
// radius below 1/2.
std::optional<IntPoly> find_factor(const IntPoly& p, const SalemCert& cert, long prec) {
    std::vector<std::vector<RealBall>> units;
    units.push_back({-cert.s_ball, RealBall::exact_int(1, prec)});
    units.push_back({-cert.s_inv_ball, RealBall::exact_int(1, prec)});
    for (const auto& th : cert.arg_balls)
        units.push_back({RealBall::exact_int(1, prec), -(th.cos().mul_z(2)),
                         RealBall::exact_int(1, prec)});
    const size_t n = units.size();
    for (unsigned long mask = 1; mask + 1 < (1ul << n); ++mask) {
        std::vector<RealBall> prod{RealBall::exact_int(1, prec)};
        for (size_t i = 0; i < n; ++i)
            if (mask & (1ul << i)) prod = ball_poly_mul(prod, units[i], prec);
        std::vector<mpz_class> cand;
        bool integral = true;
        for (const auto& c : prod) {
            Mpfr half(64);
            mpfr_set_ui_2exp(half.p(), 1, -1, MPFR_RNDN);
            if (mpfr_cmp(c.rad().p(), half.p()) >= 0)
                throw PrecisionInsufficient("factor coefficient ball too wide");
            auto z = c.unique_integer();
            if (!z) {
                integral = false;
                break;
            }
            cand.push_back(*z);
        }
        if (!integral) continue;
        if (cand.back() != 1) continue;
        if (zdivides(p.coeffs(), cand)) return IntPoly(std::move(cand));
    }
    return std::nullopt;
}

QPoly to_qpoly(const IntPoly& p) {
    QPoly q;
    for (const auto& c : p.coeffs()) q.emplace_back(c);
    return q;
}

// Exact location analysis shared by salem_check and refine_cert.
struct Located {
    IntPoly q;
    Bracket br_s;
    std::vector<Bracket> br_mid;
};

std::variant<Located, NotSalem> locate(const IntPoly& p) {
    if (!p.is_monic()) return NotSalem{"NotMonic", "leading coefficient is not 1"};
    if (p.degree() < 2) return NotSalem{"RootLocationFails", "degree below 2"};
    if (!is_reciprocal(p)) return NotSalem{"NotReciprocal", "coefficients are not palindromic"};
    if (p.degree() % 2 != 0)
        return NotSalem{"RootLocationFails", "odd-degree reciprocal polynomial has the root -1"};
    const long d = static_cast<long>(p.degree()) / 2;
    IntPoly q = trace_polynomial(p);
    QPoly qq = to_qpoly(q);
    if (qeval(qq, 2) == 0 || qeval(qq, -2) == 0)
        return NotSalem{"RootLocationFails", "root at x = 1 or x = -1"};
    Sturm st(qq);
    if (!st.squarefree())
        return NotSalem{"RootLocationFails", "trace polynomial is not squarefree"};
    mpq_class bound = cauchy_bound(qq);
    if (bound < 3) bound = 3;
    long n_gt = st.count_open(2, bound);
    long n_mid = st.count_open(-2, 2);
    if (n_gt != 1 || n_mid != d - 1) {
        std::ostringstream os;
        os << "trace roots: " << n_gt << " in (2,inf), " << n_mid << " in (-2,2); need 1 and "
           << (d - 1);
        return NotSalem{"RootLocationFails", os.str()};
    }
    auto br_s = isolate(st, qq, 2, bound);
    auto br_mid = isolate(st, qq, -2, 2);
    assert(br_s.size() == 1 && br_mid.size() == static_cast<size_t>(d - 1));
    return Located{std::move(q), br_s[0], std::move(br_mid)};
}

}  // namespace

SalemResult salem_check(const IntPoly& p, const Precision& pc) {
    auto loc = locate(p);
    if (std::holds_alternative<NotSalem>(loc)) return std::get<NotSalem>(loc);
    const Located& L = std::get<Located>(loc);
    return with_precision(pc, [&](long prec) -> SalemResult {
        SalemCert cert = build_cert(p, L.q, L.br_s, L.br_mid, prec);
        if (auto f = find_factor(p, cert, prec))
            return NotSalem{"Reducible", "divisible by " + f->str()};
        return cert;
    });
}

SalemCert refine_cert(const IntPoly& p, long precision_bits) {
    auto loc = locate(p);
    if (std::holds_alternative<NotSalem>(loc))
        throw Error("refine_cert: polynomial is not Salem (" + std::get<NotSalem>(loc).reason +
                    ")");
    const Located& L = std::get<Located>(loc);
    return build_cert(p, L.q, L.br_s, L.br_mid, precision_bits);
}

PowerResult power(const SalemCert& cert, unsigned long m, const Precision& pc) {
    if (m < 1) throw Error("power: m must be at least 1");
    const IntPoly& p = cert.poly;
    IntPoly candidate = with_precision(pc, [&](long prec) -> IntPoly {
        SalemCert c = refine_cert(p, prec);
        std::vector<RealBall> prod{RealBall::exact_int(1, prec)};
        RealBall sm = c.s_ball.pow_ui(m);
        RealBall sim = c.s_inv_ball.pow_ui(m);
        prod = ball_poly_mul(prod, {-sm, RealBall::exact_int(1, prec)}, prec);
        prod = ball_poly_mul(prod, {-sim, RealBall::exact_int(1, prec)}, prec);
        for (const auto& th : c.arg_balls) {
            RealBall c2 = th.mul_z(mpz_class(m)).cos().mul_z(2);
            prod = ball_poly_mul(
                prod, {RealBall::exact_int(1, prec), -c2, RealBall::exact_int(1, prec)}, prec);
        }
        std::vector<mpz_class> coeffs;
        for (const auto& cb : prod) {
            auto z = cb.unique_integer();
            if (!z) throw PrecisionInsufficient("power: coefficient ball not integral");
            coeffs.push_back(*z);
        }
        return IntPoly(std::move(coeffs));
    });

    SalemResult res = salem_check(candidate, pc);
    if (std::holds_alternative<SalemCert>(res))
        return PowerResult{std::get<SalemCert>(res), false};

    // Defensive degree-collapse path: coinciding powered roots make the
    // candidate non-squarefree. The squarefree part is computed exactly.
    auto vars = Vars::make({{"x", false}});
    auto to_l = [&](const IntPoly& f) {
        LaurentPoly l(vars);
        for (size_t k = 0; k < f.coeffs().size(); ++k)
            if (f.coeffs()[k] != 0)
                l = l + LaurentPoly::monomial(vars, f.coeffs()[k], {static_cast<int>(k)});
        return l;
    };
    LaurentPoly lp = to_l(candidate), ld = to_l(candidate.derivative());
    LaurentPoly g = laurent_gcd(lp, ld);
    if (!g.is_constant()) {
        auto sf = exact_divide(lp, g);
        assert(sf.has_value());
        long deg = 0;
        for (const auto& [e, cc] : sf->terms()) {
            (void)cc;
            deg = std::max(deg, static_cast<long>(e[0]));
        }
        std::vector<mpz_class> coeffs(static_cast<size_t>(deg) + 1, 0);
        for (const auto& [e, cc] : sf->terms()) coeffs[static_cast<size_t>(e[0])] = cc;
        SalemResult res2 = salem_check(IntPoly(std::move(coeffs)), pc);
        if (std::holds_alternative<SalemCert>(res2))
            return PowerResult{std::get<SalemCert>(res2), true};
    }
    throw Error("power: could not certify s^m (" + std::get<NotSalem>(res).reason + ")");
}

std::vector<std::pair<unsigned long, ArcStatus>> power_in_arc(const SalemCert& cert,
                                                              const RealBall& half_width,
                                                              unsigned long m_max,
                                                              const Precision& pc) {
    if (!half_width.gt_zero()) throw Error("power_in_arc: half width must be positive");
    if (half_width.gt(RealBall::pi(half_width.prec())))
        throw Error("power_in_arc: half width exceeds pi");
    if (m_max < 1) throw Error("power_in_arc: m_max must be at least 1");

    // Refine until the linearly growing reduction error is far below the
    // boundary: max radius * m_max < 1e-3 * half_width.
    long prec = std::max(cert.precision_bits, pc.start);
    SalemCert c = cert.precision_bits >= prec ? cert : refine_cert(cert.poly, prec);
    auto tight_enough = [&](const SalemCert& cc) {
        Mpfr budget(64);
        mpfr_set(budget.p(), half_width.inf_down().p(), MPFR_RNDD);
        mpfr_div_ui(budget.p(), budget.p(), 1000, MPFR_RNDD);
        for (const auto& th : cc.arg_balls) {
            Mpfr t(64);
            mpfr_mul_ui(t.p(), th.rad().p(), m_max, MPFR_RNDU);
            if (mpfr_cmp(t.p(), budget.p()) >= 0) return false;
        }
        return true;
    };
    while (!tight_enough(c) && prec < pc.cap) {
        prec = std::min(prec * 2, pc.cap);
        c = refine_cert(cert.poly, prec);
    }

    RealBall two_pi = RealBall::pi(prec).mul_z(2);
    std::vector<std::pair<unsigned long, ArcStatus>> out;
    for (unsigned long m = 1; m <= m_max; ++m) {
        bool outside = false, unknown = false;
        for (const auto& th : c.arg_balls) {
            RealBall t = th.mul_z(mpz_class(m));
            // any integer k yields a valid representative; certification
            // below is sound regardless of which one is picked
            Mpfr kq(64);
            mpfr_div(kq.p(), t.mid().p(), two_pi.mid().p(), MPFR_RNDN);
            long k = mpfr_get_si(kq.p(), MPFR_RNDN);
            RealBall red = (t - two_pi.mul_z(mpz_class(k))).abs();
            if (red.lt(half_width)) continue;
            if (red.gt(half_width) && red.lt(two_pi - half_width)) {
                outside = true;
                break;
            }
            unknown = true;
        }
        if (outside) continue;
        out.emplace_back(m, unknown ? ArcStatus::Unknown : ArcStatus::Certified);
    }
    return out;
}

std::vector<ComplexBall> conjugate_points(const SalemCert& cert, unsigned long m) {
    std::vector<ComplexBall> out;
    out.push_back(ComplexBall::from_real(cert.s_ball.pow_ui(m)));
    out.push_back(ComplexBall::from_real(cert.s_inv_ball.pow_ui(m)));
    for (const auto& th : cert.arg_balls) {
        RealBall a = th.mul_z(mpz_class(m));
        out.push_back(ComplexBall::unit(a));
        out.push_back(ComplexBall::unit(-a));
    }
    return out;
}

}  // namespace salembraid
