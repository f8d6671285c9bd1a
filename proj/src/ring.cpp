#include "salembraid/ring.hpp"

#include <cassert>

namespace salembraid {

// ---------------------------------------------------------------- Vars ----

VarsPtr Vars::make(std::vector<Decl> decls) {
    for (size_t i = 0; i < decls.size(); ++i) {
        if (decls[i].name.empty()) throw Error("empty variable name");
        for (size_t j = i + 1; j < decls.size(); ++j)
            if (decls[i].name == decls[j].name)
                throw Error("duplicate variable " + decls[i].name);
    }
    return VarsPtr(new Vars(std::move(decls)));
}

std::optional<size_t> Vars::find(const std::string& name) const {
    for (size_t i = 0; i < decls_.size(); ++i)
        if (decls_[i].name == name) return i;
    return std::nullopt;
}

bool Vars::operator==(const Vars& o) const {
    if (decls_.size() != o.decls_.size()) return false;
    for (size_t i = 0; i < decls_.size(); ++i)
        if (decls_[i].name != o.decls_[i].name || decls_[i].inverted != o.decls_[i].inverted)
            return false;
    return true;
}

void require_same_vars(const VarsPtr& a, const VarsPtr& b) {
    if (a == b) return;
    if (a && b && *a == *b) return;
    throw DimensionMismatch("operands declared over different variable rings");
}

// ---------------------------------------------------- GaussianRational ----

GaussianRational GaussianRational::inv() const {
    mpq_class n2 = re * re + im * im;
    if (n2 == 0) throw DenominatorVanishes("inverse of exact zero");
    return {re / n2, mpq_class(-im / n2)};
}

GaussianRational GaussianRational::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    GaussianRational acc(1, 0), base(*this);
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

// --------------------------------------------------------- LaurentPoly ----

LaurentPoly LaurentPoly::constant(VarsPtr vars, mpz_class c) {
    LaurentPoly p(vars);
    if (c != 0) p.terms_.emplace(Exps(vars->size(), 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(VarsPtr vars, size_t idx, int exp) {
    if (idx >= vars->size()) throw Error("variable index out of range");
    Exps e(vars->size(), 0);
    e[idx] = exp;
    return monomial(std::move(vars), 1, std::move(e));
}

LaurentPoly LaurentPoly::monomial(VarsPtr vars, mpz_class c, Exps e) {
    if (e.size() != vars->size()) throw DimensionMismatch("exponent vector length");
    LaurentPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::from_terms(VarsPtr vars, Terms t) {
    LaurentPoly p(std::move(vars));
    for (auto& [e, c] : t) {
        if (e.size() != p.vars_->size()) throw DimensionMismatch("exponent vector length");
        if (c != 0) p.terms_.emplace(e, c);
    }
    return p;
}

bool LaurentPoly::is_one() const {
    auto c = constant_value();
    return c.has_value() && *c == 1;
}

bool LaurentPoly::is_constant() const { return constant_value().has_value(); }

bool LaurentPoly::is_unit() const {
    if (terms_.size() != 1) return false;
    const mpz_class& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

std::optional<mpz_class> LaurentPoly::constant_value() const {
    if (terms_.empty()) return mpz_class(0);
    if (terms_.size() != 1) return std::nullopt;
    for (int e : terms_.begin()->first)
        if (e != 0) return std::nullopt;
    return terms_.begin()->second;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_vars(a.vars_, b.vars_);
    LaurentPoly r(a.vars_);
    r.terms_ = a.terms_;
    for (const auto& [e, c] : b.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_vars(a.vars_, b.vars_);
    LaurentPoly r(a.vars_);
    const size_t nv = a.vars_->size();
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exps e(nv);
            for (size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
            mpz_class c = ca * cb;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(std::move(e), std::move(c));
            } else {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, mpz_class(-c));
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (!(vars_ == o.vars_ || *vars_ == *o.vars_)) return false;
    return terms_ == o.terms_;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exps f = e;
        for (size_t i = 0; i < f.size(); ++i)
            if (vars_->inverted(i)) f[i] = -f[i];
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e < 0) {
        if (!is_unit()) throw Error("negative power of a non-unit Laurent polynomial");
        const auto& [ex, c] = *terms_.begin();
        Exps f(ex.size());
        for (size_t i = 0; i < f.size(); ++i) f[i] = -ex[i];
        return monomial(vars_, c, std::move(f)).pow(-e);
    }
    LaurentPoly acc = constant(vars_, 1);
    LaurentPoly base(*this);
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

LaurentPoly LaurentPoly::mul_mpz(const mpz_class& c) const {
    LaurentPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, mpz_class(k * c));
    return r;
}

Exps LaurentPoly::min_exps() const {
    Exps m(vars_->size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (first) {
            m = e;
            first = false;
        } else {
            for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

LaurentPoly LaurentPoly::shift(const Exps& delta) const {
    if (delta.size() != vars_->size()) throw DimensionMismatch("shift vector length");
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exps f = e;
        for (size_t i = 0; i < f.size(); ++i) f[i] += delta[i];
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        (void)e;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

int LaurentPoly::lead_sign() const {
    if (terms_.empty()) return 0;
    return sgn(terms_.rbegin()->second);
}

long LaurentPoly::total_degree() const {
    long best = 0;
    for (const auto& [e, c] : terms_) {
        (void)c;
        long s = 0;
        for (int x : e) s += (x < 0 ? -static_cast<long>(x) : x);
        best = std::max(best, s);
    }
    return best;
}

ComplexBall LaurentPoly::evaluate(const std::vector<ComplexBall>& point) const {
    if (point.size() != vars_->size())
        throw DimensionMismatch("evaluation point has wrong arity");
    mpfr_prec_t prec = 64;
    for (const auto& p : point) prec = std::max(prec, p.re.prec());
    ComplexBall acc = ComplexBall::exact_int(0, prec);
    for (const auto& [e, c] : terms_) {
        mpfr_prec_t pc =
            std::max<mpfr_prec_t>(prec, mpz_sizeinbase(c.get_mpz_t(), 2) + 1);
        ComplexBall t = ComplexBall::from_real(RealBall::exact_mpz(c, pc));
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t = t * point[i].pow_si(e[i]);
        acc = acc + t;
    }
    return acc;
}

GaussianRational LaurentPoly::evaluate_gaussian(
    const std::vector<GaussianRational>& point) const {
    if (point.size() != vars_->size())
        throw DimensionMismatch("evaluation point has wrong arity");
    GaussianRational acc;
    for (const auto& [e, c] : terms_) {
        GaussianRational t(mpq_class(c), 0);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t = t * point[i].pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

// ------------------------------------------------- gcd / exact division ----

namespace {

Exps negated(const Exps& e) {
    Exps f(e.size());
    for (size_t i = 0; i < e.size(); ++i) f[i] = -e[i];
    return f;
}

// Univariate view in one distinguished variable: exponent of that variable
// mapped to the coefficient polynomial (which has a zero slot there).
using UniView = std::map<long, LaurentPoly>;

UniView to_uni(const LaurentPoly& p, size_t v) {
    UniView u;
    for (const auto& [e, c] : p.terms()) {
        Exps f = e;
        long ev = f[v];
        f[v] = 0;
        auto [it, fresh] = u.emplace(ev, LaurentPoly::monomial(p.vars(), c, f));
        if (!fresh) it->second = it->second + LaurentPoly::monomial(p.vars(), c, std::move(f));
    }
    for (auto it = u.begin(); it != u.end();)
        it = it->second.is_zero() ? u.erase(it) : std::next(it);
    return u;
}

LaurentPoly from_uni(const VarsPtr& vars, const UniView& u, size_t v) {
    LaurentPoly p(vars);
    for (const auto& [ev, coeff] : u) {
        Exps d(vars->size(), 0);
        d[v] = static_cast<int>(ev);
        p = p + coeff.shift(d);
    }
    return p;
}

long uni_deg(const UniView& u) { return u.empty() ? -1 : u.rbegin()->first; }

void uni_add_term(UniView& u, long e, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = u.emplace(e, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) u.erase(it);
    }
}

// Pseudo-remainder of A by B in the distinguished variable: repeatedly
// A <- lc(B)*A - lc(A)*X^(dA-dB)*B until deg A < deg B.
UniView uni_prem(UniView A, const UniView& B) {
    const long db = uni_deg(B);
    const LaurentPoly& lb = B.rbegin()->second;
    while (uni_deg(A) >= db) {
        long da = uni_deg(A);
        LaurentPoly la = A.rbegin()->second;
        UniView next;
        for (const auto& [e, c] : A)
            if (e != da) uni_add_term(next, e, c * lb);
        for (const auto& [e, c] : B)
            if (e != db) uni_add_term(next, e + (da - db), -(c * la));
        A = std::move(next);
    }
    return A;
}

LaurentPoly uni_content(const UniView& u) {
    LaurentPoly g(u.begin()->second.vars());
    for (const auto& [e, c] : u) {
        (void)e;
        g = laurent_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

UniView uni_divide(const UniView& u, const LaurentPoly& d) {
    if (d.is_one()) return u;
    UniView r;
    for (const auto& [e, c] : u) {
        auto q = exact_divide(c, d);
        assert(q.has_value());
        r.emplace(e, std::move(*q));
    }
    return r;
}

// Canonical gcd normalization: minimum exponent 0 per variable, positive
// lex-leading coefficient.
LaurentPoly gcd_normalize(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly q = p.shift(negated(p.min_exps()));
    if (q.lead_sign() < 0) return -q;
    return q;
}

// Degree over Q of the gcd of two nonzero integer polynomials, by a
// univariate primitive remainder sequence.
long uni_z_gcd_degree(std::vector<mpz_class> a, std::vector<mpz_class> b) {
    auto deg_of = [](const std::vector<mpz_class>& p) {
        long d = static_cast<long>(p.size()) - 1;
        while (d >= 0 && p[static_cast<size_t>(d)] == 0) --d;
        return d;
    };
    long da = deg_of(a), db = deg_of(b);
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
    }
    while (db > 0) {
        while (da >= db) {
            const mpz_class la = a[static_cast<size_t>(da)];
            const mpz_class lb = b[static_cast<size_t>(db)];
            for (long i = 0; i <= da; ++i) a[static_cast<size_t>(i)] *= lb;
            for (long i = 0; i <= db; ++i)
                a[static_cast<size_t>(i + da - db)] -= la * b[static_cast<size_t>(i)];
            while (da >= 0 && a[static_cast<size_t>(da)] == 0) --da;
        }
        if (da < 0) return db;
        a.resize(static_cast<size_t>(da) + 1);
        mpz_class cont = 0;
        for (const auto& c : a) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
        if (cont > 1)
            for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cont.get_mpz_t());
        std::swap(a, b);
        std::swap(da, db);
    }
    return 0;
}

// Substitute integers for every variable except v. Exponents are
// nonnegative here (the operands were gcd-normalized). Fails when the
// projected leading coefficient vanishes.
std::optional<std::vector<mpz_class>> project_uni(const UniView& u, size_t v,
                                                  const std::vector<long>& beta) {
    const long d = uni_deg(u);
    std::vector<mpz_class> out(static_cast<size_t>(d) + 1);
    for (const auto& [e, coeff] : u) {
        mpz_class acc = 0;
        for (const auto& [f, c] : coeff.terms()) {
            mpz_class t = c;
            for (size_t j = 0; j < f.size(); ++j) {
                if (j == v || f[j] == 0) continue;
                mpz_class p, base(beta[j]);
                mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(f[j]));
                t *= p;
            }
            acc += t;
        }
        out[static_cast<size_t>(e)] = std::move(acc);
    }
    if (out.back() == 0) return std::nullopt;
    return out;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
    require_same_vars(a0.vars(), b0.vars());
    if (a0.is_zero()) return gcd_normalize(b0);
    if (b0.is_zero()) return gcd_normalize(a0);
    const VarsPtr& vars = a0.vars();
    LaurentPoly a = gcd_normalize(a0), b = gcd_normalize(b0);
    if (a == b) return a;
    if (a.is_constant() || b.is_constant()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
        return LaurentPoly::constant(vars, g);
    }

    // First variable actually present in either operand.
    std::optional<size_t> mainvar;
    for (size_t v = 0; v < vars->size() && !mainvar; ++v) {
        for (const auto& [e, c] : a.terms()) {
            (void)c;
            if (e[v] != 0) {
                mainvar = v;
                break;
            }
        }
        if (!mainvar)
            for (const auto& [e, c] : b.terms()) {
                (void)c;
                if (e[v] != 0) {
                    mainvar = v;
                    break;
                }
            }
    }
    if (!mainvar) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
        return LaurentPoly::constant(vars, g);
    }

    // Primitive polynomial remainder sequence in the main variable.
    UniView A = to_uni(a, *mainvar), B = to_uni(b, *mainvar);
    LaurentPoly ca = uni_content(A), cb = uni_content(B);
    LaurentPoly g = laurent_gcd(ca, cb);
    A = uni_divide(A, ca);
    B = uni_divide(B, cb);

    // Triviality test before the remainder sequence: substitute integers for
    // the other variables and take a cheap univariate gcd. A constant
    // projected gcd with surviving leading coefficients proves the primitive
    // parts are coprime, and only the content part g remains. An unlucky
    // projection merely falls through to the full computation.
    static const long kPalette[] = {2, 3, -2, 5, -3, 7, -5, 11};
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<long> beta(vars->size(), 0);
        for (size_t j = 0; j < vars->size(); ++j)
            beta[j] = kPalette[(static_cast<size_t>(attempt) + j) % 8];
        auto pa = project_uni(A, *mainvar, beta);
        if (!pa) continue;
        auto pb = project_uni(B, *mainvar, beta);
        if (!pb) continue;
        if (uni_z_gcd_degree(std::move(*pa), std::move(*pb)) == 0)
            return gcd_normalize(g);
        break;
    }

    if (uni_deg(A) < uni_deg(B)) std::swap(A, B);
    for (;;) {
        UniView R = uni_prem(A, B);
        if (R.empty()) {
            A = std::move(B);
            break;
        }
        R = uni_divide(R, uni_content(R));
        A = std::move(B);
        B = std::move(R);
        if (uni_deg(B) == 0) {
            // Constant in the main variable: gcd of primitives is a content.
            A = std::move(B);
            A = uni_divide(A, uni_content(A));
            break;
        }
    }
    return gcd_normalize(from_uni(vars, A, *mainvar) * g);
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_vars(a.vars(), b.vars());
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return LaurentPoly(a.vars());
    const VarsPtr& vars = a.vars();
    const size_t nv = vars->size();
    Exps am = a.min_exps(), bm = b.min_exps();
    LaurentPoly A = a.shift(negated(am));
    LaurentPoly B = b.shift(negated(bm));

    // Long division by the lex-leading term; exactness in the Laurent ring
    // is equivalent to exactness of this ordinary-polynomial division.
    const Exps eb = B.terms().rbegin()->first;
    const mpz_class cb = B.terms().rbegin()->second;
    LaurentPoly::Terms q;
    LaurentPoly r = A;
    while (!r.is_zero()) {
        const Exps& er = r.terms().rbegin()->first;
        const mpz_class& cr = r.terms().rbegin()->second;
        Exps eq(nv);
        for (size_t i = 0; i < nv; ++i) {
            eq[i] = er[i] - eb[i];
            if (eq[i] < 0) return std::nullopt;
        }
        if (!mpz_divisible_p(cr.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), cr.get_mpz_t(), cb.get_mpz_t());
        LaurentPoly t = LaurentPoly::monomial(vars, c, eq);
        q.emplace(std::move(eq), std::move(c));
        r = r - t * B;
    }
    Exps delta(nv);
    for (size_t i = 0; i < nv; ++i) delta[i] = am[i] - bm[i];
    return LaurentPoly::from_terms(vars, std::move(q)).shift(delta);
}

// ------------------------------------------------------------- RatFunc ----

RatFunc::RatFunc(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::constant(num_.vars(), 1)) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

RatFunc RatFunc::constant(VarsPtr vars, const mpq_class& q) {
    return RatFunc(LaurentPoly::constant(vars, q.get_num()),
                   LaurentPoly::constant(vars, q.get_den()));
}

RatFunc RatFunc::variable(VarsPtr vars, size_t idx, int exp) {
    return RatFunc(LaurentPoly::variable(std::move(vars), idx, exp));
}

std::optional<LaurentPoly> RatFunc::as_laurent() const {
    if (den_.is_one()) return num_;
    return std::nullopt;
}

void RatFunc::normalize() {
    require_same_vars(num_.vars(), den_.vars());
    if (den_.is_zero()) throw SingularMatrix("zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(num_.vars(), 1);
        return;
    }
    // Push the denominator's monomial unit into the numerator.
    Exps dm = den_.min_exps();
    den_ = den_.shift(negated(dm));
    num_ = num_.shift(negated(dm));
    LaurentPoly g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
        auto qn = exact_divide(num_, g);
        auto qd = exact_divide(den_, g);
        assert(qn && qd);
        num_ = std::move(*qn);
        den_ = std::move(*qd);
    }
    if (den_.lead_sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    // Reduce by the common denominator factor first so the final
    // normalization works on small operands.
    LaurentPoly g = laurent_gcd(a.den_, b.den_);
    if (g.is_one()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    auto da = exact_divide(a.den_, g);
    auto db = exact_divide(b.den_, g);
    assert(da && db);
    return RatFunc(a.num_ * *db + b.num_ * *da, *da * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    // Cross-cancel before multiplying; num and den of each operand are
    // already coprime, so only the cross gcds can be nontrivial.
    LaurentPoly g1 = laurent_gcd(a.num_, b.den_);
    LaurentPoly g2 = laurent_gcd(b.num_, a.den_);
    LaurentPoly an = a.num_, bd = b.den_, bn = b.num_, ad = a.den_;
    if (!g1.is_one()) {
        auto qn = exact_divide(an, g1);
        auto qd = exact_divide(bd, g1);
        assert(qn && qd);
        an = std::move(*qn);
        bd = std::move(*qd);
    }
    if (!g2.is_one()) {
        auto qn = exact_divide(bn, g2);
        auto qd = exact_divide(ad, g2);
        assert(qn && qd);
        bn = std::move(*qn);
        ad = std::move(*qd);
    }
    return RatFunc(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

RatFunc RatFunc::inv() const {
    if (num_.is_zero()) throw SingularMatrix("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc acc = RatFunc(LaurentPoly::constant(vars(), 1));
    RatFunc base(*this);
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

ComplexBall RatFunc::evaluate(const std::vector<ComplexBall>& point) const {
    ComplexBall n = num_.evaluate(point);
    if (den_.is_one()) return n;
    ComplexBall d = den_.evaluate(point);
    if (d.contains_zero())
        throw DenominatorVanishes("denominator ball contains zero");
    return n / d;
}

GaussianRational RatFunc::evaluate_gaussian(
    const std::vector<GaussianRational>& point) const {
    GaussianRational n = num_.evaluate_gaussian(point);
    if (den_.is_one()) return n;
    GaussianRational d = den_.evaluate_gaussian(point);
    if (d.is_zero()) throw DenominatorVanishes("denominator vanishes at exact point");
    return n * d.inv();
}

// ---------------------------------------------------------- BallMatrix ----

BallMatrix BallMatrix::identity(size_t dim, mpfr_prec_t prec) {
    BallMatrix m(dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            m.at(i, j) = ComplexBall::exact_int(i == j ? 1 : 0, prec);
    return m;
}

BallMatrix operator*(const BallMatrix& a, const BallMatrix& b) {
    if (a.n != b.n) throw DimensionMismatch("ball matrix product");
    mpfr_prec_t prec = 64;
    for (const auto& z : a.e) prec = std::max(prec, z.re.prec());
    BallMatrix r(a.n);
    for (size_t i = 0; i < a.n; ++i)
        for (size_t j = 0; j < a.n; ++j) {
            ComplexBall acc = ComplexBall::exact_int(0, prec);
            for (size_t k = 0; k < a.n; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

BallMatrix operator-(const BallMatrix& a, const BallMatrix& b) {
    if (a.n != b.n) throw DimensionMismatch("ball matrix difference");
    BallMatrix r(a.n);
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

bool BallMatrix::contains_zero() const {
    for (const auto& z : e)
        if (!z.contains_zero()) return false;
    return true;
}

// ---------------------------------------------------------- RingMatrix ----

RingMatrix::RingMatrix(VarsPtr vars, size_t dim)
    : vars_(std::move(vars)), dim_(dim), entries_(dim * dim, RatFunc(vars_)) {
    if (dim == 0) throw DimensionMismatch("zero-dimensional matrix");
}

RingMatrix RingMatrix::identity(VarsPtr vars, size_t dim) {
    RingMatrix m(std::move(vars), dim);
    for (size_t i = 0; i < dim; ++i)
        m.at(i, i) = RatFunc(LaurentPoly::constant(m.vars_, 1));
    return m;
}

RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
    require_same_vars(a.vars_, b.vars_);
    if (a.dim_ != b.dim_) throw DimensionMismatch("matrix sum");
    RingMatrix r(a.vars_, a.dim_);
    for (size_t i = 0; i < a.entries_.size(); ++i) r.entries_[i] = a.entries_[i] + b.entries_[i];
    return r;
}

RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) {
    require_same_vars(a.vars_, b.vars_);
    if (a.dim_ != b.dim_) throw DimensionMismatch("matrix difference");
    RingMatrix r(a.vars_, a.dim_);
    for (size_t i = 0; i < a.entries_.size(); ++i) r.entries_[i] = a.entries_[i] - b.entries_[i];
    return r;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    require_same_vars(a.vars_, b.vars_);
    if (a.dim_ != b.dim_) throw DimensionMismatch("matrix product");
    RingMatrix r(a.vars_, a.dim_);
    for (size_t i = 0; i < a.dim_; ++i)
        for (size_t j = 0; j < a.dim_; ++j) {
            RatFunc acc(a.vars_);
            for (size_t k = 0; k < a.dim_; ++k) {
                const RatFunc& x = a.at(i, k);
                const RatFunc& y = b.at(k, j);
                if (!x.is_zero() && !y.is_zero()) acc = acc + x * y;
            }
            r.at(i, j) = acc;
        }
    return r;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
    if (dim_ != o.dim_) return false;
    for (size_t i = 0; i < entries_.size(); ++i)
        if (!(entries_[i] == o.entries_[i])) return false;
    return true;
}

RingMatrix RingMatrix::scale(const RatFunc& c) const {
    RingMatrix r(vars_, dim_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * c;
    return r;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix r(vars_, dim_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RingMatrix RingMatrix::bar() const {
    RingMatrix r(vars_, dim_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].bar();
    return r;
}

RingMatrix RingMatrix::star() const { return transpose().bar(); }

bool RingMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

namespace {

// Bareiss fraction-free determinant of a Laurent polynomial matrix.
// Pivots are chosen by minimal total degree, ties by lowest row index.
LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>> m, const VarsPtr& vars) {
    const size_t n = m.size();
    int sign = 1;
    LaurentPoly prev = LaurentPoly::constant(vars, 1);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t best = n;
        long bestdeg = 0;
        for (size_t r = k; r < n; ++r) {
            if (m[r][k].is_zero()) continue;
            long d = m[r][k].total_degree();
            if (best == n || d < bestdeg) {
                best = r;
                bestdeg = d;
            }
        }
        if (best == n) return LaurentPoly(vars);  // zero column: det = 0
        if (best != k) {
            std::swap(m[best], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                LaurentPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = exact_divide(t, prev);
                assert(q.has_value());  // guaranteed by the Bareiss identity
                m[i][j] = std::move(*q);
            }
            m[i][k] = LaurentPoly(vars);
        }
        prev = m[k][k];
    }
    LaurentPoly d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

// Clears denominators of one row; returns the collected denominator.
LaurentPoly clear_row(const std::vector<RatFunc>& row, const VarsPtr& vars,
                      std::vector<LaurentPoly>& out) {
    LaurentPoly lcm = LaurentPoly::constant(vars, 1);
    for (const auto& e : row) {
        const LaurentPoly& d = e.den();
        LaurentPoly g = laurent_gcd(lcm, d);
        auto q = exact_divide(d, g);
        assert(q.has_value());
        lcm = lcm * *q;
    }
    out.clear();
    for (const auto& e : row) {
        auto q = exact_divide(lcm, e.den());
        assert(q.has_value());
        out.push_back(e.num() * *q);
    }
    return lcm;
}

}  // namespace

RatFunc RingMatrix::determinant() const {
    std::vector<std::vector<LaurentPoly>> p;
    LaurentPoly denom = LaurentPoly::constant(vars_, 1);
    for (size_t i = 0; i < dim_; ++i) {
        std::vector<RatFunc> row(entries_.begin() + i * dim_,
                                 entries_.begin() + (i + 1) * dim_);
        std::vector<LaurentPoly> cleared;
        denom = denom * clear_row(row, vars_, cleared);
        p.push_back(std::move(cleared));
    }
    return RatFunc(bareiss_det(std::move(p), vars_), denom);
}

RingMatrix RingMatrix::inverse() const {
    // Fraction-free complete (Jordan) elimination on [N | diag(L)], where N
    // is the matrix with row denominators cleared into diag(L). Every
    // division is exact, so no rational-function gcd runs until the single
    // division by the determinant at the end. If E is the accumulated row
    // operation, EN = d*Id forces the right block to d*N^-1*diag(L), which
    // is d times the inverse.
    const size_t n = dim_;
    std::vector<std::vector<LaurentPoly>> m(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<RatFunc> row(entries_.begin() + i * dim_,
                                 entries_.begin() + (i + 1) * dim_);
        std::vector<LaurentPoly> cleared;
        LaurentPoly li = clear_row(row, vars_, cleared);
        m[i] = std::move(cleared);
        for (size_t j = 0; j < n; ++j)
            m[i].push_back(i == j ? li : LaurentPoly(vars_));
    }
    LaurentPoly prev = LaurentPoly::constant(vars_, 1);
    for (size_t k = 0; k < n; ++k) {
        size_t best = n;
        long bestdeg = 0;
        for (size_t r = k; r < n; ++r) {
            if (m[r][k].is_zero()) continue;
            long d = m[r][k].total_degree();
            if (best == n || d < bestdeg) {
                best = r;
                bestdeg = d;
            }
        }
        if (best == n) throw SingularMatrix("matrix is singular");
        std::swap(m[best], m[k]);
        for (size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                LaurentPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = exact_divide(t, prev);
                assert(q.has_value());  // guaranteed by the Sylvester identity
                m[i][j] = std::move(*q);
            }
            m[i][k] = LaurentPoly(vars_);
        }
        prev = m[k][k];
    }
    RingMatrix r(vars_, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r.at(i, j) = RatFunc(m[i][n + j], prev);
    return r;
}

BallMatrix RingMatrix::evaluate(const std::vector<ComplexBall>& point) const {
    BallMatrix m(dim_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) m.at(i, j) = at(i, j).evaluate(point);
    return m;
}

std::vector<GaussianRational> RingMatrix::evaluate_gaussian(
    const std::vector<GaussianRational>& point) const {
    std::vector<GaussianRational> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.evaluate_gaussian(point));
    return out;
}

// ----------------------------------------------------------- nullspace ----

std::vector<std::vector<RatFunc>> nullspace(const std::vector<std::vector<RatFunc>>& rows,
                                            const VarsPtr& vars, size_t width) {
    std::vector<std::vector<LaurentPoly>> m;
    for (const auto& row : rows) {
        if (row.size() != width) throw DimensionMismatch("nullspace row width");
        std::vector<LaurentPoly> cleared;
        clear_row(row, vars, cleared);
        bool zero = true;
        for (const auto& e : cleared)
            if (!e.is_zero()) {
                zero = false;
                break;
            }
        if (!zero) m.push_back(std::move(cleared));
    }
    const size_t nr = m.size();

    // Fraction-free forward elimination with explicit pivot bookkeeping.
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
    LaurentPoly prev = LaurentPoly::constant(vars, 1);
    size_t row = 0;
    for (size_t col = 0; col < width && row < nr; ++col) {
        size_t best = nr;
        long bestdeg = 0;
        for (size_t r = row; r < nr; ++r) {
            if (m[r][col].is_zero()) continue;
            long d = m[r][col].total_degree();
            if (best == nr || d < bestdeg) {
                best = r;
                bestdeg = d;
            }
        }
        if (best == nr) continue;  // free column
        std::swap(m[best], m[row]);
        for (size_t i = row + 1; i < nr; ++i) {
            for (size_t j = col + 1; j < width; ++j) {
                LaurentPoly t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
                auto q = exact_divide(t, prev);
                assert(q.has_value());
                m[i][j] = std::move(*q);
            }
            m[i][col] = LaurentPoly(vars);
        }
        prev = m[row][col];
        pivots.emplace_back(row, col);
        ++row;
    }

    std::vector<bool> is_pivot(width, false);
    for (const auto& [r, c] : pivots) {
        (void)r;
        is_pivot[c] = true;
    }

    std::vector<std::vector<RatFunc>> basis;
    for (size_t f = 0; f < width; ++f) {
        if (is_pivot[f]) continue;
        std::vector<RatFunc> x(width, RatFunc(vars));
        x[f] = RatFunc(LaurentPoly::constant(vars, 1));
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            const auto& [r, c] = *it;
            RatFunc acc(vars);
            for (size_t j = c + 1; j < width; ++j) {
                if (x[j].is_zero() || m[r][j].is_zero()) continue;
                acc = acc + RatFunc(m[r][j]) * x[j];
            }
            x[c] = -(acc / RatFunc(m[r][c]));
        }
        // Normalize the first nonzero coordinate to 1.
        for (size_t j = 0; j < width; ++j) {
            if (!x[j].is_zero()) {
                RatFunc s = x[j].inv();
                for (size_t k = 0; k < width; ++k)
                    if (!x[k].is_zero()) x[k] = x[k] * s;
                break;
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

// ------------------------------------------------------------ printing ----

namespace {

void print_term(std::string& out, const VarsPtr& vars, const Exps& e, const mpz_class& c,
                bool first) {
    mpz_class a = ::abs(c);
    bool neg = c < 0;
    if (first) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    bool has_var = false;
    for (int x : e)
        if (x != 0) has_var = true;
    std::string body;
    if (a != 1 || !has_var) body = a.get_str();
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!body.empty()) body += "*";
        body += vars->name(i);
        if (e[i] != 1) body += "^" + std::to_string(e[i]);
    }
    out += body;
}

}  // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        print_term(out, vars_, it->first, it->second, first);
        first = false;
    }
    return out;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace salembraid
