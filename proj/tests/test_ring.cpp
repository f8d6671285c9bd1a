#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <cstdint>

#include "salembraid/ring.hpp"

using namespace salembraid;

namespace {

struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 11;
    }
    long small(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

VarsPtr xy_ring() {
    return Vars::make({{"x", true}, {"y", false}});
}

VarsPtr x_ring() { return Vars::make({{"x", true}}); }

LaurentPoly rand_poly(Rng& rng, const VarsPtr& vars, int nterms = 4) {
    LaurentPoly p(vars);
    for (int t = 0; t < nterms; ++t) {
        Exps e(vars->size());
        for (auto& x : e) x = static_cast<int>(rng.small(-3, 3));
        p = p + LaurentPoly::monomial(vars, rng.small(-9, 9), e);
    }
    return p;
}

RatFunc rand_ratfunc(Rng& rng, const VarsPtr& vars) {
    LaurentPoly d(vars);
    while (d.is_zero()) d = rand_poly(rng, vars, 2);
    return RatFunc(rand_poly(rng, vars, 3), d);
}

RingMatrix rand_matrix(Rng& rng, const VarsPtr& vars, size_t dim, bool rational = false) {
    RingMatrix m(vars, dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            m.at(i, j) = rational ? rand_ratfunc(rng, vars) : RatFunc(rand_poly(rng, vars, 3));
    return m;
}

// Cofactor-expansion determinant, the independent oracle for dims <= 4.
RatFunc cofactor_det(const RingMatrix& m) {
    const size_t n = m.dim();
    if (n == 1) return m.at(0, 0);
    RatFunc acc(m.vars());
    for (size_t j = 0; j < n; ++j) {
        RingMatrix sub(m.vars(), n - 1);
        for (size_t i = 1; i < n; ++i) {
            size_t cc = 0;
            for (size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                sub.at(i - 1, cc++) = m.at(i, k);
            }
        }
        RatFunc term = m.at(0, j) * cofactor_det(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic basics") {
    auto V = xy_ring();
    auto x = LaurentPoly::variable(V, 0);
    auto y = LaurentPoly::variable(V, 1);
    auto p = x * x + y - LaurentPoly::constant(V, 3);
    CHECK(p.str() == "x^2 + y - 3");
    CHECK((p - p).is_zero());
    CHECK((x.pow(-2) * x.pow(2)).is_one());
    CHECK(x.pow(-1).str() == "x^-1");
    auto q = (x + y) * (x - y);
    CHECK(q == x * x - y * y);
}

TEST_CASE("bar involution inverts designated variables and is an involution") {
    auto V = xy_ring();  // x inverted, y fixed
    auto x = LaurentPoly::variable(V, 0);
    auto y = LaurentPoly::variable(V, 1);
    auto p = x * x * y + x.pow(-1) + LaurentPoly::constant(V, 5);
    auto b = p.bar();
    CHECK(b == x.pow(-2) * y + x + LaurentPoly::constant(V, 5));
    CHECK(b.bar() == p);
    Rng rng(1);
    for (int i = 0; i < 30; ++i) {
        auto r = rand_poly(rng, V);
        CHECK(r.bar().bar() == r);
    }
}

TEST_CASE("exact division and gcd over two variables") {
    auto V = xy_ring();
    auto x = LaurentPoly::variable(V, 0);
    auto y = LaurentPoly::variable(V, 1);
    auto a = (x + y) * (x - y) * LaurentPoly::constant(V, 6);
    auto b = (x + y) * LaurentPoly::constant(V, 2);
    auto q = exact_divide(a, b);
    REQUIRE(q.has_value());
    CHECK(*q == (x - y) * LaurentPoly::constant(V, 3));
    CHECK(!exact_divide(x + y, x + LaurentPoly::constant(V, 1)).has_value());
    // Laurent units divide everything.
    auto u = exact_divide(x + y, x.pow(-2));
    REQUIRE(u.has_value());
    CHECK(*u == (x + y) * x.pow(2));

    auto g = laurent_gcd(a, b);
    CHECK(g == (x + y) * LaurentPoly::constant(V, 2));
    Rng rng(2);
    for (int i = 0; i < 25; ++i) {
        auto f = rand_poly(rng, V, 2);
        auto p1 = rand_poly(rng, V, 2);
        auto p2 = rand_poly(rng, V, 2);
        if (f.is_zero() || p1.is_zero() || p2.is_zero()) continue;
        auto gg = laurent_gcd(f * p1, f * p2);
        // the common factor divides the gcd
        auto w = exact_divide(gg, laurent_gcd(gg, f));
        REQUIRE(w.has_value());
        CHECK(exact_divide(f * p1, gg).has_value());
        CHECK(exact_divide(f * p2, gg).has_value());
    }
}

TEST_CASE("ratfunc normalization is canonical") {
    auto V = xy_ring();
    auto x = LaurentPoly::variable(V, 0);
    auto y = LaurentPoly::variable(V, 1);
    // a/b == c/d as fractions iff normalized forms are identical
    RatFunc r1((x * x - y * y), (x + y));
    RatFunc r2(x - y);
    CHECK(r1 == r2);
    // monomial denominators are absorbed into the numerator
    RatFunc r3(x + y, x);
    CHECK(r3.den().is_one());
    CHECK(r3.num() == LaurentPoly::constant(V, 1) + x.pow(-1) * y);
    // denominator sign is normalized
    RatFunc r4(y, -(x + LaurentPoly::constant(V, 1)));
    CHECK(r4.den() == x + LaurentPoly::constant(V, 1));
    CHECK(r4.num() == -y);
    Rng rng(3);
    for (int i = 0; i < 40; ++i) {
        auto a = rand_ratfunc(rng, V);
        auto c = rand_ratfunc(rng, V);
        if (c.is_zero()) continue;
        CHECK(a * c / c == a);
        CHECK((a + c) - c == a);
    }
}

TEST_CASE("star is an involutive anti-homomorphism") {
    auto V = x_ring();
    auto t = RatFunc::variable(V, 0, 2);  // play the role of an inverted parameter
    RingMatrix M(V, 2);
    M.at(0, 0) = t;
    M.at(1, 0) = RatFunc(LaurentPoly::constant(V, 1));
    M.at(1, 1) = RatFunc(LaurentPoly::constant(V, 1));
    auto S = M.star();
    CHECK(S.at(0, 0) == t.bar());
    CHECK(S.at(0, 1) == RatFunc(LaurentPoly::constant(V, 1)));
    CHECK(S.at(1, 0).is_zero());
    CHECK(S.star() == M);
    Rng rng(4);
    auto W = xy_ring();
    for (int i = 0; i < 15; ++i) {
        auto A = rand_matrix(rng, W, 3);
        auto B = rand_matrix(rng, W, 3);
        CHECK(A.star().star() == A);
        CHECK((A * B).star() == B.star() * A.star());
    }
}

TEST_CASE("matrix algebra: identity, associativity") {
    Rng rng(5);
    auto V = xy_ring();
    auto I = RingMatrix::identity(V, 3);
    auto A = rand_matrix(rng, V, 3);
    auto B = rand_matrix(rng, V, 3);
    auto C = rand_matrix(rng, V, 3);
    CHECK(I * A == A);
    CHECK(A * I == A);
    CHECK((A * B) * C == A * (B * C));
}

TEST_CASE("matrix inverse") {
    auto V = x_ring();
    auto I = RingMatrix::identity(V, 2);
    CHECK(I.inverse() == I);
    // diag(t, 1/t) with t = x^2
    RingMatrix D(V, 2);
    D.at(0, 0) = RatFunc::variable(V, 0, 2);
    D.at(1, 1) = RatFunc::variable(V, 0, -2);
    auto Dinv = D.inverse();
    CHECK(Dinv.at(0, 0) == RatFunc::variable(V, 0, -2));
    CHECK(Dinv.at(1, 1) == RatFunc::variable(V, 0, 2));
    Rng rng(6);
    auto W = xy_ring();
    int tested = 0;
    while (tested < 8) {
        auto A = rand_matrix(rng, W, 3, true);
        try {
            auto Ainv = A.inverse();
            CHECK(A * Ainv == RingMatrix::identity(W, 3));
            ++tested;
        } catch (const SingularMatrix&) {
        }
    }
    RingMatrix Z(W, 2);  // zero matrix
    CHECK_THROWS_AS(Z.inverse(), SingularMatrix);
}

TEST_CASE("determinant matches the cofactor oracle and is multiplicative") {
    Rng rng(7);
    auto V = xy_ring();
    CHECK(RingMatrix::identity(V, 4).determinant().is_one());
    for (size_t dim = 2; dim <= 4; ++dim) {
        for (int i = 0; i < 6; ++i) {
            auto A = rand_matrix(rng, V, dim, i % 2 == 1);
            CHECK(A.determinant() == cofactor_det(A));
        }
    }
    for (int i = 0; i < 6; ++i) {
        auto A = rand_matrix(rng, V, 3);
        auto B = rand_matrix(rng, V, 3);
        CHECK((A * B).determinant() == A.determinant() * B.determinant());
    }
}

TEST_CASE("evaluation is exact on exact inputs and matches a double oracle") {
    auto V = x_ring();
    auto I = RingMatrix::identity(V, 3);
    auto pt = std::vector<ComplexBall>{ComplexBall::exact_int(2, 128)};
    auto E = I.evaluate(pt);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            CHECK(E.at(i, j).re.is_exact());
            CHECK(E.at(i, j).re.contains_mpq(i == j ? 1 : 0));
        }

    Rng rng(8);
    auto W = xy_ring();
    for (int trial = 0; trial < 10; ++trial) {
        auto A = rand_matrix(rng, W, 2);
        auto B = rand_matrix(rng, W, 2);
        // both coordinates nonzero: Laurent terms may carry negative exponents
        mpq_class qx(rng.small(1, 9), rng.small(1, 9));
        mpq_class qy(rng.small(1, 9) * (rng.next() & 1 ? 1 : -1), rng.small(1, 9));
        qx.canonicalize();
        qy.canonicalize();
        std::vector<ComplexBall> p{
            ComplexBall::from_real(RealBall::from_mpq(qx, 128)),
            ComplexBall::from_real(RealBall::from_mpq(qy, 128))};
        // evaluate commutes with the product, within radii
        auto AB = A * B;
        auto lhs = AB.evaluate(p);
        auto rhs = A.evaluate(p) * B.evaluate(p);
        CHECK((lhs - rhs).contains_zero());
        // double-precision oracle stays inside a relaxed tube
        std::complex<double> zx(qx.get_d(), 0), zy(qy.get_d(), 0);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) {
                std::complex<double> acc = 0;
                for (const auto& [e, c] : AB.at(i, j).num().terms())
                    acc += c.get_d() * std::pow(zx, e[0]) * std::pow(zy, e[1]);
                double err = 1e-6 * (1.0 + std::abs(acc));
                CHECK(std::abs(acc.real() - lhs.at(i, j).re.mid_d()) < err);
            }
    }
}

TEST_CASE("star becomes conjugate-transpose at unit-circle values of inverted variables") {
    Rng rng(9);
    auto V = x_ring();
    auto theta = RealBall::from_mpq(mpq_class(5, 7), 192);
    std::vector<ComplexBall> pt{ComplexBall::unit(theta)};
    for (int trial = 0; trial < 8; ++trial) {
        auto A = rand_matrix(rng, V, 3);
        auto E = A.evaluate(pt);
        auto S = A.star().evaluate(pt);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) {
                auto d = S.at(i, j) - E.at(j, i).conj();
                CHECK(d.contains_zero());
            }
    }
}

TEST_CASE("gaussian rational evaluation is exact") {
    auto V = xy_ring();
    auto x = RatFunc::variable(V, 0);
    auto y = RatFunc::variable(V, 1);
    auto f = (x * x + y) / (x - y);
    // at x = i, y = 1:  (i^2 + 1)/(i - 1) = 0
    std::vector<GaussianRational> pt{{0, 1}, {1, 0}};
    CHECK(f.evaluate_gaussian(pt).is_zero());
    auto g = x.pow(-2);  // 1/i^2 = -1
    CHECK(g.evaluate_gaussian(pt) == GaussianRational(-1, 0));
    auto h = (x + y) / (x * x + RatFunc(LaurentPoly::constant(V, 1)));
    CHECK_THROWS_AS(h.evaluate_gaussian(pt), DenominatorVanishes);
}

TEST_CASE("nullspace of simple systems") {
    auto V = x_ring();
    auto one = RatFunc(LaurentPoly::constant(V, 1));
    auto x = RatFunc::variable(V, 0);
    // single equation u + x*v = 0 in unknowns (u, v): kernel dim 1
    std::vector<std::vector<RatFunc>> rows{{one, x}};
    auto basis = nullspace(rows, V, 2);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0].is_one());  // first nonzero coordinate normalized to 1
    CHECK(basis[0][0] + x * basis[0][1] == RatFunc(V));
    // full-rank system: empty kernel
    std::vector<std::vector<RatFunc>> rows2{{one, RatFunc(V)}, {RatFunc(V), x}};
    CHECK(nullspace(rows2, V, 2).empty());
    // rank-1 stack of proportional rows
    std::vector<std::vector<RatFunc>> rows3{{one, x}, {x, x * x}};
    CHECK(nullspace(rows3, V, 2).size() == 1);
}

TEST_CASE("parser and canonical printer round-trip") {
    auto V = xy_ring();
    auto p = parse_laurent("x^2 + 3*x*y^-1 - 5", V);
    CHECK(parse_laurent(p.str(), V) == p);
    auto r = parse_ratfunc("(x + y)/(x^2 - y) - 1", V);
    CHECK(parse_ratfunc(r.str(), V) == r);
    CHECK(parse_laurent("-x^2", V) == -LaurentPoly::variable(V, 0, 2));
    CHECK(parse_laurent("(1 + x)^2", V) ==
          parse_laurent("x^2 + 2*x + 1", V));
    CHECK(parse_laurent("(x)^-1", V) == LaurentPoly::variable(V, 0, -1));
    Rng rng(10);
    for (int i = 0; i < 30; ++i) {
        auto q = rand_ratfunc(rng, V);
        CHECK(parse_ratfunc(q.str(), V) == q);
    }
}

TEST_CASE("parser reports positions and rejects malformed input") {
    auto V = x_ring();
    CHECK_THROWS_AS(parse_laurent("x + z", V), ParseError);
    CHECK_THROWS_AS(parse_laurent("x +", V), ParseError);
    CHECK_THROWS_AS(parse_laurent("(x", V), ParseError);
    CHECK_THROWS_AS(parse_laurent("x ^ y", V), ParseError);
    CHECK_THROWS_AS(parse_laurent("x x", V), ParseError);
    CHECK_THROWS_AS(parse_laurent("1/(x - x)", V), ParseError);  // division by zero
    try {
        parse_laurent("x + z", V, 7);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 7);
        CHECK(e.col > 1);
    }
    // Laurent restriction: nontrivial denominators are rejected
    auto W = xy_ring();
    CHECK_THROWS_AS(parse_laurent("1/(1 + x)", W), ParseError);
    CHECK(parse_ratfunc("1/(1 + x)", W).den() ==
          LaurentPoly::constant(W, 1) + LaurentPoly::variable(W, 0));
}
