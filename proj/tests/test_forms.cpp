#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "salembraid/forms.hpp"

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

IntPoly lehmer() { return IntPoly::from_string("1 1 0 -1 -1 -1 -1 -1 0 1 1"); }

SalemCert lehmer_cert() {
    SalemResult r = salem_check(lehmer());
    REQUIRE(std::holds_alternative<SalemCert>(r));
    return std::get<SalemCert>(r);
}

RingMatrix const_diag(const VarsPtr& vars, std::vector<long> d) {
    RingMatrix m(vars, d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = RatFunc::constant(vars, mpq_class(d[i]));
    return m;
}

PointFn at_one() {
    return [](long prec) { return std::vector<ComplexBall>{ComplexBall::exact_int(1, prec)}; };
}

PointFn unit_point(mpq_class angle) {
    return [angle](long prec) {
        return std::vector<ComplexBall>{ComplexBall::unit(RealBall::from_mpq(angle, prec))};
    };
}

PointFn unit_pi_frac(int log2_den) {
    return [log2_den](long prec) {
        return std::vector<ComplexBall>{ComplexBall::unit(RealBall::pi(prec).div_2exp(log2_den))};
    };
}

}  // namespace

TEST_CASE("solve_invariant_form recovers squier up to scaling") {
    for (long n = 2; n <= 4; ++n) {
        Representation rep = burau_generators(n);
        FormSolution sol = solve_invariant_form(rep);
        CHECK(sol.dim_solution_space == 1);
        REQUIRE(sol.basis.size() == 1);
        const RingMatrix& b = sol.basis[0];
        for (const auto& g : rep.generators) CHECK(g.star() * b * g == b);

        RingMatrix j = squier_form(n);
        RatFunc lam = b.at(0, 0) / j.at(0, 0);
        CHECK(b == j.scale(lam));
        CHECK(!lam.num().is_zero());
    }
}

TEST_CASE("solve_invariant_form on an unconstrained generator") {
    auto vars = Vars::make({{"x", true}});
    Representation rep{"id3", 3, vars, {RingMatrix::identity(vars, 3)}};
    FormSolution sol = solve_invariant_form(rep);
    CHECK(sol.dim_solution_space == 9);
    for (const auto& b : sol.basis) CHECK(rep.generators[0].star() * b * rep.generators[0] == b);
}

TEST_CASE("solve_invariant_form for the bmw b3 fixture") {
    Representation rep = bmw_b3_generators();
    FormSolution sol = solve_invariant_form(rep);
    CHECK(sol.dim_solution_space == 1);
    REQUIRE(sol.basis.size() == 1);
    const RingMatrix& b = sol.basis[0];
    for (const auto& g : rep.generators) CHECK(g.star() * b * g == b);
    CHECK(!b.determinant().num().is_zero());
}

TEST_CASE("hermitianize") {
    auto vars = Vars::make({{"x", true}});

    RingMatrix j3 = squier_form(3);
    RingMatrix doubled = hermitianize(j3, RatFunc::constant(vars, 1));
    CHECK(doubled == j3.scale(RatFunc::constant(vars, 2)));

    // star(J) = -J collapses at beta = 1, works for star(beta) != beta
    RingMatrix anti(vars, 1);
    anti.at(0, 0) = parse_ratfunc("x - x^-1", vars);
    CHECK(anti.star() == anti.scale(RatFunc::constant(vars, -1)));
    CHECK_THROWS_AS(hermitianize(anti, RatFunc::constant(vars, 1)), DegenerateResult);
    RingMatrix fixed = hermitianize(anti, RatFunc::variable(vars, 0));
    CHECK(fixed.star() == fixed);
    CHECK(fixed.at(0, 0) == parse_ratfunc("x^2 + x^-2 - 2", vars));

    // hermitianizing the solved burau form lands back on squier
    FormSolution sol = solve_invariant_form(burau_generators(3));
    RingMatrix h = hermitianize(sol.basis[0], RatFunc::constant(vars, 1));
    CHECK(h.star() == h);
    RatFunc lam = h.at(0, 0) / j3.at(0, 0);
    CHECK(h == j3.scale(lam));
}

TEST_CASE("evaluate_hermitian guards the point contract") {
    RingMatrix j3 = squier_form(3);
    HermitianEval h = evaluate_hermitian(j3, at_one()(128));
    CHECK(h.dim == 3);
    CHECK(h.entries.at(0, 0).re.contains_mpq(2));

    // x = 2 breaks unitarity of the involution: J(2) is certifiably not
    // Hermitian as a complex matrix... except that squier entries are all
    // bar-fixed, so use a non-fixed entry instead
    auto vars = Vars::make({{"x", true}});
    RingMatrix m(vars, 2);
    m.at(0, 0) = RatFunc::constant(vars, 1);
    m.at(1, 1) = RatFunc::constant(vars, 1);
    m.at(0, 1) = RatFunc::variable(vars, 0);
    m.at(1, 0) = RatFunc::variable(vars, 0, -1);
    CHECK(m.star() == m);
    CHECK_THROWS_AS(
        evaluate_hermitian(m, {ComplexBall::exact_int(2, 128), ComplexBall::exact_int(2, 128)}),
        Error);
    HermitianEval ok = evaluate_hermitian(m, {ComplexBall::unit(RealBall::from_mpq(mpq_class(1, 3), 128))});
    CHECK(ok.dim == 2);
}

TEST_CASE("positive definiteness certification") {
    RingMatrix j3 = squier_form(3);
    CHECK(is_positive_definite_at(j3, at_one()));
    // inside the positivity arc |arg x| < pi/4
    CHECK(is_positive_definite_at(j3, unit_point(mpq_class(1, 10))));
    // certified failure well outside the arc
    CHECK(!is_positive_definite_at(j3, unit_point(mpq_class(2))));

    // t = i sits exactly on a determinant zero: never certifiable either way
    CHECK(squier_form(3).determinant().evaluate(unit_pi_frac(2)(256)).contains_zero());
    CHECK_THROWS_AS(is_positive_definite_at(j3, unit_pi_frac(2), Precision{128, 512}),
                    PrecisionInsufficient);

    auto vars = Vars::make({{"x", true}});
    CHECK(!is_positive_definite_at(const_diag(vars, {1, -1, 1}), at_one()));
    CHECK(is_positive_definite_at(const_diag(vars, {2, 1, 3}), at_one()));

    RingMatrix b4 = bmw_b4_form();
    CHECK(is_positive_definite_at(b4, gaussian_point({GaussianRational(0, 1), GaussianRational(1, 0)})));
}

TEST_CASE("signature certification") {
    auto vars = Vars::make({{"x", true}});
    SignatureResult s = signature_at(const_diag(vars, {1, -1, 1}), at_one());
    CHECK(s == SignatureResult{2, 1});

    RingMatrix j3 = squier_form(3);
    CHECK(signature_at(j3, unit_point(mpq_class(1, 10))) == SignatureResult{3, 0});
    // at x = e^{2i} the diagonal 2cos(2) < 0 leaves eigenvalues
    // 2cos(2) - sqrt(2), 2cos(2), 2cos(2) + sqrt(2): exactly one positive
    CHECK(signature_at(j3, unit_point(mpq_class(2))) == SignatureResult{1, 2});

    // hyperbolic plane: isotropic diagonal forces the 2x2 pivot path
    RingMatrix hyp(vars, 2);
    hyp.at(0, 1) = RatFunc::constant(vars, 1);
    hyp.at(1, 0) = RatFunc::constant(vars, 1);
    CHECK(signature_at(hyp, at_one()) == SignatureResult{1, 1});

    RingMatrix sing(vars, 2);
    sing.at(0, 0) = RatFunc::constant(vars, 1);
    CHECK_THROWS_AS(signature_at(sing, at_one(), Precision{128, 256}), DegenerateAtPoint);
}

TEST_CASE("signature is a congruence invariant") {
    auto vars = Vars::make({{"x", true}});
    RingMatrix j0 = const_diag(vars, {1, -1, 2});
    Rng rng(20260821);
    int done = 0;
    while (done < 5) {
        RingMatrix q(vars, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j)
                q.at(i, j) = RatFunc::constant(vars, mpq_class(rng.small(-3, 3)));
        if (q.determinant().num().is_zero()) continue;
        RingMatrix congruent = q.star() * j0 * q;
        CHECK(signature_at(congruent, at_one()) == SignatureResult{2, 1});
        ++done;
    }
}

TEST_CASE("determinant class scaling") {
    auto vars = Vars::make({{"x", true}});
    RingMatrix id3 = const_diag(vars, {1, 1, 1});
    RingMatrix two3 = const_diag(vars, {2, 2, 2});
    RatFunc lam = determinant_class_scaling(id3, two3);
    CHECK(lam == RatFunc::constant(vars, mpq_class(1, 8)));
    CHECK(two3.scale(lam).determinant() == RatFunc::constant(vars, mpq_class(1, 64)));
    CHECK(determinant_class_scaling(id3, id3) == RatFunc::constant(vars, 1));

    CHECK_THROWS_AS(determinant_class_scaling(const_diag(vars, {1, 1}), const_diag(vars, {1, 1})),
                    EvenDimension);
    CHECK_THROWS_AS(determinant_class_scaling(id3, const_diag(vars, {1, 0, 1})), SingularInput);
    CHECK_THROWS_AS(determinant_class_scaling(id3, const_diag(vars, {1, 1})), DimensionMismatch);
}

TEST_CASE("scaled determinants differ by a certified totally positive square") {
    // squier(3) specialized at x = s^8 versus x = s^16 (t = s^16 vs s^32):
    // at every unit-circle embedding the ratio det(J1)/det(lambda J2) is the
    // square of a real number, certified positive
    SalemCert cert = lehmer_cert();
    RatFunc det = squier_form(3).determinant();
    for (const auto& th : cert.arg_balls) {
        ComplexBall x1 = ComplexBall::unit(th.mul_z(8));
        ComplexBall x2 = ComplexBall::unit(th.mul_z(16));
        RealBall d1 = det.evaluate({x1}).re;
        RealBall d2 = det.evaluate({x2}).re;
        CHECK(!d1.contains_zero());
        CHECK(!d2.contains_zero());
        // lambda = d1/d2, so det(J1)/det(lambda J2) = (d2/d1)^2
        RealBall ratio = (d2 / d1) * (d2 / d1);
        CHECK(ratio.gt_zero());
    }
}

TEST_CASE("forms_equivalent_salem") {
    SalemCert cert = lehmer_cert();
    RingMatrix j3 = squier_form(3);
    auto vars = Vars::make({{"x", true}});

    auto r1 = forms_equivalent_salem(j3, j3, cert, {16, 16});
    REQUIRE(r1.has_value());
    CHECK(*r1);

    // 464 and 986 are certified members of the pi/4 landing set for the
    // x-circle, where squier(3) is positive definite: both specializations
    // are positive definite at every unit-circle embedding, hence equivalent
    auto r2 = forms_equivalent_salem(j3, j3, cert, {464, 986});
    REQUIRE(r2.has_value());
    CHECK(*r2);

    // different signatures at every embedding
    auto r3 = forms_equivalent_salem(const_diag(vars, {1, 1, 1}), const_diag(vars, {1, -1, 1}),
                                     cert, {16, 16});
    REQUIRE(r3.has_value());
    CHECK(!*r3);

    CHECK_THROWS_AS(
        forms_equivalent_salem(const_diag(vars, {1, 1}), const_diag(vars, {1, 1}), cert, {1, 1}),
        EvenDimension);
}
