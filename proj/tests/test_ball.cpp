#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "salembraid/ball.hpp"

using namespace salembraid;

namespace {

// Deterministic 64-bit LCG for reproducible property tests.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 11;
    }
    long small(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

mpq_class rand_q(Rng& rng) {
    long num = rng.small(-999, 999);
    long den = rng.small(1, 97);
    return mpq_class(num, den);
}

}  // namespace

TEST_CASE("exact integers stay exact through ring operations") {
    auto a = RealBall::exact_int(3, 64);
    auto b = RealBall::exact_int(4, 64);
    auto c = a + b;
    CHECK(c.is_exact());
    CHECK(c.contains_mpq(7));
    auto d = a * b - b;
    CHECK(d.contains_mpq(8));
    CHECK((-a).contains_mpq(-3));
}

TEST_CASE("containment is preserved by random arithmetic against an exact mpq oracle") {
    Rng rng(20260821);
    for (int trial = 0; trial < 400; ++trial) {
        mpq_class qa = rand_q(rng), qb = rand_q(rng);
        RealBall a = RealBall::from_mpq(qa, 64);
        RealBall b = RealBall::from_mpq(qb, 64);
        mpq_class qacc = qa;
        RealBall acc = a;
        for (int step = 0; step < 20; ++step) {
            switch (rng.next() % 4) {
                case 0: acc = acc + b; qacc += qb; break;
                case 1: acc = acc - b; qacc -= qb; break;
                case 2: acc = acc * b; qacc *= qb; break;
                default:
                    if (qb != 0 && !(b.contains_zero())) {
                        acc = acc / b;
                        qacc /= qb;
                    }
                    break;
            }
            REQUIRE(acc.contains_mpq(qacc));
        }
    }
}

TEST_CASE("inverse of a zero-straddling ball is refused") {
    auto z = RealBall::from_mpq(mpq_class(1, 1000000), 64);
    auto w = z - RealBall::from_mpq(mpq_class(1, 1000000), 64);  // exact-ish zero
    CHECK(w.contains_zero());
    CHECK_THROWS_AS(w.inv(), PrecisionInsufficient);
}

TEST_CASE("sqrt_pos squares back to the input") {
    auto two = RealBall::exact_int(2, 128);
    auto r = two.sqrt_pos();
    CHECK((r * r).contains_mpq(2));
    CHECK(r.rad_d() < 1e-30);
    auto neg = RealBall::exact_int(-1, 128);
    CHECK_THROWS_AS(neg.sqrt_pos(), PrecisionInsufficient);
}

TEST_CASE("pi ball is consistent with sin and cos") {
    auto p = RealBall::pi(128);
    CHECK(p.sin().contains_zero());
    CHECK(p.cos().contains_mpq(-1));
    auto half = p.div_2exp(1);
    CHECK(half.cos().contains_zero());
    CHECK(half.sin().contains_mpq(1));
}

TEST_CASE("sin^2 + cos^2 encloses 1 for random angles") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        mpq_class q = rand_q(rng);
        auto x = RealBall::from_mpq(q, 128);
        auto s = x.sin(), c = x.cos();
        CHECK((s * s + c * c).contains_mpq(1));
    }
}

TEST_CASE("acos agrees with known values and guards its domain") {
    auto half = RealBall::from_mpq(mpq_class(1, 2), 128);
    auto third_pi = half.acos();
    auto diff = third_pi.mul_z(3) - RealBall::pi(128);
    CHECK(diff.contains_zero());
    CHECK_THROWS_AS(RealBall::exact_int(1, 128).acos(), PrecisionInsufficient);
    CHECK_THROWS_AS(RealBall::exact_int(2, 128).acos(), PrecisionInsufficient);
}

TEST_CASE("radius shrinks as precision grows") {
    auto lo = RealBall::pi(64).sin();
    auto hi = RealBall::pi(512).sin();
    CHECK(hi.rad_d() < lo.rad_d());
    CHECK(hi.rad_d() < 1e-150);
}

TEST_CASE("with_precision escalates and gives up at the cap") {
    Precision pc{64, 512};
    int calls = 0;
    long got = with_precision(pc, [&](long p) -> long {
        ++calls;
        if (p < 512) throw PrecisionInsufficient("not yet");
        return p;
    });
    CHECK(got == 512);
    CHECK(calls == 4);  // 64, 128, 256, 512
    CHECK_THROWS_AS(
        with_precision(pc, [&](long) -> int { throw PrecisionInsufficient("never"); }),
        PrecisionInsufficient);
}

TEST_CASE("unique_integer recovers integers only when certified") {
    auto near3 = RealBall::from_mpq(mpq_class(29999, 10000), 64) +
                 RealBall::from_mpq(mpq_class(1, 100), 64) * RealBall::exact_int(0, 64);
    // widen artificially by adding a coarse ball
    auto wide = RealBall::from_mpq(mpq_class(26, 10), 64) +
                (RealBall::from_mpq(mpq_class(1, 5), 64) - RealBall::from_mpq(mpq_class(1, 5), 8));
    auto n = RealBall::from_mpq(mpq_class(3), 64).unique_integer();
    REQUIRE(n.has_value());
    CHECK(*n == 3);
    CHECK(RealBall::from_mpq(mpq_class(5, 2), 64).unique_integer() == std::nullopt);
    (void)near3;
    (void)wide;
}

TEST_CASE("complex multiplication matches the exact Gaussian oracle") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        mpq_class ar = rand_q(rng), ai = rand_q(rng), br = rand_q(rng), bi = rand_q(rng);
        ComplexBall a(RealBall::from_mpq(ar, 64), RealBall::from_mpq(ai, 64));
        ComplexBall b(RealBall::from_mpq(br, 64), RealBall::from_mpq(bi, 64));
        ComplexBall p = a * b;
        CHECK(p.contains_gaussian(ar * br - ai * bi, ar * bi + ai * br));
        if (br != 0 || bi != 0) {
            mpq_class n2 = br * br + bi * bi;
            ComplexBall q = a / b;
            CHECK(q.contains_gaussian((ar * br + ai * bi) / n2, (ai * br - ar * bi) / n2));
        }
    }
}

TEST_CASE("unit circle points have modulus 1 and integer powers track angles") {
    auto theta = RealBall::from_mpq(mpq_class(7, 5), 256);
    auto z = ComplexBall::unit(theta);
    CHECK(z.abs2().contains_mpq(1));
    auto z5 = z.pow_si(5);
    auto w = ComplexBall::unit(theta.mul_z(5));
    CHECK((z5 - w).contains_zero());
    auto zm5 = z.pow_si(-5);
    CHECK((z5 * zm5).contains_gaussian(1, 0));
}

TEST_CASE("hex interval emission brackets the value") {
    auto p = RealBall::pi(128);
    std::string h = p.hex_interval();
    CHECK(h.front() == '[');
    CHECK(h.back() == ']');
    CHECK(h.find("0x") != std::string::npos);
    CHECK(h.find(',') != std::string::npos);
}
