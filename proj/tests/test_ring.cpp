#include <catch2/catch.hpp>

#include "helpers.hpp"
#include "kzl/ring.hpp"

using namespace kzl;
using namespace kzltest;

TEST_CASE("addition in the coefficient ring") {
    Params P2 = Params::make(2, 2, 3, 8);
    Params P3 = Params::make(3, 2, 3, 8);

    // (u_1 + u) + u = u_1 + 2u, which collapses to u_1 in characteristic 2
    RingElement x3 = elem(P3, {{mono(0, {1}), 1}, {mono(1), 1}});
    RingElement s3 = add(x3, RingElement::uPower(1, P3), P3);
    CHECK(s3 == elem(P3, {{mono(0, {1}), 1}, {mono(1), 2}}));

    RingElement x2 = elem(P2, {{mono(0, {1}), 1}, {mono(1), 1}});
    RingElement s2 = add(x2, RingElement::uPower(1, P2), P2);
    CHECK(s2 == elem(P2, {{mono(0, {1}), 1}}));

    // x + 0 = x
    CHECK(add(x3, RingElement::zero(), P3) == x3);

    // u^3 + u^3 = 2 u^3 at p = 3
    RingElement u3 = RingElement::uPower(3, P3);
    CHECK(add(u3, u3, P3) == elem(P3, {{mono(3), 2}}));
}

TEST_CASE("multiplication and grading") {
    Params P2 = Params::make(2, 2, 3, 8);

    // (u_1 + u) * u^2 = u_1 u^2 + u^3
    RingElement x = elem(P2, {{mono(0, {1}), 1}, {mono(1), 1}});
    CHECK(mul(x, RingElement::uPower(2, P2), P2) ==
          elem(P2, {{mono(2, {1}), 1}, {mono(3), 1}}));

    // u_1 * u_1 = u_1^2
    RingElement u1 = RingElement::var(1, P2);
    CHECK(mul(u1, u1, P2) == elem(P2, {{mono(0, {2}), 1}}));

    // |u_1 * u^3| = 6 with adic order 1
    RingElement prod = mul(u1, RingElement::uPower(3, P2), P2);
    CHECK(prod.internalDegree() == 6);
    CHECK(prod.terms.begin()->first.adicOrder() == 1);

    // u_n = 1: index-n multiplication acts trivially
    CHECK(RingElement::var(P2.n, P2) == RingElement::one(P2));
    // the prime itself is zero
    CHECK(RingElement::var(0, P2).isZero());
}

TEST_CASE("division by u-powers") {
    Params P2 = Params::make(2, 2, 3, 8);
    Params P2n3 = Params::make(2, 3, 3, 16);

    RingElement x = elem(P2, {{mono(3), 1}, {mono(2, {1}), 1}}); // u^3 + u_1 u^2
    CHECK(divideByUPower(x, 2, P2) == elem(P2, {{mono(1), 1}, {mono(0, {1}), 1}}));

    // u^{w(2)} u_2 / u^{w(2)} = u_2 at p = 2 (w(2) = 3)
    RingElement y = elem(P2n3, {{mono(3, {0, 1}), 1}});
    CHECK(divideByUPower(y, P2n3.w(2), P2n3) == elem(P2n3, {{mono(0, {0, 1}), 1}}));

    CHECK_THROWS_AS(divideByUPower(RingElement::var(1, P2), 1, P2), Error);
}

TEST_CASE("monomial ideal decomposition") {
    Params P = Params::make(2, 3, 3, 16);

    // u_1 u + u_2^2 over (u_1, u_2): greedy smallest dividing index
    RingElement c = elem(P, {{mono(1, {1, 0}), 1}, {mono(0, {0, 2}), 1}});
    auto parts = monomialIdealDecompose(c, 3, P);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(1) == RingElement::uPower(1, P));
    CHECK(parts.at(2) == elem(P, {{mono(0, {0, 1}), 1}}));

    auto sq = monomialIdealDecompose(elem(P, {{mono(0, {2, 0}), 1}}), 2, P);
    REQUIRE(sq.size() == 1);
    CHECK(sq.at(1) == elem(P, {{mono(0, {1, 0}), 1}}));

    CHECK_THROWS_AS(monomialIdealDecompose(RingElement::uPower(2, P), 2, P), Error);
}

TEST_CASE("adic truncation") {
    Params P = Params::make(2, 2, 3, 8);
    Params P3 = Params::make(2, 3, 3, 8);

    RingElement x = elem(P, {{mono(0), 1}, {mono(0, {1}), 1}, {mono(0, {3}), 1}});
    CHECK(truncateAdic(x, 3) == elem(P, {{mono(0), 1}, {mono(0, {1}), 1}}));
    CHECK(truncateAdic(RingElement::uPower(2, P), 1) == RingElement::uPower(2, P));
    CHECK(truncateAdic(elem(P3, {{mono(0, {1, 1}), 1}}), 2).isZero());
}

TEST_CASE("ring laws on random sparse elements") {
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int n : {1, 2, 3, 4}) {
            Params P = Params::make(p, n, 3, 8);
            Rng rng(1000 * p + n);
            for (int trial = 0; trial < 50; ++trial) {
                RingElement a = randomRing(rng, P);
                RingElement b = randomRing(rng, P);
                RingElement c = randomRing(rng, P);
                CHECK(add(a, b, P) == add(b, a, P));
                CHECK(mul(a, b, P) == mul(b, a, P));
                CHECK(mul(mul(a, b, P), c, P) == mul(a, mul(b, c, P), P));
                CHECK(mul(a, add(b, c, P), P) == add(mul(a, b, P), mul(a, c, P), P));

                // grading is additive on homogeneous inputs
                if (!a.isZero() && !b.isZero()) {
                    RingElement am = RingElement::monomial(a.terms.begin()->first, 1, P);
                    RingElement bm = RingElement::monomial(b.terms.begin()->first, 1, P);
                    CHECK(mul(am, bm, P).internalDegree() ==
                          am.internalDegree() + bm.internalDegree());
                }

                // dividing out a u-power recovers the factor
                int k = rng.upTo(3);
                CHECK(divideByUPower(mul(RingElement::uPower(k, P), a, P), k, P) == a);
            }
        }
    }
}

TEST_CASE("decomposition recomposes exactly") {
    Params P = Params::make(3, 4, 3, 8);
    Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        int j0 = 2 + rng.upTo(2); // 2..4
        RingElement c;
        for (int i = 0; i < 3; ++i) {
            RingElement m = randomRing(rng, P, 1, 2);
            int j = 1 + rng.upTo(j0 - 2);
            c = add(c, mul(m, RingElement::var(j, P), P), P);
        }
        if (c.isZero())
            continue;
        auto parts = monomialIdealDecompose(c, j0, P);
        RingElement back;
        for (const auto& [j, sj] : parts)
            back = add(back, mul(sj, RingElement::var(j, P), P), P);
        CHECK(back == c);
    }
}
