#include <catch2/catch.hpp>

#include "helpers.hpp"
#include "kzl/presentation.hpp"
#include "kzl/verify.hpp"

using namespace kzl;
using namespace kzltest;

TEST_CASE("relation generator inventory") {
    Params P2 = Params::make(2, 2, 3, 8);
    auto rels2 = relationGenerators(P2);
    // p (vacuous), u^1 u_1, u^3, u^1 f{1,2}, f{1,2} f{1,2}; no exchange at n = 2
    int vacuous = 0, upower = 0, alpha = 0, exch = 0, prod = 0;
    for (const auto& r : rels2) {
        if (r.kind == RelKind::UPowerTimesUi)
            r.vacuous ? ++vacuous : ++upower;
        if (r.kind == RelKind::AlphaTimesF)
            ++alpha;
        if (r.kind == RelKind::Exchange)
            ++exch;
        if (r.kind == RelKind::Product)
            ++prod;
    }
    CHECK(vacuous == 1);
    CHECK(upower == 2);
    CHECK(alpha == 1);
    CHECK(exch == 0);
    CHECK(prod == 1);

    // n = 3 has the exchange u_1 f{2,3} - u_2 f{1,3}
    Params P3 = Params::make(2, 3, 3, 20);
    bool found = false;
    for (const auto& r : relationGenerators(P3))
        if (r.kind == RelKind::Exchange && r.I == subsetOf({3}) && r.a == 1 && r.b == 2)
            found = true;
    CHECK(found);

    // n = 1: only the u-power relations survive
    Params P1 = Params::make(2, 1, 3, 4);
    auto rels1 = relationGenerators(P1);
    int real1 = 0;
    for (const auto& r : rels1) {
        CHECK(r.kind == RelKind::UPowerTimesUi);
        if (!r.vacuous)
            ++real1;
    }
    CHECK(real1 == 1);
}

TEST_CASE("product reduction") {
    Params P4 = Params::make(2, 4, 3, 82);

    // disjoint words: remove the minimum of the second factor
    FProduct r = productReduce(subsetOf({1, 2}), subsetOf({3, 4}), P4);
    REQUIRE_FALSE(r.zero);
    CHECK(r.uIndex == 3);
    CHECK(r.word == subsetOf({1, 2, 4}));
    CHECK(r.signExp == 0);

    // tie on the minimum: still remove from the second factor
    Params P3 = Params::make(3, 3, 3, 124);
    FProduct t1 = productReduce(subsetOf({1, 2}), subsetOf({1, 3}), P3);
    REQUIRE_FALSE(t1.zero);
    CHECK(t1.uIndex == 1);
    CHECK(t1.word == subsetOf({1, 2, 3}));
    CHECK(t1.signExp == 0);
    FProduct t2 = productReduce(subsetOf({1, 3}), subsetOf({1, 2}), P3);
    REQUIRE_FALSE(t2.zero);
    CHECK(t2.uIndex == 1);
    CHECK(t2.word == subsetOf({1, 2, 3}));
    CHECK(t2.signExp == 1);

    // overlap beyond the removed minimum kills the product
    CHECK(productReduce(subsetOf({2, 3}), subsetOf({1, 3}), P3).zero);
    CHECK(productReduce(subsetOf({1, 2}), subsetOf({1, 2}), P3).zero);
}

TEST_CASE("product reduction is graded-commutative") {
    for (uint32_t p : {2u, 3u}) {
        Params P = Params::make(p, 4, 3, 82);
        for (Subset I = 0; I < (1u << 4); ++I) {
            if (subsetSize(I) < 2)
                continue;
            for (Subset J = 0; J < (1u << 4); ++J) {
                if (subsetSize(J) < 2)
                    continue;
                FProduct a = productReduce(I, J, P);
                FProduct b = productReduce(J, I, P);
                CHECK(a.zero == b.zero);
                if (a.zero)
                    continue;
                CHECK(a.word == b.word);
                CHECK(a.uIndex == b.uIndex);
                int gradedSign = ((subsetSize(I) - 1) * (subsetSize(J) - 1)) % 2;
                CHECK((a.signExp + b.signExp) % 2 == gradedSign);
            }
        }
    }
}

TEST_CASE("products match the complex up to boundaries") {
    for (uint32_t p : {2u, 3u}) {
        Params P = Params::make(p, 3, 3, 124);
        for (Subset I = 0; I < (1u << 3); ++I) {
            if (subsetSize(I) < 2)
                continue;
            for (Subset J = 0; J < (1u << 3); ++J) {
                if (subsetSize(J) < 2)
                    continue;
                KoszulElement lhs = wedge(psi(I, P), psi(J, P), P);
                FProduct pr = productReduce(I, J, P);
                KoszulElement rhs;
                if (!pr.zero)
                    rhs = scale(mulRing(psi(pr.word, P), RingElement::var(pr.uIndex, P), P),
                                pr.signValue(P), P);
                CHECK(isBoundary(sub(lhs, rhs, P), P).isBoundary);
            }
        }
    }
}

TEST_CASE("alpha multiples bound exactly") {
    for (uint32_t p : {2u, 3u}) {
        for (int n : {2, 3, 4}) {
            Params P = Params::make(p, n, 3, 8);
            for (Subset I = 0; I < (1u << n); ++I) {
                if (subsetSize(I) < 2)
                    continue;
                KoszulElement lhs =
                    mulRing(psi(I, P), RingElement::uPower(P.w(subsetMin(I)), P), P);
                CHECK(lhs == differential(vbarWord(I, P), P));
            }
        }
    }
}

TEST_CASE("presentation slices") {
    Params P = Params::make(2, 2, 3, 8);
    PresSlice s16 = presentationSlice(P, 1, 6);
    CHECK(s16.dim == 3);
    for (const auto& pm : s16.basis)
        CHECK(pm.I == subsetOf({1, 2}));

    CHECK(presentationSlice(P, 0, 4).dim == 1);
    CHECK(presentationSlice(P, 1, 4).dim == 0);
}

TEST_CASE("verification passes and fails honestly") {
    PresentationReport ok = verifyPresentation(Params::make(2, 2, 3, 10));
    CHECK(ok.pass);

    PresentationReport ok3 = verifyPresentation(Params::make(3, 2, 3, 20));
    CHECK(ok3.pass);

    // dropping the exchange family at n = 3 breaks the dimension match
    PresOptions crippled;
    crippled.useExchange = false;
    PresentationReport bad = verifyPresentation(Params::make(2, 3, 3, 20), crippled);
    CHECK_FALSE(bad.pass);
    bool sawDimFailure = false;
    for (const auto& row : bad.dims)
        if (!row.ok)
            sawDimFailure = true;
    CHECK(sawDimFailure);
}
