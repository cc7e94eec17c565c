#include <doctest.h>

#include "arithjet/graded.hpp"
#include "arithjet/rng.hpp"

using namespace arithjet;

namespace {

KummerAlgebra make_algebra(int64_t q, int N = 3, int64_t h = 2) {
    auto ring = BaseRing::make(q, 1, N);
    BaseElem hh = ring->from_int(h);
    return KummerAlgebra(ring, hh, hh.inverse());
}

}  // namespace

TEST_CASE("diamond action basics") {
    auto alg = make_algebra(5);
    auto ring = alg.ring();
    Rng rng(81);
    auto x = alg.random(rng);
    CHECK(alg.eq(alg.diamond_act(1, x), x));
    // on monomials: <d> t^r = theta(d)^{-r} t^r
    for (int r = 0; r < alg.m(); ++r) {
        BaseElem c = ring->random(rng);
        auto tr = alg.monomial(r, c);
        auto acted = alg.diamond_act(2, tr);
        BaseElem scale = alg.theta(2).inverse().pow(static_cast<uint64_t>(r));
        CHECK(alg.eq(acted, alg.monomial(r, c * scale)));
    }
    // theta(2) at p = 5, N = 3 is 57 mod 125
    CHECK(alg.theta(2).coeffs()[0].to_int64() == 57);
    CHECK_THROWS_AS(alg.diamond_act(5, x), NotAUnit);
}

TEST_CASE("diamond action is a group action and a ring automorphism fixing S_n") {
    for (int64_t q : {5, 7}) {
        auto alg = make_algebra(q);
        auto ring = alg.ring();
        Rng rng(static_cast<uint64_t>(82 + q));
        for (int i = 0; i < 40; ++i) {
            int64_t d1 = 1 + static_cast<int64_t>(rng.below(static_cast<uint64_t>(q - 1)));
            int64_t d2 = 1 + static_cast<int64_t>(rng.below(static_cast<uint64_t>(q - 1)));
            auto x = alg.random(rng);
            auto y = alg.random(rng);
            CHECK(alg.eq(alg.diamond_act(d1, alg.diamond_act(d2, x)),
                         alg.diamond_act((d1 * d2) % q, x)));
            CHECK(alg.eq(alg.diamond_act(d1, alg.mul(x, y)),
                         alg.mul(alg.diamond_act(d1, x), alg.diamond_act(d1, y))));
            CHECK(alg.eq(alg.diamond_act(d1, alg.add(x, y)),
                         alg.add(alg.diamond_act(d1, x), alg.diamond_act(d1, y))));
            // scalars are fixed
            BaseElem c = ring->random(rng);
            CHECK(alg.eq(alg.diamond_act(d1, alg.constant(c)), alg.constant(c)));
            // the action order divides q - 1
            auto z = x;
            for (int k = 0; k < alg.m(); ++k) z = alg.diamond_act(d1, z);
            CHECK(alg.eq(z, x));
        }
    }
}

TEST_CASE("tau decomposition round trip") {
    for (int64_t q : {5, 7}) {
        auto alg = make_algebra(q);
        Rng rng(static_cast<uint64_t>(83 + q));
        for (int i = 0; i < 100; ++i) {
            auto x = alg.random(rng);
            CHECK(alg.eq(alg.reassemble(alg.tau_decompose(x)), x));
        }
        // t and h = t^{q-1}
        auto t = alg.monomial(1, alg.ring()->one());
        auto dec = alg.tau_decompose(t);
        REQUIRE(dec.components.size() == 1);
        CHECK(dec.components.count(1) == 1);
        CHECK(dec.components.at(1) == alg.ring()->one());
        auto hh = alg.pow(t, static_cast<uint64_t>(alg.m()));
        auto dec_h = alg.tau_decompose(hh);
        REQUIRE(dec_h.components.size() == 1);
        CHECK(dec_h.components.at(0) == alg.h());
    }
}

TEST_CASE("eigenweight") {
    auto alg = make_algebra(5);
    auto ring = alg.ring();
    Rng rng(84);
    for (int r = 0; r < alg.m(); ++r) {
        auto eig = alg.eigenweight(alg.monomial(r, ring->one()));
        REQUIRE(eig.weight.has_value());
        CHECK(*eig.weight == ((-r) % alg.m() + alg.m()) % alg.m());
        // invariance under scaling by a nonzero scalar
        auto eig2 = alg.eigenweight(alg.monomial(r, ring->from_int(3)));
        CHECK(eig2.weight == eig.weight);
    }
    // t + t^2 occupies two pieces
    auto x = alg.add(alg.monomial(1, ring->one()), alg.monomial(2, ring->one()));
    auto eig = alg.eigenweight(x);
    CHECK(!eig.weight.has_value());
    CHECK(eig.occupied == std::set<int>{1, 2});
    CHECK_THROWS_AS(alg.eigenweight(alg.zero()), ZeroElement);

    // eigenweight is computable through the generator action too
    int64_t g = find_generator(5);
    for (int r = 0; r < alg.m(); ++r) {
        auto tr = alg.monomial(r, ring->one());
        auto acted = alg.diamond_act(g, tr);
        int kprime = *alg.eigenweight(tr).weight;
        auto expected = alg.scale(alg.theta(g).pow(static_cast<uint64_t>(kprime)), tr);
        CHECK(alg.eq(acted, expected));
    }
    // t^a t^b reduces to weight -(a+b)
    auto prod = alg.mul(alg.monomial(3, ring->one()), alg.monomial(2, ring->one()));
    CHECK(*alg.eigenweight(prod).weight == ((-5) % 4 + 4) % 4);
}

TEST_CASE("synthetic companion-weight shell") {
    // q = 7, k = 3, c = 5: k' = c(k-2) = 5 mod 6
    auto alg = make_algebra(7, 3, 3);
    int64_t k = 3, c = 5;
    int64_t kprime = ((c * (k - 2)) % 6 + 6) % 6;
    CHECK(kprime == 5);
    int r = static_cast<int>(((-kprime) % 6 + 6) % 6);
    auto x = alg.monomial(r, alg.ring()->from_int(4));
    CHECK(*alg.eigenweight(x).weight == kprime);
    // and the parallel-weight formula for ordinary companion forms
    CHECK(companion_weight(3, 7) == 5);
    CHECK(companion_weight(4, 5) == 2);
    CHECK(companion_weight(5, 11) == 7);
    CHECK_THROWS_AS(companion_weight(2, 7), RangeError);
    CHECK_THROWS_AS(companion_weight(7, 7), RangeError);
}

TEST_CASE("hasse root check") {
    auto alg = make_algebra(5);
    auto ring = alg.ring();
    auto t = alg.monomial(1, ring->one());
    CHECK(alg.hasse_root_check(t, alg.h()));
    CHECK(alg.hasse_root_check(alg.mul(t, t), alg.h() * alg.h()));
    auto t1 = alg.add(t, alg.constant(ring->one()));
    CHECK(!alg.hasse_root_check(t1, alg.h()));
}

TEST_CASE("unit certificate is validated") {
    auto ring = BaseRing::make(5, 1, 3);
    CHECK_THROWS_AS(KummerAlgebra(ring, ring->from_int(5), ring->from_int(1)), NotAUnit);
    CHECK_THROWS_AS(KummerAlgebra(ring, ring->from_int(2), ring->from_int(2)), NotAUnit);
}
