#include <doctest.h>

#include "arithjet/base_ring.hpp"
#include "arithjet/fp_poly.hpp"
#include "arithjet/rng.hpp"

using namespace arithjet;

namespace {

// Independent Frobenius oracle: phi sends the residue generator to the
// Hensel-lifted conjugate root of the modulus, and phi(sum c_i X^i) is the
// evaluation at that root. This never touches the Teichmuller-digit path.
BaseElem phi_via_conjugate_root(const BaseElem& x) {
    auto ring = x.ring();
    const int f = ring->f();
    if (f == 1) return x;
    BaseElem xbar = ring->from_coeffs({BigInt(0), BigInt(1)}, x.prec());
    BaseElem rho = xbar.pow(static_cast<uint64_t>(ring->p()));
    auto eval_modulus = [&](const BaseElem& t) {
        BaseElem acc = t.pow(static_cast<uint64_t>(f));
        BaseElem tp = ring->one(x.prec());
        for (int i = 0; i < f; ++i) {
            acc = acc + ring->from_bigint(ring->modulus_low()[static_cast<size_t>(i)], x.prec()) * tp;
            tp = tp * t;
        }
        return acc;
    };
    auto eval_derivative = [&](const BaseElem& t) {
        BaseElem acc = ring->from_int(f, x.prec()) * t.pow(static_cast<uint64_t>(f - 1));
        BaseElem tp = ring->one(x.prec());
        for (int i = 1; i < f; ++i) {
            acc = acc + ring->from_int(i, x.prec()) *
                            ring->from_bigint(ring->modulus_low()[static_cast<size_t>(i)], x.prec()) * tp;
            tp = tp * t;
        }
        return acc;
    };
    for (int it = 0; it < x.prec() + 2; ++it)
        rho = rho - eval_modulus(rho) * eval_derivative(rho).inverse();
    BaseElem acc = ring->zero(x.prec());
    BaseElem rp = ring->one(x.prec());
    for (int i = 0; i < f; ++i) {
        acc = acc + ring->from_bigint(x.coeffs()[static_cast<size_t>(i)], x.prec()) * rp;
        rp = rp * rho;
    }
    return acc;
}

}  // namespace

TEST_CASE("frobenius is the identity for f = 1") {
    auto ring = BaseRing::make(3, 1, 3);
    CHECK(ring->from_int(2).frobenius() == ring->from_int(2));
    Rng rng(21);
    for (int i = 0; i < 50; ++i) {
        BaseElem x = ring->random(rng);
        CHECK(x.frobenius() == x);
    }
}

TEST_CASE("frobenius has order f and matches the conjugate-root oracle") {
    auto ring = BaseRing::make(2, 2, 4, {BigInt(1), BigInt(1)});  // X^2 + X + 1
    Rng rng(22);
    for (int i = 0; i < 60; ++i) {
        BaseElem x = ring->random(rng);
        BaseElem fx = x.frobenius();
        CHECK(fx.frobenius() == x);
        CHECK(fx == phi_via_conjugate_root(x));
    }
    auto ring3 = BaseRing::make(3, 2, 3);
    for (int i = 0; i < 40; ++i) {
        BaseElem x = ring3->random(rng);
        CHECK(x.frobenius().frobenius() == x);
        CHECK(x.frobenius() == phi_via_conjugate_root(x));
    }
    // higher residue degrees: sigma^f = id and no earlier
    for (auto [p, f] : std::vector<std::pair<int64_t, int>>{{2, 3}, {2, 4}, {3, 3}}) {
        auto ringf = BaseRing::make(p, f, 3);
        Rng rngf(static_cast<uint64_t>(60 + p + f));
        bool nontrivial = false;
        for (int i = 0; i < 15; ++i) {
            BaseElem x = ringf->random(rngf);
            BaseElem y = x;
            for (int k = 0; k < f; ++k) y = y.frobenius();
            CHECK(y == x);
            if (!(x.frobenius() == x)) nontrivial = true;
        }
        CHECK(nontrivial);
    }
}

TEST_CASE("frobenius is a ring homomorphism congruent to the p-power map") {
    for (auto [p, f] : std::vector<std::pair<int64_t, int>>{{2, 2}, {3, 2}, {5, 1}, {3, 1}}) {
        auto ring = BaseRing::make(p, f, 4);
        Rng rng(static_cast<uint64_t>(100 + p + f));
        for (int i = 0; i < 40; ++i) {
            BaseElem x = ring->random(rng), y = ring->random(rng);
            CHECK(x.frobenius() + y.frobenius() == (x + y).frobenius());
            CHECK(x.frobenius() * y.frobenius() == (x * y).frobenius());
            BaseElem diff = x.frobenius() - x.pow(static_cast<uint64_t>(p));
            for (const auto& c : diff.coeffs()) CHECK((c % BigInt(p)).is_zero());
            // the q-power congruence x = x^q mod p that backs the derivation
            BaseElem diffq = x - x.pow(ring->q());
            for (const auto& c : diffq.coeffs()) CHECK((c % BigInt(p)).is_zero());
        }
    }
}

TEST_CASE("delta on small integers") {
    auto ring3 = BaseRing::make(3, 1, 3);
    CHECK(ring3->from_int(2).delta() == ring3->from_int(-2, 2));
    CHECK(ring3->from_int(1).delta() == ring3->zero(2));
    auto ring5 = BaseRing::make(5, 1, 6);
    // (7 - 7^5)/5 = -3360, reduced mod 5^5
    CHECK(ring5->from_int(7).delta() == ring5->from_int(-3360, 5));
    CHECK(ring5->from_int(7).delta().prec() == 5);
}

TEST_CASE("teichmuller lifts") {
    auto ring5 = BaseRing::make(5, 1, 3);
    CHECK(ring5->teichmuller(ring5->zero(1)) == ring5->zero());
    CHECK(ring5->teichmuller(ring5->one(1)) == ring5->one());
    BaseElem t2 = ring5->teichmuller(ring5->from_int(2, 1));
    CHECK(t2.coeffs()[0].to_int64() == 57);
    // the lift solves X^q = X and sections reduction mod p
    CHECK(t2.pow(5) == t2);
    CHECK(t2.residue() == ring5->from_int(2, 1));
}

TEST_CASE("teichmuller is multiplicative, exhaustively for q <= 25") {
    for (auto [p, f] :
         std::vector<std::pair<int64_t, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}, {5, 2}}) {
        auto ring = BaseRing::make(p, f, 3);
        int64_t q = static_cast<int64_t>(ring->q());
        // enumerate the residue field through coefficient vectors
        std::vector<BaseElem> elems;
        for (int64_t code = 0; code < q; ++code) {
            std::vector<BigInt> c;
            int64_t v = code;
            for (int i = 0; i < f; ++i) {
                c.emplace_back(v % p);
                v /= p;
            }
            elems.push_back(ring->from_coeffs(std::move(c), 1));
        }
        for (const auto& a : elems) {
            for (const auto& b : elems) {
                CHECK(ring->teichmuller(a) * ring->teichmuller(b) == ring->teichmuller(a * b));
            }
            CHECK(ring->teichmuller(a).residue() == a);
        }
    }
}

TEST_CASE("exact_div_p") {
    auto ring = BaseRing::make(3, 1, 4);
    Rng rng(23);
    for (int i = 0; i < 20; ++i) {
        BaseElem x = ring->random(rng, 3);
        CHECK((ring->from_int(3, 4) * x).exact_div_p(1) == x);
    }
    CHECK(ring->zero().exact_div_p(2) == ring->zero(2));
    BaseElem d = ring->from_int(18).exact_div_p(2);
    CHECK(d == ring->from_int(2, 2));
    CHECK(d.prec() == 2);
    CHECK_THROWS_AS(ring->from_int(10).exact_div_p(1), DivisionNotExact);
}

TEST_CASE("mixed precision truncates to the minimum") {
    auto ring = BaseRing::make(3, 1, 4);
    BaseElem a = ring->from_int(5, 4);
    BaseElem b = ring->from_int(7, 2);
    CHECK((a + b).prec() == 2);
    CHECK((a * b).prec() == 2);
    // equality compares at the common precision
    CHECK(ring->from_int(5, 4) == ring->from_int(5 + 9, 2));
    CHECK(ring->from_int(5, 4) != ring->from_int(5 + 3, 2));
}

TEST_CASE("inverse of units and non-units") {
    for (auto [p, f] : std::vector<std::pair<int64_t, int>>{{3, 1}, {2, 2}, {5, 2}}) {
        auto ring = BaseRing::make(p, f, 4);
        Rng rng(static_cast<uint64_t>(40 + p * f));
        for (int i = 0; i < 30; ++i) {
            BaseElem u = ring->random_unit(rng);
            CHECK(u * u.inverse() == ring->one());
        }
        CHECK_THROWS_AS(ring->from_int(p).inverse(), NotInvertible);
    }
}

TEST_CASE("bundled default moduli are the deterministic search results") {
    // frozen table entries, re-verified against the search
    CHECK(BaseRing::default_modulus(2, 2) == std::vector<BigInt>{BigInt(1), BigInt(1)});  // X^2+X+1
    CHECK(BaseRing::default_modulus(3, 2) == std::vector<BigInt>{BigInt(1), BigInt(0)});  // X^2+1
    CHECK(BaseRing::default_modulus(5, 2) == std::vector<BigInt>{BigInt(2), BigInt(0)});  // X^2+2
    CHECK(BaseRing::default_modulus(2, 3) ==
          std::vector<BigInt>{BigInt(1), BigInt(1), BigInt(0)});  // X^3+X+1
    for (int64_t p : {2, 3, 5, 7}) {
        for (int f = 1; f <= 4; ++f) {
            auto low = BaseRing::default_modulus(p, f);
            fppoly::Poly m;
            for (const auto& c : low) m.push_back(c.to_int64());
            m.push_back(1);
            CHECK(fppoly::is_irreducible(m, p));
        }
    }
    CHECK_THROWS_AS(BaseRing::make(3, 2, 3, {BigInt(2), BigInt(0)}), RangeError);  // X^2+2 reducible mod 3
    CHECK_THROWS_AS(BaseRing::make(4, 1, 3), RangeError);                          // p not prime
}
