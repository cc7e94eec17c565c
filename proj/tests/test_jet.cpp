#include <doctest.h>

#include "arithjet/base_ring.hpp"
#include "arithjet/jet.hpp"
#include "arithjet/rng.hpp"
#include "arithjet/witt.hpp"

using namespace arithjet;

namespace {

std::function<BigInt(const BigInt&)> idphi;

bool witt_same(const WittVec<BaseElem>& a, const WittVec<BaseElem>& b) {
    if (a.x.size() != b.x.size()) return false;
    for (size_t i = 0; i < a.x.size(); ++i)
        if (!(a.x[i] == b.x[i])) return false;
    return true;
}

AffinePresentation<BigInt> conic_presentation(int64_t p, const BigInt& c) {
    AffinePresentation<BigInt> A;
    A.p = p;
    A.f = 1;
    A.q = static_cast<uint64_t>(p);
    A.vars = {"x"};
    MPoly<BigInt> rel(1);
    rel.add_term({2}, BigInt(1));
    rel.add_term({0}, -c);
    A.relations = {rel};
    return A;
}

}  // namespace

TEST_CASE("jet of a free presentation adds prolonged variables and nothing else") {
    AffinePresentation<BigInt> A;
    A.p = 3;
    A.f = 1;
    A.q = 3;
    A.vars = {"x"};
    auto J = jet_presentation(A, 1, BigInt(1), idphi);
    CHECK(J.vars == std::vector<std::string>{"x", "x'"});
    CHECK(J.relations.empty());
    CHECK(J.u_images.size() == 1);
    CHECK(J.phi_images.size() == 1);
    // phi(x) = x^q + p x'
    MPoly<BigInt> expect(2);
    expect.add_term({3, 0}, BigInt(1));
    expect.add_term({0, 1}, BigInt(3));
    CHECK(J.phi_images[0] == expect);
}

TEST_CASE("phi image uses the q-power for f > 1") {
    AffinePresentation<BigInt> A;
    A.p = 2;
    A.f = 2;
    A.q = 4;
    A.vars = {"x"};
    auto J = jet_presentation(A, 1, BigInt(1), idphi);
    MPoly<BigInt> expect(2);
    expect.add_term({4, 0}, BigInt(1));
    expect.add_term({0, 1}, BigInt(2));
    CHECK(J.phi_images[0] == expect);  // x^{p^f} + p x'
}

TEST_CASE("prolonged relation of x^2 - c matches the Witt-coordinate oracle") {
    // coordinate 1 of f(X) in W_1(Z/9), computed through the universal Witt
    // product, must agree with the symbolic delta-relation evaluated at the
    // same coordinates
    auto A = conic_presentation(3, BigInt(7));
    auto J = jet_presentation(A, 1, BigInt(1), idphi);
    REQUIRE(J.relations.size() == 2);
    auto ring = BaseRing::make(3, 1, 2);
    BaseElem proto = ring->zero();
    auto P1 = witt_polys(3, 1, 1);
    auto seven = witt_int<BaseElem>(3, 3, BigInt(7), 1, proto);
    for (int b0 = 0; b0 < 9; ++b0) {
        for (int b1 = 0; b1 < 9; ++b1) {
            std::vector<BaseElem> vals = {ring->from_int(b0), ring->from_int(b1)};
            WittVec<BaseElem> X{{vals[0], vals[1]}};
            auto fX = witt_add(*P1, witt_mul(*P1, X, X, proto), witt_neg(*P1, seven, proto), proto);
            CHECK(eval_int_poly(J.relations[0], vals, proto) == fX.x[0]);
            CHECK(eval_int_poly(J.relations[1], vals, proto) == fX.x[1]);
        }
    }
    // shape: delta(x^2 - c) = 2 x^q x' + p x'^2 - delta(c) + C-terms; for f = 1,
    // q = p = 3 and c = 7 the correction C(x^2, -7) has integer coefficients
    MPoly<BigInt> d = J.relations[1];
    Exps lead = {3, 1};
    auto it = d.terms().find(lead);
    REQUIRE(it != d.terms().end());
    CHECK(it->second == BigInt(2));
}

TEST_CASE("jet relations count and wellformedness") {
    auto A = conic_presentation(3, BigInt(7));
    for (int n = 1; n <= 2; ++n) {
        auto J = jet_presentation(A, n, BigInt(1), idphi);
        CHECK(static_cast<int>(J.relations.size()) == (n + 1) * 1);
        CHECK(static_cast<int>(J.vars.size()) == (n + 1) * 1);
        CHECK(jet_wellformed(J, BigInt(1), idphi));
    }
    CHECK_THROWS_AS(jet_presentation(A, 3, BigInt(1), idphi), BoundExceeded);
}

TEST_CASE("u and delta commute on the canonical jet sequence") {
    // levels J^0..J^3 of the affine line; generators are the variables present
    // at each level, u is the inclusion, delta the symbolic derivation
    const int top = 4;
    std::vector<int> succ(top + 1);
    for (int i = 0; i <= top; ++i) succ[static_cast<size_t>(i)] = i < top ? i + 1 : -1;
    auto images = phi_var_images(top + 1, succ, 3, 3, BigInt(1));
    ProlongationSeq<MPoly<BigInt>> seq;
    seq.gens.resize(4);
    for (int lvl = 0; lvl < 4; ++lvl)
        for (int j = 0; j <= lvl; ++j)
            seq.gens[static_cast<size_t>(lvl)].push_back(MPoly<BigInt>::variable(top + 1, j, BigInt(1)));
    seq.u = [](int, const MPoly<BigInt>& e) { return e; };
    seq.delta = [images](int, const MPoly<BigInt>& e) { return poly_delta(e, images, idphi, 3, 3); };
    seq.eq = [](int, const MPoly<BigInt>& a, const MPoly<BigInt>& b) { return a == b; };
    CHECK(check_prolongation_commutation(seq));
}

TEST_CASE("order-1 points of the jet presentation enumerate Witt points") {
    auto A = conic_presentation(3, BigInt(7));
    auto J = jet_presentation(A, 1, BigInt(1), idphi);
    auto ring = BaseRing::make(3, 1, 2);
    BaseElem proto = ring->zero();
    auto P1 = witt_polys(3, 1, 1);
    auto target = witt_int<BaseElem>(3, 3, BigInt(7), 1, proto);
    std::vector<std::pair<int, int>> jet_points, witt_points;
    for (int a = 0; a < 9; ++a) {
        for (int b = 0; b < 9; ++b) {
            std::vector<BaseElem> vals = {ring->from_int(a), ring->from_int(b)};
            bool ok = true;
            for (const auto& r : J.relations)
                if (!eval_int_poly(r, vals, proto).is_zero()) ok = false;
            if (ok) jet_points.emplace_back(a, b);
            WittVec<BaseElem> X{{vals[0], vals[1]}};
            if (witt_same(witt_mul(*P1, X, X, proto), target)) witt_points.emplace_back(a, b);
        }
    }
    CHECK(!jet_points.empty());
    CHECK(jet_points == witt_points);
}

TEST_CASE("order-1 points of a two-variable presentation enumerate Witt points") {
    // the unit circle xy = 1 over Z/4 (p = 2): jet points of order 1 against
    // solutions of XY = 1 in W_1(Z/4)
    AffinePresentation<BigInt> A;
    A.p = 2;
    A.f = 1;
    A.q = 2;
    A.vars = {"x", "y"};
    MPoly<BigInt> rel(2);
    rel.add_term({1, 1}, BigInt(1));
    rel.add_term({0, 0}, BigInt(-1));
    A.relations = {rel};
    auto J = jet_presentation(A, 1, BigInt(1), idphi);
    REQUIRE(J.relations.size() == 2);
    auto ring = BaseRing::make(2, 1, 2);
    BaseElem proto = ring->zero();
    auto P1 = witt_polys(2, 1, 1);
    auto one_w = witt_int<BaseElem>(2, 2, BigInt(1), 1, proto);
    size_t jet_count = 0, witt_count = 0;
    for (int x0 = 0; x0 < 4; ++x0)
        for (int y0 = 0; y0 < 4; ++y0)
            for (int x1 = 0; x1 < 4; ++x1)
                for (int y1 = 0; y1 < 4; ++y1) {
                    std::vector<BaseElem> vals = {ring->from_int(x0), ring->from_int(y0),
                                                  ring->from_int(x1), ring->from_int(y1)};
                    bool sat = true;
                    for (const auto& r : J.relations)
                        if (!eval_int_poly(r, vals, proto).is_zero()) sat = false;
                    if (sat) ++jet_count;
                    WittVec<BaseElem> X{{vals[0], vals[2]}};
                    WittVec<BaseElem> Y{{vals[1], vals[3]}};
                    if (witt_same(witt_mul(*P1, X, Y, proto), one_w)) ++witt_count;
                }
    CHECK(jet_count == witt_count);
    CHECK(jet_count > 0);
}

TEST_CASE("jets over base-ring coefficients track precision") {
    // same presentation through exact integers and through W(F_3) elements;
    // the delta-relation coefficients agree at the surviving precision N - 1
    auto ring = BaseRing::make(3, 1, 3);
    AffinePresentation<BaseElem> A;
    A.p = 3;
    A.f = 1;
    A.q = 3;
    A.vars = {"x"};
    MPoly<BaseElem> rel(1);
    rel.add_term({2}, ring->one());
    rel.add_term({0}, ring->from_int(-7));
    A.relations = {rel};
    std::function<BaseElem(const BaseElem&)> base_phi = [](const BaseElem& c) { return c; };
    auto J = jet_presentation(A, 1, ring->one(), base_phi);
    REQUIRE(J.relations.size() == 2);

    auto Ai = conic_presentation(3, BigInt(7));
    auto Ji = jet_presentation(Ai, 1, BigInt(1), idphi);
    BaseElem proto = ring->zero();
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<BaseElem> vals = {ring->random(rng), ring->random(rng)};
        BaseElem lhs = J.relations[1].eval(vals);
        BaseElem rhs = eval_int_poly(Ji.relations[1], vals, proto);
        CHECK(lhs.prec() == 2);  // one delta application costs one level
        CHECK(lhs == rhs.at_prec(2));
    }
}

TEST_CASE("witt_int images have constant ghost vectors") {
    auto ring = BaseRing::make(3, 1, 4);
    BaseElem proto = ring->zero();
    for (int64_t c : {0, 1, 7, -5, 100}) {
        auto w = witt_int<BaseElem>(3, 3, BigInt(c), 2, proto);
        auto g = ghost(3, 3, w, proto);
        for (const auto& gi : g) CHECK(gi == ring->from_int(c));
    }
}

TEST_CASE("frobenius map composes to the double substitution") {
    AffinePresentation<BigInt> A;
    A.p = 3;
    A.f = 1;
    A.q = 3;
    A.vars = {"x"};
    auto J2 = jet_presentation(A, 2, BigInt(1), idphi);
    // phi(phi(x)) at order 2: (x^q + p x')^q + p ((x')^q + p x'')
    auto succ = jet_successors(1, 2);
    auto images = phi_var_images(3, succ, 3, 3, BigInt(1));
    MPoly<BigInt> x = MPoly<BigInt>::variable(3, 0, BigInt(1));
    MPoly<BigInt> phi2 = poly_phi(poly_phi(x, images, idphi), images, idphi);
    MPoly<BigInt> inner = MPoly<BigInt>::variable(3, 0, BigInt(1)).pow(3) +
                          MPoly<BigInt>::variable(3, 1, BigInt(1)).scale(BigInt(3));
    MPoly<BigInt> expect = inner.pow(3) +
                           (MPoly<BigInt>::variable(3, 1, BigInt(1)).pow(3) +
                            MPoly<BigInt>::variable(3, 2, BigInt(1)).scale(BigInt(3)))
                               .scale(BigInt(3));
    CHECK(phi2 == expect);
    // ghost polynomials are exactly (x, phi x, phi^2 x)
    auto gh = jet_ghost_polys(J2, BigInt(1), idphi)[0];
    CHECK(gh[0] == x);
    CHECK(gh[1] == poly_phi(x, images, idphi));
    CHECK(gh[2] == phi2);
}

TEST_CASE("kummer jets of t^m = h") {
    // q = 5, m = 4, generic symbolic h
    auto K = kummer_jet(5, 1, 3, 4, 2);
    CHECK(K.vars == std::vector<std::string>{"t", "h", "h'", "h''"});
    CHECK(K.solved.size() == 2);
    CHECK(kummer_verify(K));
    // single relation t^m - h with t' and t'' eliminated
    MPoly<BigInt> expect(4);
    expect.add_term({4, 0, 0, 0}, BigInt(1));
    expect.add_term({0, 1, 0, 0}, BigInt(-1));
    CHECK(K.relation == expect);
    // the leading mod-p shape of delta(t^4 - h) is 4 t^{15} t' - h'
    // (checked through the solved value: t' = h'/(4 t^{15}) + O(p))
    auto ring = BaseRing::make(5, 1, 3);
    // concrete h = 1: all prolongations of t vanish
    auto solved1 = kummer_solved_concrete(K, ring, ring->one(), ring->one());
    for (const auto& comps : solved1)
        for (const auto& c : comps) CHECK(c.is_zero());
    // concrete h = 7 (a unit): back-substitute the first prolongation into
    // delta(t^4 - h) evaluated in S[t]/(t^4 - h)
    BaseElem h = ring->from_int(7);
    auto solved7 = kummer_solved_concrete(K, ring, h, h.inverse());
    // delta(t^4 - h) = 4 t^{15} t' + 30 t^{10} t'^2 + 100 t^5 t'^3 + 125 t'^4 - h'
    // evaluate with t' = solved, reducing t^4 -> h as we go
    auto mulmod = [&](const std::vector<BaseElem>& a, const std::vector<BaseElem>& b) {
        std::vector<BaseElem> r(4, ring->zero());
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                BaseElem v = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
                int k = i + j;
                if (k >= 4) {
                    k -= 4;
                    v = v * h;
                }
                r[static_cast<size_t>(k)] = r[static_cast<size_t>(k)] + v;
            }
        return r;
    };
    auto tpow = [&](int e) {
        std::vector<BaseElem> r(4, ring->zero());
        int k = e % 4, s = e / 4;
        BaseElem v = ring->one();
        for (int i = 0; i < s; ++i) v = v * h;
        r[static_cast<size_t>(k)] = v;
        return r;
    };
    auto scale = [&](int64_t c, const std::vector<BaseElem>& a) {
        std::vector<BaseElem> r = a;
        for (auto& v : r) v = ring->from_int(c) * v;
        return r;
    };
    auto addv = [&](std::vector<BaseElem> a, const std::vector<BaseElem>& b) {
        for (int i = 0; i < 4; ++i) a[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)];
        return a;
    };
    const auto& tp = solved7[0];
    auto tp2 = mulmod(tp, tp);
    auto tp3 = mulmod(tp2, tp);
    auto tp4 = mulmod(tp2, tp2);
    std::vector<BaseElem> acc(4, ring->zero());
    acc = addv(acc, mulmod(scale(4, tpow(15)), tp));
    acc = addv(acc, mulmod(scale(30, tpow(10)), tp2));
    acc = addv(acc, mulmod(scale(100, tpow(5)), tp3));
    acc = addv(acc, scale(125, tp4));
    acc[0] = acc[0] - h.delta();
    for (const auto& c : acc) CHECK(c.at_prec(2).is_zero());  // h' enters at precision N-1

    CHECK_THROWS_AS(kummer_jet(5, 1, 3, 5, 1), NotCoprime);
    CHECK_THROWS_AS(kummer_jet(5, 1, 3, 10, 1), NotCoprime);
    // non-unit h or a wrong inverse certificate is rejected
    CHECK_THROWS_AS(kummer_solved_concrete(K, ring, ring->from_int(5), ring->one()), NotAUnit);
    CHECK_THROWS_AS(kummer_solved_concrete(K, ring, ring->from_int(7), ring->from_int(3)), NotAUnit);
}
