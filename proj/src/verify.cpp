#include "arithjet/verify.hpp"

#include "arithjet/characters.hpp"
#include "arithjet/graded.hpp"
#include "arithjet/jet.hpp"
#include "arithjet/witt.hpp"

#include <algorithm>

namespace arithjet {

namespace {

struct Check {
    std::string name;
    size_t samples = 0;
    size_t violations = 0;
    std::string witness;
};

njson check_to_json(const Check& c) {
    njson j;
    j["name"] = c.name;
    j["samples"] = c.samples;
    j["violations"] = c.violations;
    j["pass"] = (c.violations == 0);
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j;
}

WittVec<BaseElem> random_witt(const BaseRingPtr& ring, Rng& rng, int n) {
    WittVec<BaseElem> v;
    for (int i = 0; i <= n; ++i) v.x.push_back(ring->random(rng));
    return v;
}

bool witt_eq(const WittVec<BaseElem>& a, const WittVec<BaseElem>& b) {
    if (a.x.size() != b.x.size()) return false;
    for (size_t i = 0; i < a.x.size(); ++i)
        if (!(a.x[i] == b.x[i])) return false;
    return true;
}

std::string witt_show(const WittVec<BaseElem>& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.x.size(); ++i) {
        if (i) s += ", ";
        s += a.x[i].to_string();
    }
    return s + ")";
}

// ---- witt suite ---------------------------------------------------------

std::vector<Check> suite_witt(const VerifyOptions& opt) {
    std::vector<Check> checks;
    const std::vector<std::array<int, 3>> combos = {{2, 1, 2}, {3, 1, 2}, {5, 1, 1}, {2, 2, 1}};
    for (auto [p, f, n] : combos) {
        Rng rng(opt.seed + static_cast<uint64_t>(p * 100 + f * 10 + n));
        auto P = witt_polys(p, f, n, opt.cache_dir);
        auto ring = BaseRing::make(p, 1, 5);
        BaseElem proto = ring->zero();
        Check c{"ghost_hom_p" + std::to_string(p) + "_f" + std::to_string(f) + "_n" + std::to_string(n),
                opt.samples, 0, ""};
        for (size_t s = 0; s < opt.samples; ++s) {
            auto a = random_witt(ring, rng, n);
            auto b = random_witt(ring, rng, n);
            auto ga = ghost(P->p, P->q, a, proto);
            auto gb = ghost(P->p, P->q, b, proto);
            auto gs = ghost(P->p, P->q, witt_add(*P, a, b, proto), proto);
            auto gp = ghost(P->p, P->q, witt_mul(*P, a, b, proto), proto);
            bool ok = true;
            for (int i = 0; i <= n; ++i) {
                if (!(gs[static_cast<size_t>(i)] == ga[static_cast<size_t>(i)] + gb[static_cast<size_t>(i)])) ok = false;
                if (!(gp[static_cast<size_t>(i)] == ga[static_cast<size_t>(i)] * gb[static_cast<size_t>(i)])) ok = false;
            }
            if (!ok) {
                if (!c.violations) c.witness = witt_show(a) + " , " + witt_show(b);
                ++c.violations;
            }
        }
        checks.push_back(c);
    }
    {
        // operator identities over (3,1,2) and (2,2,1)
        for (auto [p, f, n] : std::vector<std::array<int, 3>>{{3, 1, 2}, {2, 2, 1}}) {
            Rng rng(opt.seed + 777 + static_cast<uint64_t>(p + f));
            auto Pn = witt_polys(p, f, n, opt.cache_dir);
            auto Pm = witt_polys(p, f, n - 1, opt.cache_dir);
            auto ring = BaseRing::make(p, 1, 4);
            BaseElem proto = ring->zero();
            Check c{"operators_p" + std::to_string(p) + "_f" + std::to_string(f), opt.samples, 0, ""};
            for (size_t s = 0; s < opt.samples; ++s) {
                bool ok = true;
                // F(V(x)) = p x on order n-1
                auto x = random_witt(ring, rng, n - 1);
                auto fv = frobenius_w(*Pn, verschiebung(x, proto), proto);
                ok = ok && witt_eq(fv, witt_scalar(*Pm, p, x, proto));
                // T is a ring homomorphism
                auto a = random_witt(ring, rng, n);
                auto b = random_witt(ring, rng, n);
                ok = ok && witt_eq(truncate(witt_add(*Pn, a, b, proto)),
                                   witt_add(*Pm, truncate(a), truncate(b), proto));
                ok = ok && witt_eq(truncate(witt_mul(*Pn, a, b, proto)),
                                   witt_mul(*Pm, truncate(a), truncate(b), proto));
                // theta is multiplicative
                BaseElem u = ring->random(rng), v = ring->random(rng);
                ok = ok && witt_eq(witt_mul(*Pn, teichmuller_w(u, n), teichmuller_w(v, n), proto),
                                   teichmuller_w(u * v, n));
                // ghost(F(x)) is the left shift of ghost(x)
                auto g = ghost(Pn->p, Pn->q, a, proto);
                auto gf = ghost(Pn->p, Pn->q, frobenius_w(*Pn, a, proto), proto);
                for (int i = 0; i < n; ++i)
                    ok = ok && gf[static_cast<size_t>(i)] == g[static_cast<size_t>(i) + 1];
                if (!ok) {
                    if (!c.violations) c.witness = witt_show(a);
                    ++c.violations;
                }
            }
            checks.push_back(c);
        }
    }
    {
        Check c{"universal_s1_values", 2, 0, ""};
        auto P2 = witt_polys(2, 1, 1, opt.cache_dir);
        auto P3 = witt_polys(3, 1, 1, opt.cache_dir);
        MPoly<BigInt> expect2(4), expect3(4);
        // x1 + y1 - x0 y0
        expect2.add_term({0, 1, 0, 0}, BigInt(1));
        expect2.add_term({0, 0, 0, 1}, BigInt(1));
        expect2.add_term({1, 0, 1, 0}, BigInt(-1));
        // x1 + y1 - x0^2 y0 - x0 y0^2
        expect3.add_term({0, 1, 0, 0}, BigInt(1));
        expect3.add_term({0, 0, 0, 1}, BigInt(1));
        expect3.add_term({2, 0, 1, 0}, BigInt(-1));
        expect3.add_term({1, 0, 2, 0}, BigInt(-1));
        if (!(P2->sum[1] == expect2)) ++c.violations;
        if (!(P3->sum[1] == expect3)) ++c.violations;
        checks.push_back(c);
    }
    {
        Check c{"cache_text_roundtrip", 1, 0, ""};
        auto P = witt_polys(3, 1, 2, opt.cache_dir);
        auto back = witt_polys_from_text(witt_polys_to_text(*P));
        if (!back || !(back->sum == P->sum) || !(back->prod == P->prod) ||
            !(back->frob == P->frob) || !(back->wdelta == P->wdelta) || !(back->neg == P->neg))
            ++c.violations;
        checks.push_back(c);
    }
    return checks;
}

// ---- delta suite ---------------------------------------------------------

std::vector<Check> suite_delta(const VerifyOptions& opt) {
    std::vector<Check> checks;
    {
        Check c{"c_pi_integrality", 6, 0, ""};
        for (auto [p, f] : std::vector<std::array<int, 2>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}, {5, 2}}) {
            try {
                c_pi_poly(p, f);
            } catch (const DivisionNotExact&) {
                ++c.violations;
            }
        }
        MPoly<BigInt> expect(2);
        expect.add_term({1, 1}, BigInt(-1));
        if (!(c_pi_poly(2, 1) == expect)) ++c.violations;
        checks.push_back(c);
    }
    for (auto [p, f] : std::vector<std::array<int, 2>>{{3, 1}, {3, 2}, {5, 1}, {5, 2}}) {
        auto ring = BaseRing::make(p, f, 4);
        Rng rng(opt.seed + static_cast<uint64_t>(10 * p + f));
        auto d = base_pderivation(ring);
        auto ops = default_ring_ops(ring->zero());
        ops.show = [](const BaseElem& e) { return e.to_string(); };
        auto rep = check_delta_axioms(d, ops, ops, [&] { return ring->random(rng); }, opt.samples);
        Check c{"base_axioms_p" + std::to_string(p) + "_f" + std::to_string(f), opt.samples, 0, ""};
        for (const auto& l : rep.laws) {
            c.violations += l.violations;
            if (!l.witness.empty() && c.witness.empty()) c.witness = l.law + ": " + l.witness;
        }
        checks.push_back(c);
    }
    {
        // corrupted delta (delta + 1) must fail additivity: the check passes
        // when the violation is detected
        auto ring = BaseRing::make(3, 1, 4);
        Rng rng(opt.seed + 5);
        auto d = base_pderivation(ring);
        auto corrupted = d;
        corrupted.delta = [d](const BaseElem& x) { return d.delta(x) + x.ring()->one(x.prec() - 1); };
        auto ops = default_ring_ops(ring->zero());
        auto rep = check_delta_axioms(corrupted, ops, ops, [&] { return ring->random(rng); },
                                      std::min<size_t>(opt.samples, 50));
        Check c{"corrupted_delta_control", std::min<size_t>(opt.samples, 50), 0, ""};
        if (rep.pass()) ++c.violations;  // failing to detect is the violation
        checks.push_back(c);
    }
    {
        // canonical delta on W_2(Z/3^4) induced by F
        auto ring = BaseRing::make(3, 1, 4);
        Rng rng(opt.seed + 6);
        auto P2 = witt_polys(3, 1, 2, opt.cache_dir);
        auto P1 = witt_polys(3, 1, 1, opt.cache_dir);
        BaseElem proto = ring->zero();
        using WV = WittVec<BaseElem>;
        PDerivation<WV> d;
        d.p = 3;
        d.q = 3;
        d.u = [](const WV& x) { return truncate(x); };
        d.delta = [P2, proto](const WV& x) { return witt_delta(*P2, x, proto); };
        d.phi = [P2, proto](const WV& x) { return frobenius_w(*P2, x, proto); };
        RingOps<WV> dom, cod;
        dom.add = [P2, proto](const WV& a, const WV& b) { return witt_add(*P2, a, b, proto); };
        dom.mul = [P2, proto](const WV& a, const WV& b) { return witt_mul(*P2, a, b, proto); };
        dom.eq = [](const WV& a, const WV& b) { return witt_eq(a, b); };
        dom.inject = [P2, proto](const BigInt& v) { return witt_int<BaseElem>(3, 3, v, 2, proto); };
        dom.show = [](const WV& a) { return witt_show(a); };
        cod = dom;
        cod.add = [P1, proto](const WV& a, const WV& b) { return witt_add(*P1, a, b, proto); };
        cod.mul = [P1, proto](const WV& a, const WV& b) { return witt_mul(*P1, a, b, proto); };
        cod.inject = [P1, proto](const BigInt& v) { return witt_int<BaseElem>(3, 3, v, 1, proto); };
        size_t count = std::min<size_t>(opt.samples, 100);
        auto rep = check_delta_axioms(d, dom, cod, [&] { return random_witt(ring, rng, 2); }, count);
        Check c{"witt_induced_delta", count, 0, ""};
        for (const auto& l : rep.laws) {
            c.violations += l.violations;
            if (!l.witness.empty() && c.witness.empty()) c.witness = l.law + ": " + l.witness;
        }
        checks.push_back(c);
    }
    return checks;
}

// ---- jet suite -----------------------------------------------------------

std::vector<Check> suite_jet(const VerifyOptions& opt) {
    std::vector<Check> checks;
    std::function<BigInt(const BigInt&)> idphi;
    {
        // A = R[x]/(x^2 - 7) at p = 3, orders 1 and 2
        AffinePresentation<BigInt> A;
        A.p = 3;
        A.f = 1;
        A.q = 3;
        A.vars = {"x"};
        MPoly<BigInt> rel(1);
        rel.add_term({2}, BigInt(1));
        rel.add_term({0}, BigInt(-7));
        A.relations = {rel};
        Check c{"jet_wellformed", 2, 0, ""};
        for (int n = 1; n <= 2; ++n) {
            auto J = jet_presentation(A, n, BigInt(1), idphi);
            if (!jet_wellformed(J, BigInt(1), idphi)) ++c.violations;
            if (static_cast<int>(J.relations.size()) != (n + 1) * 1) ++c.violations;
        }
        checks.push_back(c);
    }
    {
        // order-1 adjunction: points of J^1 A over Z/9 vs points of A over W_1(Z/9)
        Check c{"adjunction_count_p3", 81, 0, ""};
        AffinePresentation<BigInt> A;
        A.p = 3;
        A.f = 1;
        A.q = 3;
        A.vars = {"x"};
        MPoly<BigInt> rel(1);
        rel.add_term({2}, BigInt(1));
        rel.add_term({0}, BigInt(-7));
        A.relations = {rel};
        auto J = jet_presentation(A, 1, BigInt(1), idphi);
        auto ring = BaseRing::make(3, 1, 2);
        BaseElem proto = ring->zero();
        auto P1 = witt_polys(3, 1, 1, opt.cache_dir);
        auto target = witt_int<BaseElem>(3, 3, BigInt(7), 1, proto);
        std::vector<std::pair<int, int>> jet_pts, witt_pts;
        for (int a = 0; a < 9; ++a) {
            for (int b = 0; b < 9; ++b) {
                std::vector<BaseElem> vals = {ring->from_int(a), ring->from_int(b)};
                bool ok = true;
                for (const auto& r : J.relations)
                    if (!eval_int_poly(r, vals, proto).is_zero()) ok = false;
                if (ok) jet_pts.emplace_back(a, b);
                WittVec<BaseElem> X{{ring->from_int(a), ring->from_int(b)}};
                if (witt_eq(witt_mul(*P1, X, X, proto), target)) witt_pts.emplace_back(a, b);
            }
        }
        if (jet_pts != witt_pts || jet_pts.empty()) ++c.violations;
        checks.push_back(c);
    }
    {
        Check c{"kummer_backsubstitution_q5", 2, 0, ""};
        auto K1 = kummer_jet(5, 1, 3, 4, 1);
        auto K2 = kummer_jet(5, 1, 3, 4, 2);
        if (!kummer_verify(K1)) ++c.violations;
        if (!kummer_verify(K2)) ++c.violations;
        // h = 1: every prolongation of t vanishes
        auto ring = BaseRing::make(5, 1, 3);
        auto solved = kummer_solved_concrete(K1, ring, ring->one(), ring->one());
        for (const auto& comp : solved[0])
            if (!comp.is_zero()) ++c.violations;
        checks.push_back(c);
    }
    {
        // ghost compatibility w o phi = phi_w o w on random order-2 points
        Check c{"jet_ghost_shift", opt.samples, 0, ""};
        AffinePresentation<BigInt> A;
        A.p = 3;
        A.f = 1;
        A.q = 3;
        A.vars = {"x"};
        auto J2 = jet_presentation(A, 2, BigInt(1), idphi);
        auto gh = jet_ghost_polys(J2, BigInt(1), idphi)[0];
        auto J1 = jet_presentation(A, 1, BigInt(1), idphi);
        auto gh1 = jet_ghost_polys(J1, BigInt(1), idphi)[0];
        auto ring = BaseRing::make(3, 1, 3);
        BaseElem proto = ring->zero();
        Rng rng(opt.seed + 9);
        for (size_t s = 0; s < opt.samples; ++s) {
            std::vector<BaseElem> pt = {ring->random(rng), ring->random(rng), ring->random(rng)};
            // phi image point has coordinates (x^q + p x', (x')^q + p x'')
            std::vector<BaseElem> phipt;
            for (int k = 0; k < 2; ++k)
                phipt.push_back(eval_int_poly(J2.phi_images[static_cast<size_t>(k)], pt, proto));
            // ghost of the image (order 1) vs shifted ghost of the point
            bool ok = true;
            for (int i = 0; i <= 1; ++i) {
                BaseElem lhs = eval_int_poly(gh1[static_cast<size_t>(i)], phipt, proto);
                BaseElem rhs = eval_int_poly(gh[static_cast<size_t>(i) + 1], pt, proto);
                if (!(lhs == rhs)) ok = false;
            }
            if (!ok) ++c.violations;
        }
        checks.push_back(c);
    }
    return checks;
}

// ---- series suite ----------------------------------------------------------

std::vector<Check> suite_series(const VerifyOptions& opt) {
    (void)opt;  // the series checks are identity-based, not sampled
    std::vector<Check> checks;
    {
        Check c{"psi_log_oracle", 12, 0, ""};
        auto psi = psi_series(3, 6, 12);
        // independent route: log((q^p + p q')/q^p)/p via the log series of 1+u
        MPoly<Rational> u(2);
        u.add_term({-3, 1}, Rational(3));
        MPoly<Rational> acc(2), upow = MPoly<Rational>::constant(2, Rational(1));
        for (int n = 1; n <= 12; ++n) {
            upow = upow * u;
            Rational coeff = Rational(n % 2 ? 1 : -1) / Rational(n);
            acc = acc + upow.scale(coeff);
        }
        acc = acc.scale(Rational(BigInt(1), BigInt(3)));
        if (!(acc == psi.terms)) ++c.violations;
        // valuation pattern n - 1 - v_p(n)
        for (const auto& [m, coeff] : psi.terms.terms()) {
            int n = m[1];
            if (coeff.valuation(BigInt(3)) != n - 1 - BigInt(n).valuation(BigInt(3))) ++c.violations;
        }
        checks.push_back(c);
    }
    {
        Check c{"psi_multiplicative_additivity", 1, 0, ""};
        auto psi = psi_series(3, 6, 12);
        MPoly<Rational> image(4);
        image.add_term({1, 1, 0, 0}, Rational(1));  // q -> q1 q2
        auto lhs = delta_substitute_terms(psi, image, 2, 10, TruncKind::Delta);
        MPoly<Rational> filtered(2);
        for (const auto& [m, coeff] : psi.terms.terms())
            if (delta_degree(m) <= 10) filtered.add_term(m, coeff);
        auto rhs = embed_param(filtered, 1, 2, 0) + embed_param(filtered, 1, 2, 1);
        if (!(lhs == rhs)) ++c.violations;
        checks.push_back(c);
    }
    {
        Check c{"f_partial_structure", 3, 0, ""};
        auto fp = f_partial_series(3, 4);
        if (!(fp.terms == MPoly<Rational>::constant(2, Rational(1)))) ++c.violations;
        if (!fp.weight || !(fp.weight->w == std::vector<int64_t>{-1, 1})) ++c.violations;
        const BigInt three(3);
        for (const auto& [m, coeff] : fp.terms.terms())
            if (!(coeff.residue_mod(three, 1) == BigInt(1))) ++c.violations;
        checks.push_back(c);
    }
    {
        Check c{"formal_group_weierstrass_11a", 3, 0, ""};
        auto fg = formal_group_from_weierstrass(0, -1, 1, -10, -20, 3, 8);
        // F(z,0) = z
        MPoly<Rational> proj(2);
        for (const auto& [m, coeff] : fg.law.terms())
            if (m[1] == 0) proj.add_term(m, coeff);
        if (!(proj == MPoly<Rational>::variable(2, 0, Rational(1)))) ++c.violations;
        // l(F) = l(z1) + l(z2)
        KeepFn keep = keep_plain_leq(8);
        MPoly<Rational> lF(2), Fp = MPoly<Rational>::constant(2, Rational(1));
        for (int k = 1; k <= 8; ++k) {
            Fp = Fp.mul(fg.law, &keep);
            if (!fg.log[static_cast<size_t>(k)].is_zero())
                lF = lF + Fp.scale(fg.log[static_cast<size_t>(k)]);
        }
        MPoly<Rational> lsum(2);
        for (int k = 1; k <= 8; ++k) {
            lsum.add_term({static_cast<int32_t>(k), 0}, fg.log[static_cast<size_t>(k)]);
            lsum.add_term({0, static_cast<int32_t>(k)}, fg.log[static_cast<size_t>(k)]);
        }
        if (!(lF == lsum)) ++c.violations;
        // additive hook
        auto addfg = formal_group_additive(6);
        if (!(addfg.law == MPoly<Rational>::variable(2, 0, Rational(1)) +
                               MPoly<Rational>::variable(2, 1, Rational(1))))
            ++c.violations;
        checks.push_back(c);
    }
    {
        Check c{"f_sharp_11a_integrality", 1, 0, ""};
        try {
            auto e = eigenform_from_curve(0, -1, 1, -10, -20, 3, 20);
            auto fs = f_sharp_series(e, 4, 20);
            (void)fs;
        } catch (const DivisionNotExact& ex) {
            ++c.violations;
            c.witness = ex.what();
        }
        checks.push_back(c);
    }
    {
        Check c{"f_sharp_additivity_deg6", 1, 0, ""};
        auto e = eigenform_from_curve(0, -1, 1, -10, -20, 3, 20);
        auto fs = f_sharp_series(e, 4, 20);
        auto fg = formal_group_from_eigenform(e, 6);
        auto image = embed_poly(fg.law, 6);
        auto lhs = delta_substitute_terms(fs, image, 2, 6, TruncKind::Plain);
        MPoly<Rational> filtered(3);
        for (const auto& [m, coeff] : fs.terms.terms())
            if (plain_degree(m) <= 6) filtered.add_term(m, coeff);
        auto rhs = embed_param(filtered, 2, 2, 0) + embed_param(filtered, 2, 2, 1);
        if (!(lhs == rhs)) ++c.violations;
        checks.push_back(c);
    }
    return checks;
}

// ---- graded suite -----------------------------------------------------------

std::vector<Check> suite_graded(const VerifyOptions& opt) {
    std::vector<Check> checks;
    for (int64_t q : {5, 7}) {
        auto ring = BaseRing::make(q, 1, 3);
        BaseElem h = ring->from_int(2);
        KummerAlgebra alg(ring, h, h.inverse());
        Rng rng(opt.seed + static_cast<uint64_t>(q));
        Check c{"tau_roundtrip_q" + std::to_string(q), opt.samples, 0, ""};
        for (size_t s = 0; s < opt.samples; ++s) {
            auto x = alg.random(rng);
            if (!alg.eq(alg.reassemble(alg.tau_decompose(x)), x)) ++c.violations;
        }
        checks.push_back(c);

        Check c2{"eigenweight_monomials_q" + std::to_string(q), static_cast<size_t>(q - 1), 0, ""};
        for (int r = 0; r < alg.m(); ++r) {
            auto x = alg.monomial(r, ring->one());
            auto eig = alg.eigenweight(x);
            if (!eig.weight || *eig.weight != ((-r) % alg.m() + alg.m()) % alg.m()) ++c2.violations;
        }
        checks.push_back(c2);

        Check c3{"diamond_group_action_q" + std::to_string(q), opt.samples, 0, ""};
        for (size_t s = 0; s < opt.samples; ++s) {
            int64_t d1 = 1 + static_cast<int64_t>(rng.below(static_cast<uint64_t>(q - 1)));
            int64_t d2 = 1 + static_cast<int64_t>(rng.below(static_cast<uint64_t>(q - 1)));
            auto x = alg.random(rng);
            auto lhs = alg.diamond_act(d1, alg.diamond_act(d2, x));
            auto rhs = alg.diamond_act((d1 * d2) % q, x);
            if (!alg.eq(lhs, rhs)) ++c3.violations;
            // the action order divides q-1
            auto y = x;
            for (int i = 0; i < alg.m(); ++i) y = alg.diamond_act(d1, y);
            if (!alg.eq(y, x)) ++c3.violations;
        }
        checks.push_back(c3);

        Check c4{"hasse_root_q" + std::to_string(q), 3, 0, ""};
        auto t = alg.monomial(1, ring->one());
        if (!alg.hasse_root_check(t, h)) ++c4.violations;
        if (!alg.hasse_root_check(alg.mul(t, t), h * h)) ++c4.violations;
        auto t1 = alg.add(t, alg.constant(ring->one()));
        if (alg.hasse_root_check(t1, h)) ++c4.violations;
        checks.push_back(c4);
    }
    {
        // synthetic shell: q = 7, k = 3, c = 5 gives k' = c(k-2) = 5 mod 6
        Check c{"synthetic_shell_weight", 2, 0, ""};
        auto ring = BaseRing::make(7, 1, 3);
        BaseElem h = ring->from_int(3);
        KummerAlgebra alg(ring, h, h.inverse());
        int64_t k = 3, cc = 5;
        int64_t kprime = ((cc * (k - 2)) % 6 + 6) % 6;
        int r = static_cast<int>(((-kprime) % 6 + 6) % 6);
        auto x = alg.monomial(r, ring->from_int(2));
        auto eig = alg.eigenweight(x);
        if (!eig.weight || *eig.weight != kprime) ++c.violations;
        if (companion_weight(3, 7) != 5) ++c.violations;
        checks.push_back(c);
    }
    return checks;
}

}  // namespace

njson run_verify(const std::vector<std::string>& suites, const VerifyOptions& opt) {
    std::vector<std::string> wanted = suites;
    if (wanted.empty() || (wanted.size() == 1 && wanted[0] == "all"))
        wanted = {"witt", "delta", "jet", "series", "graded"};
    njson out;
    out["seed"] = opt.seed;
    out["samples"] = opt.samples;
    njson jsuites = njson::array();
    bool all_pass = true;
    for (const auto& name : wanted) {
        std::vector<Check> checks;
        if (name == "witt") checks = suite_witt(opt);
        else if (name == "delta") checks = suite_delta(opt);
        else if (name == "jet") checks = suite_jet(opt);
        else if (name == "series") checks = suite_series(opt);
        else if (name == "graded") checks = suite_graded(opt);
        else throw RangeError("unknown suite: " + name);
        njson jchecks = njson::array();
        bool suite_pass = true;
        for (const auto& c : checks) {
            jchecks.push_back(check_to_json(c));
            if (c.violations) suite_pass = false;
        }
        njson js;
        js["name"] = name;
        js["checks"] = jchecks;
        js["pass"] = suite_pass;
        jsuites.push_back(js);
        all_pass = all_pass && suite_pass;
    }
    out["suites"] = jsuites;
    out["pass"] = all_pass;
    return out;
}

bool verify_report_pass(const njson& report) { return report.at("pass").get<bool>(); }

}  // namespace arithjet
