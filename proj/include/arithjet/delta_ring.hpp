#pragma once

#include "arithjet/base_ring.hpp"
#include "arithjet/bigint.hpp"
#include "arithjet/errors.hpp"
#include "arithjet/poly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace arithjet {

// C_pi(X,Y) = (X^q + Y^q - (X+Y)^q)/p as an exact integer polynomial in two
// variables. DivisionNotExact here means a broken binomial identity, i.e. a bug.
MPoly<BigInt> c_pi_poly(int64_t p, int f);

// ---- symbolic phi and delta on polynomial rings -----------------------------
//
// Variables carry a successor table: succ[i] is the index of the variable
// delta(v_i) (so phi(v_i) = v_i^q + p succ(v_i)), or -1 when delta(v_i) = 0
// (a constant-like symbol fixed by phi, e.g. s with phi(s) = s^q).

template <class C>
std::vector<MPoly<C>> phi_var_images(int nvars, const std::vector<int>& succ, int64_t p,
                                     uint64_t q, const C& one) {
    std::vector<MPoly<C>> images;
    images.reserve(static_cast<size_t>(nvars));
    for (int i = 0; i < nvars; ++i) {
        MPoly<C> img = MPoly<C>::variable(nvars, i, one, static_cast<int32_t>(q));
        if (succ[static_cast<size_t>(i)] >= 0) {
            img = img + MPoly<C>::variable(nvars, succ[static_cast<size_t>(i)],
                                           inject_bigint(one, BigInt(p)));
        }
        images.push_back(std::move(img));
    }
    return images;
}

// phi(P): coefficients through coeff_phi, variables through their images.
template <class C>
MPoly<C> poly_phi(const MPoly<C>& a, const std::vector<MPoly<C>>& images,
                  const std::function<C(const C&)>& coeff_phi, const KeepFn* keep = nullptr) {
    MPoly<C> mapped = coeff_phi ? a.template map_coeffs<C>(coeff_phi) : a;
    return mapped.substitute(images, keep);
}

// delta(P) = (phi(P) - P^q)/p. Over exact coefficient rings this is the unique
// extension of the delta-laws to polynomials with delta(v_i) = v_{succ(i)}.
// A keep predicate is sound here whenever kept degrees add under products.
template <class C>
MPoly<C> poly_delta(const MPoly<C>& a, const std::vector<MPoly<C>>& images,
                    const std::function<C(const C&)>& coeff_phi, int64_t p, uint64_t q,
                    const KeepFn* keep = nullptr) {
    if (a.is_zero_poly()) return a;
    return poly_exact_div_p(poly_phi(a, images, coeff_phi, keep) - a.pow(q, keep), p, 1);
}

// ---- pi-derivations as data -------------------------------------------------

template <class Elem>
struct PDerivation {
    int64_t p = 0;
    uint64_t q = 0;
    std::function<Elem(const Elem&)> u;      // structure map domain -> codomain
    std::function<Elem(const Elem&)> delta;  // the set map
    std::function<Elem(const Elem&)> phi;    // derived Frobenius lift u(x)^q + p delta(x)
};

// Ring operations the axiom checker needs on the codomain.
template <class Elem>
struct RingOps {
    std::function<Elem(const Elem&, const Elem&)> add;
    std::function<Elem(const Elem&, const Elem&)> mul;
    std::function<bool(const Elem&, const Elem&)> eq;
    std::function<Elem(const BigInt&)> inject;
    std::function<std::string(const Elem&)> show;
};

template <class Elem>
RingOps<Elem> default_ring_ops(const Elem& proto) {
    RingOps<Elem> ops;
    ops.add = [](const Elem& a, const Elem& b) { return a + b; };
    ops.mul = [](const Elem& a, const Elem& b) { return a * b; };
    ops.eq = [](const Elem& a, const Elem& b) { return a == b; };
    ops.inject = [proto](const BigInt& v) { return inject_bigint(proto, v); };
    ops.show = [](const Elem&) { return std::string("<elem>"); };
    return ops;
}

// The canonical derivation on the base ring: u = id, delta = (phi - (.)^q)/p.
PDerivation<BaseElem> base_pderivation(const BaseRingPtr& ring);

// Wrap a user Frobenius lift; probes phi(x) == x^q mod p on sample elements
// and throws NotAFrobeniusLift with the witness when the congruence fails.
PDerivation<BaseElem> pderivation_from_frobenius(const BaseRingPtr& ring,
                                                 std::function<BaseElem(const BaseElem&)> phi,
                                                 Rng& rng, size_t probes = 32);

struct DeltaLawReport {
    std::string law;
    size_t samples = 0;
    size_t violations = 0;
    std::string witness;  // first violating pair, if any
};

struct DeltaAxiomReport {
    std::vector<DeltaLawReport> laws;
    bool pass() const {
        for (const auto& l : laws)
            if (l.violations) return false;
        return true;
    }
};

// Checks the two delta-laws and the phi reconstruction on sampled pairs.
// dom supplies ring operations of the domain (where the samples live); cod
// those of the codomain (where delta and phi land). They coincide for a
// derivation on a single ring, but differ for e.g. W_n -> W_{n-1}.
template <class Elem, class Sampler>
DeltaAxiomReport check_delta_axioms(const PDerivation<Elem>& d, const RingOps<Elem>& dom,
                                    const RingOps<Elem>& cod, Sampler&& sample, size_t count) {
    int f = 0;
    for (uint64_t t = 1; t < d.q; t *= static_cast<uint64_t>(d.p)) ++f;
    MPoly<BigInt> cpi = c_pi_poly(d.p, f == 0 ? 1 : f);
    auto powq = [&](Elem v) {
        Elem r = cod.inject(BigInt(1));
        uint64_t e = d.q;
        while (e) {
            if (e & 1) r = cod.mul(r, v);
            e >>= 1;
            if (e) v = cod.mul(v, v);
        }
        return r;
    };
    auto eval_cpi = [&](const Elem& a, const Elem& b) {
        Elem total = cod.inject(BigInt(0));
        for (const auto& [m, c] : cpi.terms()) {
            Elem acc = cod.inject(c);
            for (int32_t k = 0; k < m[0]; ++k) acc = cod.mul(acc, a);
            for (int32_t k = 0; k < m[1]; ++k) acc = cod.mul(acc, b);
            total = cod.add(total, acc);
        }
        return total;
    };
    DeltaLawReport sum_law{"sum", count, 0, ""};
    DeltaLawReport prod_law{"product", count, 0, ""};
    DeltaLawReport phi_law{"frobenius-reconstruction", count, 0, ""};
    Elem pc = cod.inject(BigInt(d.p));
    for (size_t i = 0; i < count; ++i) {
        Elem x = sample();
        Elem y = sample();
        Elem ux = d.u(x), uy = d.u(y);
        Elem dx = d.delta(x), dy = d.delta(y);
        {
            Elem lhs = d.delta(dom.add(x, y));
            Elem rhs = cod.add(cod.add(dx, dy), eval_cpi(ux, uy));
            if (!cod.eq(lhs, rhs)) {
                if (!sum_law.violations) sum_law.witness = dom.show(x) + ", " + dom.show(y);
                ++sum_law.violations;
            }
        }
        {
            Elem lhs = d.delta(dom.mul(x, y));
            Elem rhs = cod.add(cod.add(cod.mul(powq(ux), dy), cod.mul(dx, powq(uy))),
                               cod.mul(pc, cod.mul(dx, dy)));
            if (!cod.eq(lhs, rhs)) {
                if (!prod_law.violations) prod_law.witness = dom.show(x) + ", " + dom.show(y);
                ++prod_law.violations;
            }
        }
        {
            Elem lhs = d.phi(x);
            Elem rhs = cod.add(powq(ux), cod.mul(pc, dx));
            if (!cod.eq(lhs, rhs)) {
                if (!phi_law.violations) phi_law.witness = dom.show(x);
                ++phi_law.violations;
            }
        }
    }
    return DeltaAxiomReport{{sum_law, prod_law, phi_law}};
}

// Exhaustive variant for finite rings: every ordered pair from elems.
template <class Elem>
DeltaAxiomReport check_delta_axioms_exhaustive(const PDerivation<Elem>& d, const RingOps<Elem>& dom,
                                               const RingOps<Elem>& cod,
                                               const std::vector<Elem>& elems) {
    const size_t n = elems.size();
    size_t idx = 0;  // the checker draws x then y per pair
    auto sampler = [&]() -> Elem {
        size_t k = idx++;
        size_t pair = k / 2;
        return (k % 2 == 0) ? elems[pair / n] : elems[pair % n];
    };
    return check_delta_axioms(d, dom, cod, sampler, n * n);
}

template <class Elem>
void require_delta_axioms(const DeltaAxiomReport& report) {
    for (const auto& l : report.laws)
        if (l.violations)
            throw AxiomViolation(l.law + " law failed on " + l.witness);
}

// ---- prolongation sequences -------------------------------------------------

// Levels are presented through generator lists; u and delta take the level
// index of their domain. eq compares inside the codomain level.
template <class Elem>
struct ProlongationSeq {
    std::vector<std::vector<Elem>> gens;
    std::function<Elem(int, const Elem&)> u;
    std::function<Elem(int, const Elem&)> delta;
    std::function<bool(int, const Elem&, const Elem&)> eq;

    size_t length() const { return gens.size(); }
};

// (T^{*+n})^j = T^{n+j}
template <class Elem>
ProlongationSeq<Elem> prolongation_shift(const ProlongationSeq<Elem>& t, int n) {
    if (n < 0 || static_cast<size_t>(n) > t.length())
        throw RangeError("prolongation shift beyond sequence length");
    ProlongationSeq<Elem> out;
    out.gens.assign(t.gens.begin() + n, t.gens.end());
    out.u = [n, base = t.u](int i, const Elem& e) { return base(i + n, e); };
    out.delta = [n, base = t.delta](int i, const Elem& e) { return base(i + n, e); };
    out.eq = [n, base = t.eq](int i, const Elem& a, const Elem& b) { return base(i + n, a, b); };
    return out;
}

// u o delta = delta o u on every generator where both composites land
// (both composites map level i into level i+2).
template <class Elem>
bool check_prolongation_commutation(const ProlongationSeq<Elem>& t) {
    for (size_t i = 0; i + 2 < t.length(); ++i) {
        for (const auto& g : t.gens[i]) {
            Elem lhs = t.u(static_cast<int>(i) + 1, t.delta(static_cast<int>(i), g));
            Elem rhs = t.delta(static_cast<int>(i) + 1, t.u(static_cast<int>(i), g));
            if (!t.eq(static_cast<int>(i) + 2, lhs, rhs)) return false;
        }
    }
    return true;
}

}  // namespace arithjet
