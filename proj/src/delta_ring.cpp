#include "arithjet/delta_ring.hpp"

namespace arithjet {

MPoly<BigInt> c_pi_poly(int64_t p, int f) {
    uint64_t q = 1;
    for (int i = 0; i < f; ++i) q *= static_cast<uint64_t>(p);
    MPoly<BigInt> x = MPoly<BigInt>::variable(2, 0, BigInt(1));
    MPoly<BigInt> y = MPoly<BigInt>::variable(2, 1, BigInt(1));
    MPoly<BigInt> num = x.pow(q) + y.pow(q) - (x + y).pow(q);
    return poly_exact_div_p(num, p, 1);
}

PDerivation<BaseElem> base_pderivation(const BaseRingPtr& ring) {
    PDerivation<BaseElem> d;
    d.p = ring->p();
    d.q = ring->q();
    d.u = [](const BaseElem& x) { return x; };
    d.delta = [](const BaseElem& x) { return x.delta(); };
    // the q-power Frobenius lift on W(F_q) is the identity; the arithmetic
    // Frobenius sigma is a different operator and not a q-power lift for f > 1
    d.phi = [](const BaseElem& x) { return x; };
    return d;
}

PDerivation<BaseElem> pderivation_from_frobenius(const BaseRingPtr& ring,
                                                 std::function<BaseElem(const BaseElem&)> phi,
                                                 Rng& rng, size_t probes) {
    for (size_t i = 0; i < probes; ++i) {
        BaseElem x = ring->random(rng);
        BaseElem diff = phi(x) - x.pow(ring->q());
        bool ok = true;
        for (const auto& c : diff.coeffs())
            if (!(c % BigInt(ring->p())).is_zero()) ok = false;
        if (!ok)
            throw NotAFrobeniusLift("phi(x) != x^q mod p at x = " + x.to_string());
    }
    PDerivation<BaseElem> d;
    d.p = ring->p();
    d.q = ring->q();
    d.u = [](const BaseElem& x) { return x; };
    d.phi = phi;
    d.delta = [phi, q = ring->q()](const BaseElem& x) {
        return (phi(x) - x.pow(q)).exact_div_p(1);
    };
    return d;
}

}  // namespace arithjet
