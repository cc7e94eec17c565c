#include "arithjet/jet.hpp"

#include <numeric>

namespace arithjet {

std::string prolonged_name(const std::string& base, int k) {
    if (k == 0) return base;
    if (k <= 3) return base + std::string(static_cast<size_t>(k), '\'');
    return base + "^(" + std::to_string(k) + ")";
}

namespace {

MPoly<BigInt> remap_vars(const MPoly<BigInt>& a, const std::vector<int>& to, int new_nvars) {
    MPoly<BigInt> r(new_nvars);
    for (const auto& [m, c] : a.terms()) {
        Exps e(static_cast<size_t>(new_nvars), 0);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (to[i] < 0) throw std::logic_error("remap_vars: live variable dropped");
            e[static_cast<size_t>(to[i])] += m[i];
        }
        r.add_term(e, c);
    }
    return r;
}

// Quotient ring S_n[t]/(t^m - h) with S_n = (Z/p^N)[h^{+-1}, h', ..., h^(n)].
// Variables: 0 = t, 1 = h (Laurent), 2.. = the h-prolongations.
struct KRing {
    int64_t p;
    int N;
    int m;
    int nred;
    BigInt pN;

    MPoly<BigInt> reduce(const MPoly<BigInt>& a) const {
        MPoly<BigInt> merged(nred);
        for (const auto& [mm, c] : a.terms()) {
            Exps e = mm;
            if (e[0] < 0) throw std::logic_error("negative t exponent");
            int32_t s = e[0] / m;
            e[0] = e[0] % m;
            e[1] += s;  // t^m -> h
            merged.add_term(e, c);
        }
        // coefficients may only merge to zero after the monomial folding
        MPoly<BigInt> r(nred);
        for (const auto& [mm, c] : merged.terms()) {
            BigInt cc = c.mod(pN);
            if (!cc.is_zero()) r.add_term(mm, cc);
        }
        return r;
    }

    MPoly<BigInt> mul(const MPoly<BigInt>& a, const MPoly<BigInt>& b) const {
        return reduce(a * b);
    }

    MPoly<BigInt> pow(const MPoly<BigInt>& a, uint64_t e) const {
        MPoly<BigInt> r = MPoly<BigInt>::constant(nred, BigInt(1));
        if (e == 0) return r;
        MPoly<BigInt> base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            e >>= 1;
            if (e) base = mul(base, base);
        }
        return r;
    }

    // Inverse of the monomial c * t^a * h^b.
    MPoly<BigInt> monomial_inverse(const Exps& mono, const BigInt& c) const {
        for (size_t i = 2; i < mono.size(); ++i)
            if (mono[i] != 0) throw NotAUnit("prolongation symbol in a would-be unit");
        int32_t a = mono[0], b = mono[1];
        Exps e(static_cast<size_t>(nred), 0);
        int32_t amod = ((a % m) + m) % m;
        // t^{-a} = t^{(m - a mod m) mod m} h^{-(a div m) - [a mod m != 0]}
        int32_t adiv = (a - amod) / m;
        e[0] = amod ? m - amod : 0;
        e[1] = -b - adiv - (amod ? 1 : 0);
        MPoly<BigInt> r(nred);
        r.add_term(e, BigInt::mod_inverse(c, pN));
        return r;
    }

    MPoly<BigInt> unit_inverse(const MPoly<BigInt>& g) const {
        // mod p the element must be a single monomial (unit times power of t, h)
        const Exps* lead = nullptr;
        const BigInt* lead_c = nullptr;
        for (const auto& [mm, c] : g.terms()) {
            if ((c % BigInt(p)).is_zero()) continue;
            if (lead) throw NotAUnit("several unit-level monomials");
            lead = &mm;
            lead_c = &c;
        }
        if (!lead) throw NotAUnit("element is divisible by p");
        MPoly<BigInt> u0 = monomial_inverse(*lead, *lead_c);
        MPoly<BigInt> one = MPoly<BigInt>::constant(nred, BigInt(1));
        MPoly<BigInt> r = one - mul(g, u0);  // divisible by p
        MPoly<BigInt> inv = u0;
        MPoly<BigInt> term = u0;
        for (int i = 1; i < N; ++i) {
            term = mul(term, r);
            if (term.is_zero_poly()) break;
            inv = reduce(inv + term);
        }
        return inv;
    }
};

}  // namespace

KummerJet kummer_jet(int64_t p, int f, int N, int m, int order) {
    if (m < 1) throw RangeError("kummer_jet needs m >= 1");
    if (std::gcd(static_cast<int64_t>(m), p) != 1)
        throw NotCoprime("m = " + std::to_string(m) + " shares a factor with p");
    if (N < 1) throw RangeError("kummer_jet needs N >= 1");
    if (order < 0 || order > 3) throw BoundExceeded("kummer order beyond bound 3");

    KummerJet K;
    K.p = p;
    K.f = f;
    K.q = 1;
    for (int i = 0; i < f; ++i) K.q *= static_cast<uint64_t>(p);
    K.N = N;
    K.m = m;
    K.order = order;

    // full symbolic variables for the delta recursion
    const int nfull = 2 * (order + 1);
    const int H = order + 1;  // index of h
    for (int k = 0; k <= order; ++k) K.full_vars.push_back(prolonged_name("t", k));
    for (int k = 0; k <= order; ++k) K.full_vars.push_back(prolonged_name("h", k));
    std::vector<int> succ(static_cast<size_t>(nfull), -1);
    for (int k = 0; k < order; ++k) {
        succ[static_cast<size_t>(k)] = k + 1;
        succ[static_cast<size_t>(H + k)] = H + k + 1;
    }
    auto images = phi_var_images(nfull, succ, p, K.q, BigInt(1));
    std::function<BigInt(const BigInt&)> id;  // integer coefficients are phi-fixed

    MPoly<BigInt> E = MPoly<BigInt>::variable(nfull, 0, BigInt(1), m) -
                      MPoly<BigInt>::variable(nfull, H, BigInt(1));
    std::vector<MPoly<BigInt>> E_list;  // E_list[k] = delta^{k+1}(t^m - h)
    for (int k = 1; k <= order; ++k) {
        E = poly_delta(E, images, id, p, K.q);
        E_list.push_back(E);
    }
    K.deltas = E_list;

    const int nred = order + 2;  // t, h, h', ..., h^(order)
    K.vars.push_back("t");
    for (int k = 0; k <= order; ++k) K.vars.push_back(prolonged_name("h", k));
    KRing ring{p, N, m, nred, BigInt(p).pow(static_cast<uint64_t>(N))};

    K.relation = MPoly<BigInt>::variable(nred, 0, BigInt(1), m) -
                 MPoly<BigInt>::variable(nred, 1, BigInt(1));

    // reduced -> full embedding (for substituting solved values back)
    std::vector<int> red_to_full(static_cast<size_t>(nred));
    red_to_full[0] = 0;
    for (int k = 0; k <= order; ++k) red_to_full[static_cast<size_t>(1 + k)] = H + k;

    for (int k = 1; k <= order; ++k) {
        // substitute earlier solved prolongations into delta^k(t^m - h)
        std::vector<MPoly<BigInt>> sub;
        for (int i = 0; i < nfull; ++i)
            sub.push_back(MPoly<BigInt>::variable(nfull, i, BigInt(1)));
        for (int j = 1; j < k; ++j)
            sub[static_cast<size_t>(j)] = remap_vars(K.solved[static_cast<size_t>(j - 1)], red_to_full, nfull);
        MPoly<BigInt> G_full = E_list[static_cast<size_t>(k - 1)].substitute(sub);

        // remap to reduced vars + one unknown slot z for t^(k)
        std::vector<int> to(static_cast<size_t>(nfull), -1);
        to[0] = 0;
        to[static_cast<size_t>(k)] = nred;  // the unknown
        for (int j = 0; j <= order; ++j) to[static_cast<size_t>(H + j)] = 1 + j;
        MPoly<BigInt> G = remap_vars(G_full, to, nred + 1);

        // split by powers of the unknown
        std::vector<MPoly<BigInt>> coef;
        for (const auto& [mm, c] : G.terms()) {
            int32_t dz = mm[static_cast<size_t>(nred)];
            Exps e(mm.begin(), mm.begin() + nred);
            // t powers can exceed m here; reduced below
            if (static_cast<size_t>(dz) >= coef.size()) coef.resize(static_cast<size_t>(dz) + 1, MPoly<BigInt>(nred));
            coef[static_cast<size_t>(dz)].add_term(e, c);
        }
        for (auto& cpoly : coef) cpoly = ring.reduce(cpoly);
        if (coef.size() < 2 || coef[1].is_zero_poly())
            throw NotAUnit("linearization has no linear part");

        auto eval_G = [&](const MPoly<BigInt>& z) {
            MPoly<BigInt> acc = coef[0];
            MPoly<BigInt> zp = MPoly<BigInt>::constant(nred, BigInt(1));
            for (size_t j = 1; j < coef.size(); ++j) {
                zp = ring.mul(zp, z);
                acc = ring.reduce(acc + ring.mul(coef[j], zp));
            }
            return acc;
        };
        auto eval_Gprime = [&](const MPoly<BigInt>& z) {
            MPoly<BigInt> acc = coef.size() > 1 ? coef[1] : MPoly<BigInt>(nred);
            MPoly<BigInt> zp = MPoly<BigInt>::constant(nred, BigInt(1));
            for (size_t j = 2; j < coef.size(); ++j) {
                zp = ring.mul(zp, z);
                acc = ring.reduce(acc + ring.mul(coef[j], zp).scale(BigInt(static_cast<int64_t>(j))));
            }
            return acc;
        };

        // Hensel: the linear coefficient is a unit, higher ones carry p
        MPoly<BigInt> z = ring.reduce(-ring.mul(coef[0], ring.unit_inverse(coef[1])));
        int steps = 1;
        while ((1 << steps) < N + 1) ++steps;
        for (int it = 0; it <= steps; ++it) {
            MPoly<BigInt> val = eval_G(z);
            if (val.is_zero_poly()) break;
            z = ring.reduce(z - ring.mul(val, ring.unit_inverse(eval_Gprime(z))));
        }
        if (!eval_G(z).is_zero_poly())
            throw DivisionNotExact("kummer Hensel iteration failed to converge");
        K.solved.push_back(z);
    }
    return K;
}

bool kummer_verify(const KummerJet& K) {
    const int nfull = 2 * (K.order + 1);
    const int H = K.order + 1;
    const int nred = K.order + 2;
    KRing ring{K.p, K.N, K.m, nred, BigInt(K.p).pow(static_cast<uint64_t>(K.N))};
    std::vector<int> red_to_full(static_cast<size_t>(nred));
    red_to_full[0] = 0;
    for (int k = 0; k <= K.order; ++k) red_to_full[static_cast<size_t>(1 + k)] = H + k;

    std::vector<MPoly<BigInt>> sub;
    for (int i = 0; i < nfull; ++i) sub.push_back(MPoly<BigInt>::variable(nfull, i, BigInt(1)));
    for (int j = 1; j <= K.order; ++j)
        sub[static_cast<size_t>(j)] = remap_vars(K.solved[static_cast<size_t>(j - 1)], red_to_full, nfull);

    std::vector<int> to(static_cast<size_t>(nfull), -1);
    to[0] = 0;
    for (int j = 0; j <= K.order; ++j) to[static_cast<size_t>(H + j)] = 1 + j;

    for (const auto& E : K.deltas) {
        MPoly<BigInt> val = ring.reduce(remap_vars(E.substitute(sub), to, nred));
        if (!val.is_zero_poly()) return false;
    }
    return true;
}

std::vector<std::vector<BaseElem>> kummer_solved_concrete(const KummerJet& K,
                                                          const BaseRingPtr& ring,
                                                          const BaseElem& h,
                                                          const BaseElem& hinv) {
    if (!(h * hinv == ring->one()))
        throw NotAUnit("h * hinv != 1: invalid unit certificate");
    if (K.order >= ring->prec())
        throw PrecisionExhausted("need precision > jet order for delta-prolongations of h");
    std::vector<BaseElem> hdeltas;  // delta^k(h)
    hdeltas.push_back(h);
    for (int k = 1; k <= K.order; ++k) hdeltas.push_back(hdeltas.back().delta());

    std::vector<std::vector<BaseElem>> out;
    for (const auto& poly : K.solved) {
        std::vector<BaseElem> comps(static_cast<size_t>(K.m), ring->zero());
        for (const auto& [mm, c] : poly.terms()) {
            BaseElem v = ring->from_bigint(c);
            int32_t he = mm[1];
            if (he > 0) v = v * h.pow(static_cast<uint64_t>(he));
            if (he < 0) v = v * hinv.pow(static_cast<uint64_t>(-he));
            for (int k = 1; k <= K.order; ++k) {
                int32_t e = mm[static_cast<size_t>(1 + k)];
                if (e > 0) v = v * hdeltas[static_cast<size_t>(k)].pow(static_cast<uint64_t>(e));
            }
            size_t slot = static_cast<size_t>(mm[0]);
            comps[slot] = comps[slot] + v;
        }
        out.push_back(std::move(comps));
    }
    return out;
}

}  // namespace arithjet
