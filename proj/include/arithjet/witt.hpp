#pragma once

#include "arithjet/bigint.hpp"
#include "arithjet/errors.hpp"
#include "arithjet/poly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace arithjet {

// Universal polynomials for pi-typical Witt vectors of order n with ghost
// components w_i = x_0^{q^i} + p x_1^{q^{i-1}} + ... + p^i x_i (pi = p,
// q = p^f). All lists are integer polynomials; integrality of the recursive
// solve is asserted during generation and never falls back to rationals.
struct WittPolys {
    int64_t p = 0;
    int f = 0;
    int n = 0;
    uint64_t q = 0;
    std::vector<MPoly<BigInt>> sum;     // S_0..S_n   in x_0..x_n, y_0..y_n
    std::vector<MPoly<BigInt>> prod;    // P_0..P_n   same variables
    std::vector<MPoly<BigInt>> neg;     // additive inverse, in x_0..x_n
    std::vector<MPoly<BigInt>> frob;    // F_0..F_{n-1} in x_0..x_n
    std::vector<MPoly<BigInt>> wdelta;  // canonical delta W_n -> W_{n-1}, in x_0..x_n
};

using WittPolysPtr = std::shared_ptr<const WittPolys>;

// Ghost polynomial w_i over nvars variables starting at var_offset.
MPoly<BigInt> ghost_poly(int nvars, int var_offset, int i, int64_t p, uint64_t q);

// Generate (no cache involved).
WittPolysPtr generate_witt_polys(int64_t p, int f, int n);

// Fetch with in-memory and on-disk caching. cache_dir empty selects
// ARITHJET_CACHE_DIR, then XDG_CACHE_HOME/arithjet, then ~/.cache/arithjet.
// A corrupt or version-mismatched cache file triggers regeneration.
WittPolysPtr witt_polys(int64_t p, int f, int n, const std::string& cache_dir = "",
                        int max_n = 3);

std::string default_cache_dir();
std::string witt_cache_path(const std::string& dir, int64_t p, int f, int n);
// Serialized canonical text form (exponent vector + decimal coefficient per line).
std::string witt_polys_to_text(const WittPolys& polys);
// Returns nullptr if the text is corrupt or from another format version.
WittPolysPtr witt_polys_from_text(const std::string& text);

// A Witt vector is its coordinate vector; the order is coords.size() - 1.
template <class C>
struct WittVec {
    std::vector<C> x;
    int order() const { return static_cast<int>(x.size()) - 1; }
};

// Componentwise ghost map, evaluated straight from eq-style data (p, q).
template <class C>
std::vector<C> ghost(int64_t p, uint64_t q, const WittVec<C>& v, const C& proto) {
    std::vector<C> w;
    BigInt pb(p);
    for (size_t i = 0; i < v.x.size(); ++i) {
        C acc = inject_bigint(proto, BigInt(0));
        BigInt pj(1);
        for (size_t j = 0; j <= i; ++j) {
            uint64_t e = 1;
            for (size_t k = 0; k < i - j; ++k) e *= q;
            C term = inject_bigint(proto, pj);
            C b = v.x[j];
            while (e) {
                if (e & 1) term = term * b;
                e >>= 1;
                if (e) b = b * b;
            }
            acc = acc + term;
            pj = pj * pb;
        }
        w.push_back(acc);
    }
    return w;
}

namespace detail {
inline void require_order(int have, int want, const char* op) {
    if (have != want)
        throw RangeError(std::string(op) + ": operand order " + std::to_string(have) +
                         " does not match the polynomial order " + std::to_string(want));
}
}  // namespace detail

template <class C>
WittVec<C> witt_add(const WittPolys& P, const WittVec<C>& a, const WittVec<C>& b, const C& proto) {
    detail::require_order(a.order(), P.n, "witt_add");
    detail::require_order(b.order(), P.n, "witt_add");
    std::vector<C> vals = a.x;
    vals.insert(vals.end(), b.x.begin(), b.x.end());
    WittVec<C> r;
    for (int i = 0; i <= P.n; ++i) r.x.push_back(eval_int_poly(P.sum[static_cast<size_t>(i)], vals, proto));
    return r;
}

template <class C>
WittVec<C> witt_mul(const WittPolys& P, const WittVec<C>& a, const WittVec<C>& b, const C& proto) {
    detail::require_order(a.order(), P.n, "witt_mul");
    detail::require_order(b.order(), P.n, "witt_mul");
    std::vector<C> vals = a.x;
    vals.insert(vals.end(), b.x.begin(), b.x.end());
    WittVec<C> r;
    for (int i = 0; i <= P.n; ++i) r.x.push_back(eval_int_poly(P.prod[static_cast<size_t>(i)], vals, proto));
    return r;
}

template <class C>
WittVec<C> witt_neg(const WittPolys& P, const WittVec<C>& a, const C& proto) {
    detail::require_order(a.order(), P.n, "witt_neg");
    WittVec<C> r;
    for (int i = 0; i <= P.n; ++i) r.x.push_back(eval_int_poly(P.neg[static_cast<size_t>(i)], a.x, proto));
    return r;
}

// T(x_0,...,x_n) = (x_0,...,x_{n-1})
template <class C>
WittVec<C> truncate(const WittVec<C>& a) {
    if (a.order() < 1) throw RangeError("truncate needs order >= 1");
    WittVec<C> r{a.x};
    r.x.pop_back();
    return r;
}

// Witt Frobenius F: W_n -> W_{n-1}; ghost(F(x)) is the left shift of ghost(x).
template <class C>
WittVec<C> frobenius_w(const WittPolys& P, const WittVec<C>& a, const C& proto) {
    if (a.order() < 1) throw RangeError("frobenius_w needs order >= 1");
    detail::require_order(a.order(), P.n, "frobenius_w");
    WittVec<C> r;
    for (int i = 0; i < P.n; ++i) r.x.push_back(eval_int_poly(P.frob[static_cast<size_t>(i)], a.x, proto));
    return r;
}

// Canonical delta on Witt coordinates, (F - (.)^q)/p on the ghost side.
template <class C>
WittVec<C> witt_delta(const WittPolys& P, const WittVec<C>& a, const C& proto) {
    if (a.order() < 1) throw RangeError("witt_delta needs order >= 1");
    detail::require_order(a.order(), P.n, "witt_delta");
    WittVec<C> r;
    for (int i = 0; i < P.n; ++i) r.x.push_back(eval_int_poly(P.wdelta[static_cast<size_t>(i)], a.x, proto));
    return r;
}

// V(x_0,...,x_{n-1}) = (0, x_0, ..., x_{n-1})
template <class C>
WittVec<C> verschiebung(const WittVec<C>& a, const C& proto) {
    WittVec<C> r;
    r.x.push_back(inject_bigint(proto, BigInt(0)));
    r.x.insert(r.x.end(), a.x.begin(), a.x.end());
    return r;
}

// Teichmuller lift theta(c) = (c, 0, ..., 0)
template <class C>
WittVec<C> teichmuller_w(const C& c, int n) {
    WittVec<C> r;
    r.x.push_back(c);
    for (int i = 0; i < n; ++i) r.x.push_back(inject_bigint(c, BigInt(0)));
    return r;
}

// Coordinates of the image of an integer under Z -> W_n(B): solved over Z from
// the constant ghost vector (c, c, ..., c), then injected into B.
template <class C>
WittVec<C> witt_int(int64_t p, uint64_t q, const BigInt& c, int n, const C& proto) {
    std::vector<BigInt> d;
    BigInt pb(p);
    for (int i = 0; i <= n; ++i) {
        BigInt acc = c;  // ghost target w_i = c
        BigInt pj(1);
        for (int j = 0; j < i; ++j) {
            uint64_t e = 1;
            for (int k = 0; k < i - j; ++k) e *= q;
            acc = acc - pj * d[static_cast<size_t>(j)].pow(e);
            pj = pj * pb;
        }
        d.push_back(acc.exact_div_pow(pb, i));
    }
    WittVec<C> r;
    for (auto& v : d) r.x.push_back(inject_bigint(proto, v));
    return r;
}

// Ghost inversion over p-torsion-free coefficient rings (the fast path); C
// must support coeff_exact_div_p exactly (BigInt, integer polynomials, ...).
template <class C>
WittVec<C> from_ghost(int64_t p, uint64_t q, const std::vector<C>& w, const C& proto) {
    WittVec<C> r;
    for (size_t i = 0; i < w.size(); ++i) {
        C acc = w[i];
        BigInt pj(1);
        for (size_t j = 0; j < i; ++j) {
            uint64_t e = 1;
            for (size_t k = 0; k < i - j; ++k) e *= q;
            C term = inject_bigint(proto, pj);
            C b = r.x[j];
            while (e) {
                if (e & 1) term = term * b;
                e >>= 1;
                if (e) b = b * b;
            }
            acc = acc - term;
            pj = pj * BigInt(p);
        }
        r.x.push_back(coeff_exact_div_p(acc, p, static_cast<int>(i)));
    }
    return r;
}

template <class C>
MPoly<C> coeff_exact_div_p(const MPoly<C>& a, int64_t p, int k) {
    return poly_exact_div_p(a, p, k);
}

// n-fold witt_add of a with itself scaled by a small nonnegative integer.
template <class C>
WittVec<C> witt_scalar(const WittPolys& P, int64_t k, const WittVec<C>& a, const C& proto) {
    WittVec<C> r = witt_int(P.p, P.q, BigInt(0), P.n, proto);
    for (int64_t i = 0; i < k; ++i) r = witt_add(P, r, a, proto);
    return r;
}

}  // namespace arithjet
