#pragma once

#include "arithjet/base_ring.hpp"
#include "arithjet/delta_ring.hpp"
#include "arithjet/poly.hpp"

#include <string>
#include <vector>

namespace arithjet {

// x -> x', x'', then x^(k) beyond three primes.
std::string prolonged_name(const std::string& base, int k);

// Generators-and-relations data for an affine presentation over the base.
// Relation coefficients are exact integers (Z sits inside R and delta is exact
// on it), or any coefficient ring C with phi/delta adapters.
template <class C>
struct AffinePresentation {
    int64_t p = 0;
    int f = 1;
    uint64_t q = 0;
    std::vector<std::string> vars;
    std::vector<MPoly<C>> relations;
};

// O(J^n X) for an affine presentation: the original variables plus one
// prolongation block per order, relations delta^k(f), and the two structure
// maps (as substitution tables on the order-(n-1) variables):
//   u:   inclusion forgetting the top prolongations
//   phi: x^(k) -> (x^(k))^q + p x^(k+1)
template <class C>
struct JetPresentation {
    int64_t p = 0;
    int f = 1;
    uint64_t q = 0;
    int order = 0;
    int base_vars = 0;
    int base_relations = 0;
    std::vector<std::string> vars;       // size base_vars * (order+1)
    std::vector<MPoly<C>> relations;     // grouped by level, base_relations per level
    std::vector<MPoly<C>> u_images;      // images of the order-(n-1) variables
    std::vector<MPoly<C>> phi_images;    // likewise

    int nvars() const { return base_vars * (order + 1); }
};

// Successor table for the prolongation variables: level k block maps into the
// level k+1 block, top level has no successor.
inline std::vector<int> jet_successors(int base_vars, int order) {
    std::vector<int> succ(static_cast<size_t>(base_vars * (order + 1)), -1);
    for (int k = 0; k < order; ++k)
        for (int j = 0; j < base_vars; ++j)
            succ[static_cast<size_t>(k * base_vars + j)] = (k + 1) * base_vars + j;
    return succ;
}

template <class C>
MPoly<C> embed_poly(const MPoly<C>& a, int new_nvars, int offset = 0) {
    MPoly<C> r(new_nvars);
    for (const auto& [m, c] : a.terms()) {
        Exps e(static_cast<size_t>(new_nvars), 0);
        for (size_t i = 0; i < m.size(); ++i) e[static_cast<size_t>(offset) + i] = m[i];
        r.add_term(e, c);
    }
    return r;
}

template <class C>
JetPresentation<C> jet_presentation(const AffinePresentation<C>& A, int n, const C& one,
                                    const std::function<C(const C&)>& coeff_phi,
                                    int max_order = 2) {
    if (n < 0 || n > max_order)
        throw BoundExceeded("jet order " + std::to_string(n) + " > bound " + std::to_string(max_order));
    const int m = static_cast<int>(A.vars.size());
    JetPresentation<C> J;
    J.p = A.p;
    J.f = A.f;
    J.q = A.q;
    J.order = n;
    J.base_vars = m;
    J.base_relations = static_cast<int>(A.relations.size());
    for (int k = 0; k <= n; ++k)
        for (const auto& v : A.vars) J.vars.push_back(prolonged_name(v, k));

    const int nv = J.nvars();
    auto succ = jet_successors(m, n);
    auto images = phi_var_images(nv, succ, A.p, A.q, one);

    std::vector<MPoly<C>> level;
    for (const auto& rel : A.relations) level.push_back(embed_poly(rel, nv));
    for (const auto& r : level) J.relations.push_back(r);
    for (int k = 1; k <= n; ++k) {
        std::vector<MPoly<C>> next;
        for (const auto& rel : level) next.push_back(poly_delta(rel, images, coeff_phi, A.p, A.q));
        for (const auto& r : next) J.relations.push_back(r);
        level = std::move(next);
    }

    // structure maps on the order-(n-1) variable block
    if (n >= 1) {
        for (int k = 0; k < n; ++k) {
            for (int j = 0; j < m; ++j) {
                int idx = k * m + j;
                J.u_images.push_back(MPoly<C>::variable(nv, idx, one));
                J.phi_images.push_back(images[static_cast<size_t>(idx)]);
            }
        }
    }
    return J;
}

// phi-power polynomials (x_j, phi(x_j), ..., phi^n(x_j)) realizing the ghost
// map of the jet space; entry [j][i] is phi^i applied to the j-th coordinate.
template <class C>
std::vector<std::vector<MPoly<C>>> jet_ghost_polys(const JetPresentation<C>& J, const C& one,
                                                   const std::function<C(const C&)>& coeff_phi) {
    auto succ = jet_successors(J.base_vars, J.order);
    auto images = phi_var_images(J.nvars(), succ, J.p, J.q, one);
    std::vector<std::vector<MPoly<C>>> out;
    for (int j = 0; j < J.base_vars; ++j) {
        std::vector<MPoly<C>> powers;
        powers.push_back(MPoly<C>::variable(J.nvars(), j, one));
        for (int i = 1; i <= J.order; ++i)
            powers.push_back(poly_phi(powers.back(), images, coeff_phi));
        out.push_back(std::move(powers));
    }
    return out;
}

// phi maps the relation ideal into itself: phi(delta^k f) = (delta^k f)^q
// + p delta^{k+1} f for every k < n, as an exact polynomial identity.
template <class C>
bool jet_wellformed(const JetPresentation<C>& J, const C& one,
                    const std::function<C(const C&)>& coeff_phi) {
    auto succ = jet_successors(J.base_vars, J.order);
    auto images = phi_var_images(J.nvars(), succ, J.p, J.q, one);
    const C pc = inject_bigint(one, BigInt(J.p));
    for (int k = 0; k < J.order; ++k) {
        for (int r = 0; r < J.base_relations; ++r) {
            const auto& g = J.relations[static_cast<size_t>(k * J.base_relations + r)];
            const auto& gnext = J.relations[static_cast<size_t>((k + 1) * J.base_relations + r)];
            MPoly<C> lhs = poly_phi(g, images, coeff_phi);
            MPoly<C> rhs = (g.is_zero_poly() ? g : g.pow(J.q)) + gnext.scale(pc);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

// ---- Kummer covers (closed-form jets) ---------------------------------------

// J^n of S[t]/(t^m - h) with h an invertible symbol: the presentation keeps
// the single relation t^m - h and every prolongation t^(k) is solved as an
// element of S_n[t]/(t^m - h), S_n = R[h^{+-1}, h', ..., h^(n)], by Hensel
// iteration on the p-adically unit-leading equation delta^k(t^m - h) = 0.
// Solved elements live over vars (t, h, h', ..., h^(n)) with t-degree < m,
// Laurent exponents on h, coefficients reduced mod p^N.
struct KummerJet {
    int64_t p = 0;
    int f = 1;
    uint64_t q = 0;
    int N = 0;
    int m = 0;
    int order = 0;
    std::vector<std::string> vars;          // t, h, h', ...
    MPoly<BigInt> relation;                 // t^m - h
    std::vector<MPoly<BigInt>> solved;      // t^(1) .. t^(order)
    std::vector<MPoly<BigInt>> deltas;      // delta^k(t^m - h), k = 1..order, over the
                                            // full symbolic variables (t, t', ..., h, ...)
    std::vector<std::string> full_vars;
};

KummerJet kummer_jet(int64_t p, int f, int N, int m, int order);

// Back-substitute the solved prolongations into every delta^k(t^m - h) and
// reduce in the quotient: true iff all vanish mod p^N.
bool kummer_verify(const KummerJet& K);

// Evaluate the solved prolongations at a concrete unit h (with inverse
// certificate); entry [k] lists the t-power coefficients of t^(k+1).
std::vector<std::vector<BaseElem>> kummer_solved_concrete(const KummerJet& K,
                                                          const BaseRingPtr& ring,
                                                          const BaseElem& h,
                                                          const BaseElem& hinv);

}  // namespace arithjet
