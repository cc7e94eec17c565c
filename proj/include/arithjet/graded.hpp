#pragma once

#include "arithjet/base_ring.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace arithjet {

// tau-decomposition of a Kummer-algebra element: components[r] is the t^r
// coefficient, labeled as the weight -r graded piece.
struct GradedElement {
    std::map<int, BaseElem> components;
};

// S_n[t]/(t^{q-1} - h) with h an invertible element of the base (inverse
// certificate required), carrying the diamond action d: t -> theta(d)^{-1} t
// through the Teichmuller character theta.
class KummerAlgebra {
public:
    using Elem = std::vector<BaseElem>;  // t-basis coefficients, length q-1

    KummerAlgebra(BaseRingPtr ring, BaseElem h, BaseElem hinv);

    const BaseRingPtr& ring() const { return ring_; }
    const BaseElem& h() const { return h_; }
    int m() const { return m_; }

    Elem zero() const;
    Elem constant(const BaseElem& c) const;
    // c * t^r; exponents >= q-1 reduce through t^{q-1} = h.
    Elem monomial(int r, const BaseElem& c) const;
    Elem from_components(const std::map<int, BaseElem>& comps) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const BaseElem& c, const Elem& a) const;
    Elem pow(const Elem& a, uint64_t e) const;
    bool eq(const Elem& a, const Elem& b) const;
    bool is_zero_elem(const Elem& a) const;

    // Teichmuller character theta(d); NotAUnit when d is divisible by p.
    BaseElem theta(int64_t d) const;

    // <d> x: S_n-linear extension of t -> theta(d)^{-1} t.
    Elem diamond_act(int64_t d, const Elem& x) const;

    GradedElement tau_decompose(const Elem& x) const;
    Elem reassemble(const GradedElement& g) const;

    struct Eigen {
        std::optional<int> weight;  // k' mod (q-1) when concentrated in one piece
        std::set<int> occupied;
    };
    // ZeroElement on zero input; weight unset means NotEigen.
    Eigen eigenweight(const Elem& x) const;

    // (a^+)^{q-1} == H in the algebra.
    bool hasse_root_check(const Elem& aplus, const BaseElem& H) const;

    Elem random(Rng& rng) const;

private:
    BaseRingPtr ring_;
    BaseElem h_, hinv_;
    int m_;
};

// Parallel companion weight p + 1 - k of an ordinary weight-k form; requires 2 < k < p.
int64_t companion_weight(int64_t k, int64_t p);

// Smallest generator of (Z/qZ)^* for prime q.
int64_t find_generator(int64_t q);

}  // namespace arithjet
