#pragma once

#include "arithjet/bigint.hpp"
#include "arithjet/errors.hpp"
#include "arithjet/fp_poly.hpp"
#include "arithjet/rng.hpp"

#include <memory>
#include <string>
#include <vector>

namespace arithjet {

class BaseRing;
using BaseRingPtr = std::shared_ptr<const BaseRing>;

// Element of R = W(F_q) truncated to precision p^prec, in the polynomial basis
// with respect to the ring's modulus. Values are immutable; every operation
// returns a fresh element. Mixed-precision operands truncate to the minimum.
class BaseElem {
public:
    BaseElem() = default;
    BaseElem(BaseRingPtr ring, std::vector<BigInt> coeffs, int prec);

    const BaseRingPtr& ring() const { return ring_; }
    int prec() const { return prec_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BaseElem operator+(const BaseElem& o) const;
    BaseElem operator-(const BaseElem& o) const;
    BaseElem operator*(const BaseElem& o) const;
    BaseElem operator-() const;
    bool operator==(const BaseElem& o) const;  // compares at the minimum precision
    bool operator!=(const BaseElem& o) const { return !(*this == o); }

    BaseElem pow(uint64_t e) const;
    BaseElem inverse() const;       // throws NotInvertible on non-units
    bool is_unit() const;
    bool is_zero() const;           // at own precision

    // The arithmetic Frobenius sigma generating Gal(Q_q/Q_p): [t] -> [t^p] on
    // Teichmuller digits, so sigma^f = id and sigma(x) = x^p mod p. Exact at
    // the element's precision.
    BaseElem frobenius() const;
    // The pi-typical derivation (x - x^q)/p attached to the q-power Frobenius
    // lift (the identity on W(F_q)); output precision drops by one.
    BaseElem delta() const;
    // x / p^k at precision prec - k; DivisionNotExact if v_p < k somewhere.
    BaseElem exact_div_p(int k) const;

    BaseElem residue() const;       // reduction to precision 1 (an F_q element)
    BaseElem at_prec(int prec) const;  // truncate to lower precision

    std::string to_string() const;

private:
    BaseRingPtr ring_;
    int prec_ = 0;
    std::vector<BigInt> coeffs_;  // length f, each in [0, p^prec)

    void reduce();
    friend class BaseRing;
};

// Unramified base R = W(F_q), q = p^f, held at finite precision N with a fixed
// degree-f modulus (irreducible mod p). pi = p throughout.
class BaseRing : public std::enable_shared_from_this<BaseRing> {
public:
    // modulus_low: the f lower coefficients c_0..c_{f-1} of a monic modulus
    // X^f + c_{f-1} X^{f-1} + ... + c_0; empty selects the bundled default.
    static BaseRingPtr make(int64_t p, int f, int prec,
                            std::vector<BigInt> modulus_low = {});

    int64_t p() const { return p_; }
    int f() const { return f_; }
    int prec() const { return prec_; }
    uint64_t q() const { return q_; }
    const std::vector<BigInt>& modulus_low() const { return modulus_low_; }
    const BigInt& p_pow(int k) const { return p_pows_.at(static_cast<size_t>(k)); }

    BaseElem zero(int prec = -1) const;
    BaseElem one(int prec = -1) const;
    BaseElem from_int(int64_t v, int prec = -1) const;
    BaseElem from_bigint(const BigInt& v, int prec = -1) const;
    BaseElem from_coeffs(std::vector<BigInt> coeffs, int prec = -1) const;

    // Hensel root of X^q = X over the residue digit of a.
    BaseElem teichmuller(const BaseElem& residue_elem) const;

    BaseElem random(Rng& rng, int prec = -1) const;
    BaseElem random_unit(Rng& rng, int prec = -1) const;

    // Bundled table of default moduli (lexicographically-smallest monic
    // irreducible over F_p), supplemented by deterministic search.
    static std::vector<BigInt> default_modulus(int64_t p, int f);

private:
    BaseRing(int64_t p, int f, int prec, std::vector<BigInt> modulus_low);

    int64_t p_;
    int f_;
    int prec_;
    uint64_t q_;
    std::vector<BigInt> modulus_low_;
    fppoly::Poly modulus_mod_p_;
    std::vector<BigInt> p_pows_;  // p^0 .. p^prec

    friend class BaseElem;
};

inline bool is_zero(const BaseElem& e) { return e.is_zero(); }

// adapters used by the generic polynomial engine
inline BaseElem inject_bigint(const BaseElem& proto, const BigInt& v) {
    return proto.ring()->from_bigint(v, proto.prec());
}
inline BaseElem coeff_exact_div_p(const BaseElem& c, int64_t, int k) { return c.exact_div_p(k); }

}  // namespace arithjet
