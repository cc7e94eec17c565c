#pragma once

#include "arithjet/bigint.hpp"
#include "arithjet/errors.hpp"
#include "arithjet/rational.hpp"

#include <cassert>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

namespace arithjet {

// Exponent vector of a monomial; entries may be negative for Laurent
// variables. All monomials of a polynomial share the same arity.
using Exps = std::vector<int32_t>;

// Graded-lexicographic monomial order: total degree first, then lex.
struct GradedLex {
    bool operator()(const Exps& a, const Exps& b) const {
        int64_t da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

// Predicate deciding whether a monomial is kept during truncated arithmetic.
using KeepFn = std::function<bool(const Exps&)>;

// Sparse distributed multivariate polynomial over a commutative coefficient
// ring C. Terms are held in a std::map in graded-lex order, so iteration
// order (and any serialization derived from it) is canonical.
template <class C>
class MPoly {
public:
    explicit MPoly(int nvars = 0) : nvars_(nvars) {}

    static MPoly zero(int nvars) { return MPoly(nvars); }

    static MPoly constant(int nvars, C value) {
        MPoly r(nvars);
        if (!is_zero(value)) r.terms_.emplace(Exps(static_cast<size_t>(nvars), 0), std::move(value));
        return r;
    }

    static MPoly variable(int nvars, int idx, C unit, int32_t e = 1) {
        MPoly r(nvars);
        Exps m(static_cast<size_t>(nvars), 0);
        m[static_cast<size_t>(idx)] = e;
        r.terms_.emplace(std::move(m), std::move(unit));
        return r;
    }

    int nvars() const { return nvars_; }
    const std::map<Exps, C, GradedLex>& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Exps& m, const C& c) {
        if (is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    MPoly operator+(const MPoly& o) const {
        MPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    MPoly operator-() const {
        MPoly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    MPoly operator-(const MPoly& o) const { return *this + (-o); }

    MPoly mul(const MPoly& o, const KeepFn* keep = nullptr) const {
        assert(nvars_ == o.nvars_);
        MPoly r(nvars_);
        Exps m(static_cast<size_t>(nvars_));
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                if (keep && !(*keep)(m)) continue;
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    MPoly operator*(const MPoly& o) const { return mul(o); }

    MPoly pow(uint64_t e, const KeepFn* keep = nullptr) const {
        assert(e >= 1);
        MPoly base = *this, r;
        bool have = false;
        while (e) {
            if (e & 1) {
                r = have ? r.mul(base, keep) : base;
                have = true;
            }
            e >>= 1;
            if (e) base = base.mul(base, keep);
        }
        return r;
    }

    MPoly scale(const C& c) const {
        MPoly r(nvars_);
        for (const auto& [m, cc] : terms_) {
            C v = cc * c;
            if (!is_zero(v)) r.terms_.emplace(m, std::move(v));
        }
        return r;
    }

    template <class D, class Fn>
    MPoly<D> map_coeffs(Fn&& fn) const {
        MPoly<D> r(nvars_);
        for (const auto& [m, c] : terms_) {
            D v = fn(c);
            if (!is_zero(v)) r.add_term(m, v);
        }
        return r;
    }

    // Substitute images[i] for variable i; the images share a common arity,
    // which becomes the arity of the result. Negative exponents require the
    // image to be a single-term monomial; its coefficient is inverted with
    // coeff_inv (must be supplied in that case).
    MPoly substitute(const std::vector<MPoly>& images, const KeepFn* keep = nullptr,
                     const std::function<C(const C&)>* coeff_inv = nullptr) const {
        if (static_cast<int>(images.size()) != nvars_)
            throw RangeError("substitute: one image per variable required");
        const int target = images.empty() ? nvars_ : images[0].nvars();
        MPoly r(target);
        for (const auto& [m, c] : terms_) {
            MPoly acc = MPoly::constant(target, c);
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (m[i] > 0) {
                    acc = acc.mul(images[i].pow(static_cast<uint64_t>(m[i]), keep), keep);
                } else {
                    const MPoly& img = images[i];
                    if (img.term_count() != 1)
                        throw NotInvertible("negative power of a non-monomial image");
                    const auto& [im, ic] = *img.terms_.begin();
                    Exps inv = im;
                    for (auto& ei : inv) ei = static_cast<int32_t>(ei * m[i]);
                    if (!coeff_inv) throw NotInvertible("no coefficient inverse supplied");
                    C cinv = (*coeff_inv)(ic);
                    C cpow = cinv;
                    for (int32_t k = 1; k < -m[i]; ++k) cpow = cpow * cinv;
                    MPoly mono(target);
                    mono.terms_.emplace(std::move(inv), std::move(cpow));
                    acc = acc.mul(mono, keep);
                }
            }
            for (const auto& [ma, ca] : acc.terms_) r.add_term(ma, ca);
        }
        return r;
    }

    // Evaluate at values (nonnegative exponents only).
    C eval(const std::vector<C>& vals) const {
        C total{};
        bool first = true;
        for (const auto& [m, c] : terms_) {
            C acc = c;
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (m[i] < 0) throw RangeError("eval with negative exponent");
                C b = vals[i];
                int32_t e = m[i];
                while (e) {
                    if (e & 1) acc = acc * b;
                    e >>= 1;
                    if (e) b = b * b;
                }
            }
            total = first ? acc : total + acc;
            first = false;
        }
        if (first) return C{};  // zero polynomial: C must be value-initializable to 0
        return total;
    }

    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    int32_t max_total_degree() const {
        int32_t d = 0;
        for (const auto& [m, c] : terms_) {
            int32_t s = 0;
            for (auto e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << coeff_str(c);
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                os << "*" << names[i];
                if (m[i] != 1) os << "^" << m[i];
            }
        }
        return os.str();
    }

private:
    static std::string coeff_str(const BigInt& c) { return c.to_string(); }
    static std::string coeff_str(const Rational& c) { return c.to_string(); }
    template <class X>
    static std::string coeff_str(const X& c) { return c.to_string(); }

    int nvars_;
    std::map<Exps, C, GradedLex> terms_;
};

template <class C>
bool is_zero(const MPoly<C>& p) { return p.is_zero_poly(); }

// Coefficient injection of integers, used when universal integer polynomials
// are evaluated over an arbitrary coefficient ring.
inline BigInt inject_bigint(const BigInt&, const BigInt& v) { return v; }
inline Rational inject_bigint(const Rational&, const BigInt& v) { return Rational(v); }
template <class C>
MPoly<C> inject_bigint(const MPoly<C>& proto, const BigInt& v) {
    C c{};
    for (const auto& [m, cc] : proto.terms()) { c = cc; break; }
    return MPoly<C>::constant(proto.nvars(), inject_bigint(c, v));
}

// Exact division of every coefficient by p^k.
inline BigInt coeff_exact_div_p(const BigInt& c, int64_t p, int k) {
    return c.exact_div_pow(BigInt(p), k);
}
inline Rational coeff_exact_div_p(const Rational& c, int64_t p, int k) {
    return c / Rational(BigInt(p).pow(static_cast<uint64_t>(k)));
}

template <class C>
MPoly<C> poly_exact_div_p(const MPoly<C>& a, int64_t p, int k) {
    MPoly<C> r(a.nvars());
    for (const auto& [m, c] : a.terms()) r.add_term(m, coeff_exact_div_p(c, p, k));
    return r;
}

// Evaluate an integer polynomial over coefficient ring C (proto supplies the
// ring context to inject constants into).
template <class C>
C eval_int_poly(const MPoly<BigInt>& poly, const std::vector<C>& vals, const C& proto) {
    C total = inject_bigint(proto, BigInt(0));
    for (const auto& [m, c] : poly.terms()) {
        C acc = inject_bigint(proto, c);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            C b = vals[i];
            int32_t e = m[i];
            while (e) {
                if (e & 1) acc = acc * b;
                e >>= 1;
                if (e) b = b * b;
            }
        }
        total = total + acc;
    }
    return total;
}

}  // namespace arithjet
