#include "arithjet/graded.hpp"
#include "arithjet/errors.hpp"

namespace arithjet {

KummerAlgebra::KummerAlgebra(BaseRingPtr ring, BaseElem h, BaseElem hinv)
    : ring_(std::move(ring)), h_(std::move(h)), hinv_(std::move(hinv)) {
    m_ = static_cast<int>(ring_->q()) - 1;
    if (m_ < 1) throw RangeError("kummer algebra needs q >= 2");
    if (!(h_ * hinv_ == ring_->one()))
        throw NotAUnit("h * hinv != 1: invalid unit certificate");
}

KummerAlgebra::Elem KummerAlgebra::zero() const {
    return Elem(static_cast<size_t>(m_), ring_->zero());
}

KummerAlgebra::Elem KummerAlgebra::constant(const BaseElem& c) const {
    Elem e = zero();
    e[0] = c;
    return e;
}

KummerAlgebra::Elem KummerAlgebra::monomial(int r, const BaseElem& c) const {
    Elem e = zero();
    int s = r / m_;
    int rr = r % m_;
    if (rr < 0) {
        rr += m_;
        --s;
    }
    BaseElem v = c;
    for (int i = 0; i < s; ++i) v = v * h_;
    for (int i = 0; i > s; --i) v = v * hinv_;
    e[static_cast<size_t>(rr)] = v;
    return e;
}

KummerAlgebra::Elem KummerAlgebra::from_components(const std::map<int, BaseElem>& comps) const {
    Elem e = zero();
    for (const auto& [r, c] : comps) {
        Elem mono = monomial(r, c);
        e = add(e, mono);
    }
    return e;
}

KummerAlgebra::Elem KummerAlgebra::add(const Elem& a, const Elem& b) const {
    Elem e = zero();
    for (int i = 0; i < m_; ++i) e[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)];
    return e;
}

KummerAlgebra::Elem KummerAlgebra::mul(const Elem& a, const Elem& b) const {
    Elem e = zero();
    for (int i = 0; i < m_; ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < m_; ++j) {
            if (b[static_cast<size_t>(j)].is_zero()) continue;
            BaseElem v = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
            int k = i + j;
            if (k >= m_) {
                k -= m_;
                v = v * h_;
            }
            e[static_cast<size_t>(k)] = e[static_cast<size_t>(k)] + v;
        }
    }
    return e;
}

KummerAlgebra::Elem KummerAlgebra::scale(const BaseElem& c, const Elem& a) const {
    Elem e = zero();
    for (int i = 0; i < m_; ++i) e[static_cast<size_t>(i)] = c * a[static_cast<size_t>(i)];
    return e;
}

KummerAlgebra::Elem KummerAlgebra::pow(const Elem& a, uint64_t e) const {
    Elem r = constant(ring_->one());
    Elem base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

bool KummerAlgebra::eq(const Elem& a, const Elem& b) const {
    for (int i = 0; i < m_; ++i)
        if (!(a[static_cast<size_t>(i)] == b[static_cast<size_t>(i)])) return false;
    return true;
}

bool KummerAlgebra::is_zero_elem(const Elem& a) const {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

BaseElem KummerAlgebra::theta(int64_t d) const {
    BaseElem res = ring_->from_int(d).residue();
    if (res.is_zero()) throw NotAUnit("theta of a non-unit class");
    return ring_->teichmuller(res);
}

KummerAlgebra::Elem KummerAlgebra::diamond_act(int64_t d, const Elem& x) const {
    BaseElem th_inv = theta(d).inverse();
    Elem e = zero();
    BaseElem factor = ring_->one();
    for (int r = 0; r < m_; ++r) {
        e[static_cast<size_t>(r)] = factor * x[static_cast<size_t>(r)];
        factor = factor * th_inv;  // theta(d)^{-(r+1)} for the next slot
    }
    return e;
}

GradedElement KummerAlgebra::tau_decompose(const Elem& x) const {
    GradedElement g;
    for (int r = 0; r < m_; ++r)
        if (!x[static_cast<size_t>(r)].is_zero()) g.components.emplace(r, x[static_cast<size_t>(r)]);
    return g;
}

KummerAlgebra::Elem KummerAlgebra::reassemble(const GradedElement& g) const {
    return from_components(g.components);
}

KummerAlgebra::Eigen KummerAlgebra::eigenweight(const Elem& x) const {
    if (is_zero_elem(x)) throw ZeroElement("eigenweight of zero");
    Eigen out;
    for (int r = 0; r < m_; ++r)
        if (!x[static_cast<size_t>(r)].is_zero()) out.occupied.insert(r);
    if (out.occupied.size() == 1) {
        int r = *out.occupied.begin();
        out.weight = ((-r) % m_ + m_) % m_;
    }
    return out;
}

bool KummerAlgebra::hasse_root_check(const Elem& aplus, const BaseElem& H) const {
    return eq(pow(aplus, static_cast<uint64_t>(m_)), constant(H));
}

KummerAlgebra::Elem KummerAlgebra::random(Rng& rng) const {
    Elem e = zero();
    for (int i = 0; i < m_; ++i) e[static_cast<size_t>(i)] = ring_->random(rng);
    return e;
}

int64_t companion_weight(int64_t k, int64_t p) {
    if (!(2 < k && k < p))
        throw RangeError("companion weight needs 2 < k < p");
    return p + 1 - k;
}

int64_t find_generator(int64_t q) {
    for (int64_t g = 2; g < q; ++g) {
        int64_t order = 1;
        int64_t cur = g % q;
        while (cur != 1) {
            cur = cur * g % q;
            ++order;
        }
        if (order == q - 1) return g;
    }
    throw RangeError("no generator found (is q prime?)");
}

}  // namespace arithjet
