#include "arithjet/base_ring.hpp"

#include <algorithm>
#include <sstream>

namespace arithjet {

namespace {

bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

BaseElem::BaseElem(BaseRingPtr ring, std::vector<BigInt> coeffs, int prec)
    : ring_(std::move(ring)), prec_(prec), coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<size_t>(ring_->f()), BigInt(0));
    if (prec_ < 1 || prec_ > ring_->prec())
        throw PrecisionExhausted("element precision " + std::to_string(prec_));
    reduce();
}

void BaseElem::reduce() {
    const BigInt& pk = ring_->p_pow(prec_);
    for (auto& c : coeffs_) c = c.mod(pk);
}

BaseElem BaseElem::at_prec(int prec) const {
    if (prec == prec_) return *this;
    if (prec > prec_) throw PrecisionExhausted("cannot raise precision");
    return BaseElem(ring_, coeffs_, prec);
}

BaseElem BaseElem::operator+(const BaseElem& o) const {
    int pr = std::min(prec_, o.prec_);
    std::vector<BigInt> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] + o.coeffs_[i];
    return BaseElem(ring_, std::move(c), pr);
}

BaseElem BaseElem::operator-(const BaseElem& o) const {
    int pr = std::min(prec_, o.prec_);
    std::vector<BigInt> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] - o.coeffs_[i];
    return BaseElem(ring_, std::move(c), pr);
}

BaseElem BaseElem::operator-() const {
    std::vector<BigInt> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return BaseElem(ring_, std::move(c), prec_);
}

BaseElem BaseElem::operator*(const BaseElem& o) const {
    int pr = std::min(prec_, o.prec_);
    size_t f = coeffs_.size();
    const BigInt& pk = ring_->p_pow(pr);
    std::vector<BigInt> prod(2 * f - 1, BigInt(0));
    for (size_t i = 0; i < f; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < f; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            prod[i + j] = (prod[i + j] + coeffs_[i] * o.coeffs_[j]).mod(pk);
        }
    }
    // reduce modulo the monic modulus X^f + sum m_i X^i
    for (size_t d = 2 * f - 2; d >= f && d < prod.size(); --d) {
        BigInt lead = prod[d];
        if (lead.is_zero()) continue;
        prod[d] = BigInt(0);
        const auto& m = ring_->modulus_low();
        for (size_t i = 0; i < f; ++i)
            prod[d - f + i] = (prod[d - f + i] - lead * m[i]).mod(pk);
    }
    prod.resize(f);
    return BaseElem(ring_, std::move(prod), pr);
}

bool BaseElem::operator==(const BaseElem& o) const {
    int pr = std::min(prec_, o.prec_);
    const BigInt& pk = ring_->p_pow(pr);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i].mod(pk) != o.coeffs_[i].mod(pk)) return false;
    return true;
}

BaseElem BaseElem::pow(uint64_t e) const {
    BaseElem r = ring_->one(prec_);
    BaseElem b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool BaseElem::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool BaseElem::is_unit() const {
    const BigInt p(ring_->p());
    for (const auto& c : coeffs_)
        if (!(c % p).is_zero()) return true;
    return false;
}

BaseElem BaseElem::residue() const { return at_prec(1); }

BaseElem BaseElem::inverse() const {
    if (!is_unit()) throw NotInvertible("non-unit base element " + to_string());
    int64_t p = ring_->p();
    // invert the residue in F_q, then Hensel-lift z <- z(2 - xz)
    fppoly::Poly res;
    for (const auto& c : coeffs_) res.push_back((c % BigInt(p)).mod(BigInt(p)).to_int64());
    res = fppoly::trim(std::move(res));
    fppoly::Poly modp;
    for (const auto& c : ring_->modulus_low()) modp.push_back((c % BigInt(p)).mod(BigInt(p)).to_int64());
    modp.push_back(1);
    fppoly::Poly inv0 = fppoly::inverse_mod(res, modp, p);
    std::vector<BigInt> zc(coeffs_.size(), BigInt(0));
    for (size_t i = 0; i < inv0.size(); ++i) zc[i] = BigInt(inv0[i]);
    BaseElem z(ring_, std::move(zc), prec_);
    BaseElem two = ring_->from_int(2, prec_);
    int reached = 1;
    while (reached < prec_) {
        z = z * (two - *this * z);
        reached *= 2;
    }
    return z;
}

BaseElem BaseElem::frobenius() const {
    if (ring_->f() == 1) return *this;
    // phi(sum [t_i] p^i) = sum [t_i^p] p^i
    const int64_t p = ring_->p();
    BaseElem work = *this;
    std::vector<BigInt> acc(coeffs_.size(), BigInt(0));
    const BigInt& pN = ring_->p_pow(prec_);
    for (int i = 0; i < prec_; ++i) {
        BaseElem digit = work.residue();
        if (!digit.is_zero()) {
            BaseElem t = ring_->teichmuller(digit).at_prec(prec_ - i);
            BaseElem tp = ring_->teichmuller(digit.pow(static_cast<uint64_t>(p))).at_prec(prec_ - i);
            const BigInt& pi = ring_->p_pow(i);
            for (size_t k = 0; k < acc.size(); ++k)
                acc[k] = (acc[k] + tp.coeffs()[k] * pi).mod(pN);
            if (i + 1 < prec_) work = (work - t).exact_div_p(1);
        } else if (i + 1 < prec_) {
            work = work.exact_div_p(1);
        }
    }
    return BaseElem(ring_, std::move(acc), prec_);
}

BaseElem BaseElem::delta() const {
    // The q-power Frobenius lift on W(F_q) is the identity (it reduces to the
    // identity on F_q), so delta(x) = (x - x^q)/p; exact since x^q = x mod p.
    return (*this - pow(ring_->q())).exact_div_p(1);
}

BaseElem BaseElem::exact_div_p(int k) const {
    if (k < 0) throw RangeError("exact_div_p expects k >= 0");
    if (k == 0) return *this;
    if (prec_ - k < 1)
        throw PrecisionExhausted("exact_div_p past precision " + std::to_string(prec_));
    const BigInt pk = BigInt(ring_->p()).pow(static_cast<uint64_t>(k));
    std::vector<BigInt> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) {
        BigInt q, r;
        BigInt::divmod(coeffs_[i], pk, q, r);
        if (!r.is_zero()) {
            int v = coeffs_[i].valuation(BigInt(ring_->p()));
            throw DivisionNotExact("coefficient valuation " + std::to_string(v) +
                                   " < " + std::to_string(k));
        }
        c[i] = q;
    }
    return BaseElem(ring_, std::move(c), prec_ - k);
}

std::string BaseElem::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i];
    }
    os << " mod " << ring_->p() << "^" << prec_ << ")";
    return os.str();
}

BaseRing::BaseRing(int64_t p, int f, int prec, std::vector<BigInt> modulus_low)
    : p_(p), f_(f), prec_(prec), modulus_low_(std::move(modulus_low)) {
    q_ = 1;
    for (int i = 0; i < f; ++i) q_ *= static_cast<uint64_t>(p);
    p_pows_.reserve(static_cast<size_t>(prec) + 1);
    BigInt cur(1);
    for (int i = 0; i <= prec; ++i) {
        p_pows_.push_back(cur);
        cur = cur * BigInt(p);
    }
    for (const auto& c : modulus_low_) modulus_mod_p_.push_back((c % BigInt(p)).mod(BigInt(p)).to_int64());
    modulus_mod_p_.push_back(1);
}

BaseRingPtr BaseRing::make(int64_t p, int f, int prec, std::vector<BigInt> modulus_low) {
    if (!is_prime(p)) throw RangeError("p = " + std::to_string(p) + " is not prime");
    if (f < 1 || f > 8) throw RangeError("residue degree f out of range");
    if (prec < 1) throw RangeError("precision must be >= 1");
    if (modulus_low.empty()) modulus_low = default_modulus(p, f);
    if (static_cast<int>(modulus_low.size()) != f)
        throw RangeError("modulus must have degree f");
    auto ring = BaseRingPtr(new BaseRing(p, f, prec, std::move(modulus_low)));
    if (!fppoly::is_irreducible(ring->modulus_mod_p_, p))
        throw RangeError("modulus is reducible mod p");
    return ring;
}

std::vector<BigInt> BaseRing::default_modulus(int64_t p, int f) {
    fppoly::Poly m = fppoly::smallest_irreducible(p, f);
    std::vector<BigInt> out;
    for (int i = 0; i < f; ++i) out.emplace_back(i < static_cast<int>(m.size()) ? m[static_cast<size_t>(i)] : 0);
    return out;
}

BaseElem BaseRing::zero(int prec) const {
    if (prec < 0) prec = prec_;
    return BaseElem(shared_from_this(), std::vector<BigInt>(static_cast<size_t>(f_), BigInt(0)), prec);
}

BaseElem BaseRing::one(int prec) const { return from_int(1, prec); }

BaseElem BaseRing::from_int(int64_t v, int prec) const { return from_bigint(BigInt(v), prec); }

BaseElem BaseRing::from_bigint(const BigInt& v, int prec) const {
    if (prec < 0) prec = prec_;
    std::vector<BigInt> c(static_cast<size_t>(f_), BigInt(0));
    c[0] = v;
    return BaseElem(shared_from_this(), std::move(c), prec);
}

BaseElem BaseRing::from_coeffs(std::vector<BigInt> coeffs, int prec) const {
    if (prec < 0) prec = prec_;
    return BaseElem(shared_from_this(), std::move(coeffs), prec);
}

BaseElem BaseRing::teichmuller(const BaseElem& a) const {
    std::vector<BigInt> c = a.coeffs();
    BaseElem y(shared_from_this(), std::move(c), prec_);
    // x -> x^q gains one digit of agreement per step
    for (int i = 0; i < prec_; ++i) y = y.pow(q_);
    return y;
}

BaseElem BaseRing::random(Rng& rng, int prec) const {
    if (prec < 0) prec = prec_;
    std::vector<BigInt> c;
    c.reserve(static_cast<size_t>(f_));
    for (int i = 0; i < f_; ++i) {
        BigInt v(0);
        for (int d = 0; d < prec; ++d)
            v = v * BigInt(p_) + BigInt(static_cast<int64_t>(rng.below(static_cast<uint64_t>(p_))));
        c.push_back(v);
    }
    return BaseElem(shared_from_this(), std::move(c), prec);
}

BaseElem BaseRing::random_unit(Rng& rng, int prec) const {
    while (true) {
        BaseElem e = random(rng, prec);
        if (e.is_unit()) return e;
    }
}

}  // namespace arithjet
