#pragma once

#include "arithjet/bigint.hpp"
#include "arithjet/errors.hpp"

namespace arithjet {

// Exact rational with reduced representation, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    Rational operator-() const { return Rational(-num_, den_, nocheck{}); }
    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    // p-adic valuation; requires nonzero.
    int valuation(const BigInt& p) const {
        if (is_zero()) throw std::domain_error("Rational: valuation of zero");
        return num_.valuation(p) - den_.valuation(p);
    }
    bool p_integral(const BigInt& p) const { return is_zero() || !(den_ % p).is_zero(); }

    // Residue mod p^N for p-integral values (denominator inverted mod p^N).
    BigInt residue_mod(const BigInt& p, int N) const {
        BigInt pk = p.pow(static_cast<uint64_t>(N));
        if ((den_ % p).is_zero())
            throw DivisionNotExact("p in denominator of " + to_string());
        return (num_.mod(pk) * BigInt::mod_inverse(den_, pk)).mod(pk);
    }

    std::string to_string() const {
        return den_.is_one() ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
    }

private:
    struct nocheck {};
    Rational(BigInt n, BigInt d, nocheck) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }

    BigInt num_, den_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const BigInt& v) { return v.is_zero(); }

}  // namespace arithjet
