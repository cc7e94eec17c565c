#include "arithjet/bigint.hpp"
#include "arithjet/errors.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace arithjet {

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

BigInt::BigInt(int64_t v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    uint64_t m = v > 0 ? static_cast<uint64_t>(v) : ~static_cast<uint64_t>(v) + 1;
    while (m) {
        mag_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

BigInt::BigInt(const std::string& decimal) { *this = from_string(decimal); }

BigInt BigInt::from_string(const std::string& s) {
    size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt r;
    const BigInt chunk_base(1000000000);
    for (; i < s.size();) {
        size_t take = std::min<size_t>(9, s.size() - i);
        uint32_t chunk = 0;
        BigInt base = take == 9 ? chunk_base : BigInt(1);
        if (take != 9) {
            int64_t b = 1;
            for (size_t k = 0; k < take; ++k) b *= 10;
            base = BigInt(b);
        }
        for (size_t k = 0; k < take; ++k, ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            chunk = chunk * 10 + static_cast<uint32_t>(s[i] - '0');
        }
        r = r * base + BigInt(static_cast<int64_t>(chunk));
    }
    if (sign < 0) r = -r;
    return r;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
        if (s < 0) {
            s += (1ll << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = r[i + j] + ai * b[j] + carry;
            r[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        q.clear();
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0];
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.clear();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    int shift = 0;
    uint32_t top = b.back();
    while (!(top & 0x80000000u)) {
        top <<= 1;
        ++shift;
    }
    auto shl = [&](const std::vector<uint32_t>& v) {
        std::vector<uint32_t> out(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] |= static_cast<uint32_t>((static_cast<uint64_t>(v[i]) << shift) & 0xffffffffu);
            out[i + 1] = shift ? static_cast<uint32_t>(static_cast<uint64_t>(v[i]) >> (32 - shift)) : 0;
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    std::vector<uint32_t> u = shl(a);
    std::vector<uint32_t> v = shl(b);
    size_t n = v.size(), m = u.size() >= n ? u.size() - n : 0;
    u.resize(u.size() + 1, 0);
    q.assign(m + 1, 0);
    const uint64_t base = 1ull << 32;
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / v[n - 1];
        uint64_t rhat = num % v[n - 1];
        while (qhat >= base ||
               (n >= 2 && qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2]))) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= base) break;
        }
        // multiply-subtract
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t prod = qhat * v[i] + carry;
            carry = prod >> 32;
            int64_t sub = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(prod & 0xffffffffu) - borrow;
            if (sub < 0) {
                sub += static_cast<int64_t>(base);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(sub);
        }
        int64_t sub = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (sub < 0) {
            sub += static_cast<int64_t>(base);
            // add back
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
                c2 = s >> 32;
            }
            sub += static_cast<int64_t>(c2);
        }
        u[j + n] = static_cast<uint32_t>(sub);
        q[j] = static_cast<uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    // shift remainder back
    u.resize(n);
    r.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        uint64_t lo = static_cast<uint64_t>(u[i]) >> shift;
        uint64_t hi = (i + 1 < n && shift) ? (static_cast<uint64_t>(u[i + 1]) << (32 - shift)) : 0;
        r[i] = static_cast<uint32_t>((lo | hi) & 0xffffffffu);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.sign_ = o.sign_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (sign_ == 0 || o.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = sign_ * o.sign_;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt BigInt::mod(const BigInt& m) const {
    BigInt r = *this % m;
    if (r.sign_ < 0) r = r + m.abs();
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::pow(uint64_t e) const {
    BigInt base = *this, r(1);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void BigInt::gcdext(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
    BigInt old_r = a, r = b;
    BigInt old_s(1), s(0), old_t(0), t(1);
    while (!r.is_zero()) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r.is_negative()) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    x = old_s;
    y = old_t;
}

BigInt BigInt::mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt g, x, y;
    gcdext(a.mod(m), m, g, x, y);
    if (!g.is_one()) throw NotInvertible("no inverse modulo " + m.to_string());
    return x.mod(m);
}

int BigInt::valuation(const BigInt& p) const {
    if (is_zero()) throw std::domain_error("BigInt: valuation of zero");
    BigInt cur = this->abs();
    int v = 0;
    while (true) {
        BigInt q, r;
        divmod(cur, p, q, r);
        if (!r.is_zero()) return v;
        cur = q;
        ++v;
        if (cur.is_zero()) return v;  // unreachable for p > 1
    }
}

BigInt BigInt::exact_div_pow(const BigInt& p, int k) const {
    if (k == 0 || is_zero()) return *this;
    BigInt cur = *this;
    for (int i = 0; i < k; ++i) {
        BigInt q, r;
        divmod(cur, p, q, r);
        if (!r.is_zero())
            throw DivisionNotExact("p-adic valuation " + std::to_string(i) +
                                   " < " + std::to_string(k) + " dividing " + to_string());
        cur = q;
    }
    return cur;
}

BigInt BigInt::exact_div(const BigInt& d) const {
    BigInt q, r;
    divmod(*this, d, q, r);
    if (!r.is_zero())
        throw DivisionNotExact("nonzero remainder dividing " + to_string() + " by " + d.to_string());
    return q;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    uint64_t m = 0;
    for (size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
    if (sign_ >= 0) return m <= 0x7fffffffffffffffull;
    return m <= 0x8000000000000000ull;
}

int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    uint64_t m = 0;
    for (size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
    return sign_ < 0 ? -static_cast<int64_t>(m) : static_cast<int64_t>(m);
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> cur = mag_;
    std::string out;
    while (!cur.empty()) {
        uint64_t rem = 0;
        for (size_t i = cur.size(); i-- > 0;) {
            uint64_t v = (rem << 32) | cur[i];
            cur[i] = static_cast<uint32_t>(v / 1000000000ull);
            rem = v % 1000000000ull;
        }
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
        for (int k = 0; k < 9; ++k) {
            out.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    if (sign_ < 0) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace arithjet
