#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <iosfwd>

namespace arithjet {

// Signed arbitrary-precision integer. Magnitude is a little-endian vector of
// 32-bit limbs with no trailing zero limb; sign is -1/0/+1 and zero has an
// empty magnitude. Division truncates toward zero, like built-in integers.
class BigInt {
public:
    BigInt() = default;
    BigInt(int64_t v);
    explicit BigInt(const std::string& decimal);

    static BigInt from_string(const std::string& decimal);

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const;
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator/(const BigInt& o) const;   // quotient, truncated toward zero
    BigInt operator%(const BigInt& o) const;   // remainder, sign follows dividend

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    // q, r with a = q*b + r, |r| < |b|, r sign matching a (truncated division).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    // Least nonnegative residue mod m (m > 0).
    BigInt mod(const BigInt& m) const;

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    BigInt pow(uint64_t e) const;
    static BigInt gcd(BigInt a, BigInt b);
    // g = gcd(a,b) >= 0 and x,y with a*x + b*y = g.
    static void gcdext(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y);
    // Inverse of a mod m (m > 1); throws if gcd(a,m) != 1.
    static BigInt mod_inverse(const BigInt& a, const BigInt& m);

    // Largest k with p^k | *this; requires *this != 0 and p > 1.
    int valuation(const BigInt& p) const;
    // *this / p^k, throwing DivisionNotExact when p^k does not divide.
    BigInt exact_div_pow(const BigInt& p, int k) const;
    // Exact quotient *this / d, throwing DivisionNotExact on nonzero remainder.
    BigInt exact_div(const BigInt& d) const;

    bool fits_int64() const;
    int64_t to_int64() const;  // throws if out of range

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace arithjet
