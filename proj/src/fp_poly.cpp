#include "arithjet/fp_poly.hpp"
#include "arithjet/errors.hpp"

#include <stdexcept>

namespace arithjet {
namespace fppoly {

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly add(const Poly& a, const Poly& b, int64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = s % p;
    }
    return trim(std::move(r));
}

Poly sub(const Poly& a, const Poly& b, int64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t s = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        r[i] = ((s % p) + p) % p;
    }
    return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return trim(std::move(r));
}

Poly mod(Poly a, const Poly& m, int64_t p) {
    if (m.empty() || m.back() % p != 1)
        throw std::invalid_argument("fppoly::mod expects a monic modulus");
    a = trim(std::move(a));
    while (a.size() >= m.size()) {
        int64_t lead = a.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            int64_t v = a[shift + i] - lead * m[i];
            a[shift + i] = ((v % p) + p) % p;
        }
        a = trim(std::move(a));
    }
    return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, int64_t p) {
    return mod(mul(a, b, p), m, p);
}

Poly x_pow_mod(uint64_t e, const Poly& m, int64_t p) {
    Poly base = mod({0, 1}, m, p);
    Poly r = {1};
    while (e) {
        if (e & 1) r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Poly gcd(Poly a, Poly b, int64_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        // make b monic, then reduce
        int64_t inv = 1;
        for (int64_t c = 1; c < p; ++c)
            if (c * b.back() % p == 1) { inv = c; break; }
        Poly bm = b;
        for (auto& c : bm) c = c * inv % p;
        Poly r = mod(a, bm, p);
        a = b;
        b = r;
    }
    if (!a.empty()) {
        int64_t inv = 1;
        for (int64_t c = 1; c < p; ++c)
            if (c * a.back() % p == 1) { inv = c; break; }
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

Poly inverse_mod(const Poly& a, const Poly& m, int64_t p) {
    // extended Euclid over F_p[X]
    Poly r0 = m, r1 = mod(a, m, p);
    Poly t0 = {}, t1 = {1};
    if (r1.empty()) throw NotInvertible("zero residue");
    while (!r1.empty()) {
        // divide r0 by r1
        Poly q;
        Poly rem = r0;
        int64_t lead_inv = 1;
        for (int64_t c = 1; c < p; ++c)
            if (c * r1.back() % p == 1) { lead_inv = c; break; }
        while (rem.size() >= r1.size() && !rem.empty()) {
            size_t shift = rem.size() - r1.size();
            int64_t factor = rem.back() * lead_inv % p;
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = (q[shift] + factor) % p;
            for (size_t i = 0; i < r1.size(); ++i) {
                int64_t v = rem[shift + i] - factor * r1[i];
                rem[shift + i] = ((v % p) + p) % p;
            }
            rem = trim(std::move(rem));
        }
        Poly t2 = sub(t0, mul(q, t1, p), p);
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
    }
    if (r0.size() != 1) throw NotInvertible("non-unit residue");
    int64_t lead_inv = 1;
    for (int64_t c = 1; c < p; ++c)
        if (c * r0[0] % p == 1) { lead_inv = c; break; }
    Poly out = t0;
    for (auto& c : out) c = c * lead_inv % p;
    return mod(out, m, p);
}

bool is_irreducible(const Poly& m, int64_t p) {
    if (m.size() < 2) return false;
    int f = static_cast<int>(m.size()) - 1;
    if (m.back() % p != 1) return false;
    // X^(p^f) == X mod m
    uint64_t pf = 1;
    for (int i = 0; i < f; ++i) pf *= static_cast<uint64_t>(p);
    Poly x_red = mod({0, 1}, m, p);
    Poly xq = x_pow_mod(pf, m, p);
    if (trim(sub(xq, x_red, p)).size() != 0) return false;
    // gcd(X^(p^(f/l)) - X, m) = 1 for each prime l | f
    for (int l = 2; l <= f; ++l) {
        if (f % l != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) prime = false;
        if (!prime) continue;
        uint64_t e = 1;
        for (int i = 0; i < f / l; ++i) e *= static_cast<uint64_t>(p);
        Poly g = gcd(sub(x_pow_mod(e, m, p), x_red, p), m, p);
        if (g.size() != 1) return false;
    }
    return true;
}

Poly smallest_irreducible(int64_t p, int f) {
    if (f == 1) return {0, 1};  // X itself: F_p needs no extension
    // enumerate lower coefficients (c_{f-1},...,c_0) as a base-p counter
    std::vector<int64_t> c(static_cast<size_t>(f), 0);
    while (true) {
        // increment from the low end of the numeral (c0 least significant)
        size_t i = 0;
        while (i < c.size()) {
            if (++c[i] < p) break;
            c[i] = 0;
            ++i;
        }
        if (i == c.size()) throw std::runtime_error("no irreducible found");  // cannot happen
        Poly m(c.begin(), c.end());
        m.push_back(1);
        if (is_irreducible(m, p)) return m;
    }
}

}  // namespace fppoly
}  // namespace arithjet
