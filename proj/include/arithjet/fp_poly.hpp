#pragma once

#include <cstdint>
#include <vector>

namespace arithjet {

// Dense univariate polynomials over F_p with small p. Coefficients are kept in
// [0, p); the zero polynomial is the empty vector. Used for modulus handling,
// irreducibility checks and residue-field inverses.
namespace fppoly {

using Poly = std::vector<int64_t>;

Poly trim(Poly a);
Poly add(const Poly& a, const Poly& b, int64_t p);
Poly sub(const Poly& a, const Poly& b, int64_t p);
Poly mul(const Poly& a, const Poly& b, int64_t p);
// remainder of a modulo monic m
Poly mod(Poly a, const Poly& m, int64_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, int64_t p);
// X^e mod m, e as plain integer exponent (e >= 0)
Poly x_pow_mod(uint64_t e, const Poly& m, int64_t p);
Poly gcd(Poly a, Poly b, int64_t p);
// inverse of a modulo monic irreducible m; requires gcd(a, m) = 1
Poly inverse_mod(const Poly& a, const Poly& m, int64_t p);
bool is_irreducible(const Poly& m, int64_t p);
// lexicographically-smallest monic irreducible of degree f over F_p
Poly smallest_irreducible(int64_t p, int f);

}  // namespace fppoly
}  // namespace arithjet
