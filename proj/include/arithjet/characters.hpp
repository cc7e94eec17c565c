#pragma once

#include "arithjet/base_ring.hpp"
#include "arithjet/poly.hpp"
#include "arithjet/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arithjet {

// w = w_0 + w_1 phi + ... + w_n phi^n in Z[phi].
struct WeightPoly {
    std::vector<int64_t> w;
    int deg() const { return static_cast<int>(w.size()) - 1; }
    bool operator==(const WeightPoly& o) const { return w == o.w; }
};

// chi_w(lambda) = lambda^{w_0} phi(lambda)^{w_1} ... phi^n(lambda)^{w_n};
// negative exponents go through the inverse (NotInvertible on non-units).
BaseElem weight_character(const WeightPoly& w, const BaseElem& lambda);

// ---- delta-series -----------------------------------------------------------
//
// Truncated elements of R[q, q^{-1}, q', ..., q^(r)] with q' short for the
// formal delta-coordinate of q. Terms are exact rationals (p-integral wherever
// complete); serialization reduces them mod p^N. Variable i is the i-th
// prolongation of q; only q itself may carry negative exponents.

enum class TruncKind { Plain, Delta };

struct DeltaSeries {
    int64_t p = 0;
    int N = 0;
    int order = 0;
    MPoly<Rational> terms;
    std::optional<WeightPoly> weight;
    // Degrees up to which the stored terms agree with the untruncated series.
    std::optional<int> delta_complete;
    std::optional<int> plain_complete;
    std::optional<int> weighted_complete;  // wt(q^(k)) = p^k
};

int delta_degree(const Exps& m);                  // total degree in q', q'', ...
int plain_degree(const Exps& m);                  // total degree, q included
int64_t weighted_degree(const Exps& m, int64_t p);

std::vector<std::string> series_var_names(int order);

// Psi = (1/p) log(phi(q)/q^p) = sum_{n>=1} (-1)^{n-1} n^{-1} p^{n-1} (q'/q^p)^n,
// truncated at n <= D. Coefficient valuations n-1-v_p(n) are asserted.
DeltaSeries psi_series(int64_t p, int N, int D);
DeltaSeries psi_series(const BaseRingPtr& base, int D);

// The constant series 1 with weight tag phi - 1.
DeltaSeries f_partial_series(int64_t p, int N);

// ---- eigenvalue data ----------------------------------------------------------

struct EigenformData {
    int64_t p = 0;
    int D = 0;
    std::vector<BigInt> a;  // a[1..D]; a[0] unused
    std::vector<std::string> warnings;
    const BigInt& ap() const { return a.at(static_cast<size_t>(p)); }
};

// Validates a_1 = 1 and records (but tolerates) multiplicativity violations.
EigenformData eigenform_from_list(int64_t p, std::vector<BigInt> a_values);

// Brute-force point counts of the Weierstrass model over F_ell for primes
// ell <= D; prime powers via a_{l^{k+1}} = a_l a_{l^k} - [good] l a_{l^{k-1}},
// composites multiplicatively.
EigenformData eigenform_from_curve(int64_t a1, int64_t a2, int64_t a3, int64_t a4, int64_t a6,
                                   int64_t p, int D);

// Projective point count of the (possibly singular) Weierstrass model.
int64_t count_points_weierstrass(int64_t a1, int64_t a2, int64_t a3, int64_t a4, int64_t a6,
                                 int64_t ell);

BigInt weierstrass_discriminant(int64_t a1, int64_t a2, int64_t a3, int64_t a4, int64_t a6);

// ---- formal groups ------------------------------------------------------------

// A one-dimensional formal group law to joint degree D with its logarithm:
// law = log^{-1}(log(z1) + log(z2)), log(z) = z + O(z^2).
struct FormalGroupData {
    int D = 0;
    std::vector<Rational> log;  // log[k] multiplies z^k; log[0] = 0, log[1] = 1
    MPoly<Rational> law;        // two variables z1, z2
};

FormalGroupData formal_group_additive(int D);
FormalGroupData formal_group_from_log(std::vector<Rational> log, int D);
// Expansion in z = -x/y from the invariant differential; requires good
// reduction at p (BadReduction otherwise). Law coefficients are integers.
FormalGroupData formal_group_from_weierstrass(int64_t a1, int64_t a2, int64_t a3, int64_t a4,
                                              int64_t a6, int64_t p, int D);
// The curve's formal group in the Fourier coordinate: log = sum a_n/n q^n.
FormalGroupData formal_group_from_eigenform(const EigenformData& e, int D);

// ---- f-sharp ------------------------------------------------------------------

// (1/p) sum_{n>=1} (a_n/n)(phi^2(q)^n - a_p phi(q)^n + p q^n) with
// phi(q) = q^p + p q', phi^2(q) = phi(q)^p + p((q')^p + p q''). The raw
// assembly over n <= D (exact rationals, no truncation).
MPoly<Rational> f_sharp_exact(const EigenformData& e, int D);

// The series with p-integrality checked on every complete coefficient
// (weighted degree <= D); non-integrality raises DivisionNotExact naming the
// monomial, as a diagnostic rather than a silent pass.
DeltaSeries f_sharp_series(const EigenformData& e, int N, int D);
DeltaSeries f_sharp_series(const EigenformData& e, const BaseRingPtr& base, int D);

// ---- delta-substitution ---------------------------------------------------------

// Substitute q -> q_image (a series over nparams * (order+1) target variables,
// layout level-major: [params of level 0][params of level 1]...), with the
// induced q^(k) -> delta^k(q_image) computed by the delta-laws. Truncates at
// joint degree <= bound of the requested kind; TruncationUnderflow when the
// source series is not complete that far.
MPoly<Rational> delta_substitute_terms(const DeltaSeries& s, const MPoly<Rational>& q_image,
                                       int nparams, int bound, TruncKind kind);

// One-parameter convenience keeping the DeltaSeries wrapper.
DeltaSeries delta_substitute(const DeltaSeries& s, const MPoly<Rational>& q_image, int bound,
                             TruncKind kind);

// Embed a series over (order+1) one-parameter variables into the j-th slot of
// an nparams-target variable set.
MPoly<Rational> embed_param(const MPoly<Rational>& a, int order, int nparams, int j);

KeepFn keep_plain_leq(int bound);
KeepFn keep_delta_leq(int bound, int nparams);

// Terms of the complete range, residues mod p^N, ordered by ascending
// delta-degree then exponent vector; residues that vanish mod p^N are omitted.
std::vector<std::pair<Exps, BigInt>> series_emission_order(const DeltaSeries& s);

}  // namespace arithjet
