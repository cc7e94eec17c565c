#include "arithjet/characters.hpp"
#include "arithjet/delta_ring.hpp"

#include <algorithm>
#include <numeric>

namespace arithjet {

BaseElem weight_character(const WeightPoly& w, const BaseElem& lambda) {
    if (!lambda.is_unit()) throw NotInvertible("weight character of a non-unit");
    BaseElem acc = lambda.ring()->one(lambda.prec());
    BaseElem cur = lambda;
    for (size_t i = 0; i < w.w.size(); ++i) {
        int64_t e = w.w[i];
        if (e > 0) acc = acc * cur.pow(static_cast<uint64_t>(e));
        if (e < 0) acc = acc * cur.inverse().pow(static_cast<uint64_t>(-e));
        if (i + 1 < w.w.size()) cur = cur.frobenius();
    }
    return acc;
}

int delta_degree(const Exps& m) {
    int d = 0;
    for (size_t i = 1; i < m.size(); ++i) d += m[i];
    return d;
}

int plain_degree(const Exps& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

int64_t weighted_degree(const Exps& m, int64_t p) {
    int64_t d = 0;
    int64_t w = 1;
    for (size_t i = 0; i < m.size(); ++i) {
        d += w * m[i];
        w *= p;
    }
    return d;
}

std::vector<std::string> series_var_names(int order) {
    std::vector<std::string> names;
    for (int k = 0; k <= order; ++k) {
        if (k == 0) names.push_back("q");
        else if (k <= 3) names.push_back("q" + std::string(static_cast<size_t>(k), '\''));
        else names.push_back("q^(" + std::to_string(k) + ")");
    }
    return names;
}

DeltaSeries psi_series(int64_t p, int N, int D) {
    if (D < 1) throw RangeError("psi_series needs D >= 1");
    DeltaSeries s;
    s.p = p;
    s.N = N;
    s.order = 1;
    s.terms = MPoly<Rational>(2);
    s.weight = WeightPoly{{-1, -1}};
    s.delta_complete = D;
    const BigInt pb(p);
    for (int n = 1; n <= D; ++n) {
        BigInt num = pb.pow(static_cast<uint64_t>(n - 1));
        if (n % 2 == 0) num = -num;
        Rational c(num, BigInt(n));
        int expect = n - 1 - BigInt(n).valuation(pb);
        if (c.valuation(pb) != expect || expect < 0)
            throw DivisionNotExact("psi coefficient valuation at n = " + std::to_string(n));
        Exps m = {static_cast<int32_t>(-p * n), static_cast<int32_t>(n)};
        s.terms.add_term(m, c);
    }
    return s;
}

DeltaSeries psi_series(const BaseRingPtr& base, int D) {
    if (base->f() != 1)
        throw UnsupportedBase("psi series is realized for q = p only (f = 1)");
    return psi_series(base->p(), base->prec(), D);
}

DeltaSeries f_partial_series(int64_t p, int N) {
    DeltaSeries s;
    s.p = p;
    s.N = N;
    s.order = 1;
    s.terms = MPoly<Rational>::constant(2, Rational(1));
    s.weight = WeightPoly{{-1, 1}};
    s.delta_complete = 1 << 20;
    s.plain_complete = 1 << 20;
    s.weighted_complete = 1 << 20;
    return s;
}

EigenformData eigenform_from_list(int64_t p, std::vector<BigInt> a_values) {
    EigenformData e;
    e.p = p;
    e.D = static_cast<int>(a_values.size());
    if (e.D < 1 || !a_values[0].is_one())
        throw RangeError("eigenform data needs a_1 = 1");
    if (e.D < p) throw RangeError("eigenform data must reach a_p");
    e.a.assign(1, BigInt(0));
    for (auto& v : a_values) e.a.push_back(v);
    for (int m = 2; m <= e.D; ++m)
        for (int n = 2; m * n <= e.D; ++n)
            if (std::gcd(m, n) == 1 &&
                e.a[static_cast<size_t>(m * n)] != e.a[static_cast<size_t>(m)] * e.a[static_cast<size_t>(n)])
                e.warnings.push_back("a_" + std::to_string(m * n) + " != a_" + std::to_string(m) +
                                     " * a_" + std::to_string(n));
    return e;
}

int64_t count_points_weierstrass(int64_t a1, int64_t a2, int64_t a3, int64_t a4, int64_t a6,
                                 int64_t ell) {
    auto md = [ell](int64_t v) { return ((v % ell) + ell) % ell; };
    int64_t count = 1;  // point at infinity
    for (int64_t x = 0; x < ell; ++x) {
        int64_t rhs = md(md(md(x * x) * x) + md(a2 * x * x) + md(a4 * x) + a6);
        for (int64_t y = 0; y < ell; ++y) {
            int64_t lhs = md(md(y * y) + md(a1 * x * y) + md(a3 * y));
            if (lhs == rhs) ++count;
        }
    }
    return count;
}

BigInt weierstrass_discriminant(int64_t a1, int64_t a2, int64_t a3, int64_t a4, int64_t a6) {
    BigInt b2 = BigInt(a1) * BigInt(a1) + BigInt(4) * BigInt(a2);
    BigInt b4 = BigInt(2) * BigInt(a4) + BigInt(a1) * BigInt(a3);
    BigInt b6 = BigInt(a3) * BigInt(a3) + BigInt(4) * BigInt(a6);
    BigInt b8 = BigInt(a1) * BigInt(a1) * BigInt(a6) + BigInt(4) * BigInt(a2) * BigInt(a6) -
                BigInt(a1) * BigInt(a3) * BigInt(a4) + BigInt(a2) * BigInt(a3) * BigInt(a3) -
                BigInt(a4) * BigInt(a4);
    return -b2 * b2 * b8 - BigInt(8) * b4 * b4 * b4 - BigInt(27) * b6 * b6 + BigInt(9) * b2 * b4 * b6;
}

EigenformData eigenform_from_curve(int64_t a1, int64_t a2, int64_t a3, int64_t a4, int64_t a6,
                                   int64_t p, int D) {
    BigInt disc = weierstrass_discriminant(a1, a2, a3, a4, a6);
    EigenformData e;
    e.p = p;
    e.D = D;
    e.a.assign(static_cast<size_t>(D) + 1, BigInt(0));
    e.a[1] = BigInt(1);
    for (int64_t ell = 2; ell <= D; ++ell) {
        bool prime = ell >= 2;
        for (int64_t d = 2; d * d <= ell; ++d)
            if (ell % d == 0) prime = false;
        if (!prime) continue;
        BigInt a_ell = BigInt(ell) + BigInt(1) - BigInt(count_points_weierstrass(a1, a2, a3, a4, a6, ell));
        bool good = !(disc % BigInt(ell)).is_zero();
        BigInt prev(1), cur = a_ell;
        int64_t power = ell;
        while (power <= D) {
            e.a[static_cast<size_t>(power)] = cur;
            if (power > D / ell) break;
            BigInt next = a_ell * cur - (good ? BigInt(ell) * prev : BigInt(0));
            prev = cur;
            cur = next;
            power *= ell;
        }
    }
    // multiplicative fill
    for (int n = 2; n <= D; ++n) {
        int64_t ell = 2;
        while (n % ell != 0) ++ell;
        int64_t pw = 1;
        int rest = n;
        while (rest % ell == 0) {
            rest /= ell;
            pw *= ell;
        }
        if (rest != 1)
            e.a[static_cast<size_t>(n)] = e.a[static_cast<size_t>(pw)] * e.a[static_cast<size_t>(rest)];
    }
    return e;
}

// ---- univariate series helpers (Laurent with explicit offset) ---------------

namespace {

struct LSeries {
    int off = 0;                // value = sum c[i] z^{off+i}
    std::vector<Rational> c;    // kept to a common absolute truncation degree
};

LSeries ls_trim(LSeries a) {
    size_t lead = 0;
    while (lead < a.c.size() && a.c[lead].is_zero()) ++lead;
    a.c.erase(a.c.begin(), a.c.begin() + static_cast<long>(lead));
    a.off += static_cast<int>(lead);
    return a;
}

// truncate so that no term has degree > T
LSeries ls_cap(LSeries a, int T) {
    while (!a.c.empty() && a.off + static_cast<int>(a.c.size()) - 1 > T) a.c.pop_back();
    return a;
}

LSeries ls_add(const LSeries& a, const LSeries& b, int T) {
    int off = std::min(a.off, b.off);
    LSeries r;
    r.off = off;
    int top = std::max(a.off + static_cast<int>(a.c.size()), b.off + static_cast<int>(b.c.size()));
    r.c.assign(static_cast<size_t>(top - off), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[static_cast<size_t>(a.off - off) + i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[static_cast<size_t>(b.off - off) + i] += b.c[i];
    return ls_cap(ls_trim(std::move(r)), T);
}

LSeries ls_mul(const LSeries& a, const LSeries& b, int T) {
    LSeries r;
    r.off = a.off + b.off;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (r.off + static_cast<int>(i + j) > T) break;
            r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return ls_cap(ls_trim(std::move(r)), T);
}

LSeries ls_scale(LSeries a, const Rational& s) {
    for (auto& v : a.c) v = v * s;
    return ls_trim(std::move(a));
}

// inverse of a series with unit leading coefficient
LSeries ls_inverse(const LSeries& a, int T) {
    LSeries t = ls_trim(a);
    if (t.c.empty()) throw std::domain_error("inverse of zero series");
    LSeries r;
    r.off = -t.off;
    int len = T - r.off + 1;
    if (len < 1) len = 1;
    r.c.assign(static_cast<size_t>(len), Rational(0));
    Rational lead_inv = Rational(1) / t.c[0];
    r.c[0] = lead_inv;
    for (size_t n = 1; n < r.c.size(); ++n) {
        Rational s(0);
        for (size_t k = 1; k <= n && k < t.c.size(); ++k) s += t.c[k] * r.c[n - k];
        r.c[n] = -s * lead_inv;
    }
    return ls_cap(ls_trim(std::move(r)), T);
}

LSeries ls_derivative(const LSeries& a) {
    LSeries r;
    r.off = a.off - 1;
    for (size_t i = 0; i < a.c.size(); ++i)
        r.c.push_back(a.c[i] * Rational(a.off + static_cast<int>(i)));
    return ls_trim(std::move(r));
}

std::vector<Rational> compose_trunc(const std::vector<Rational>& outer,
                                    const std::vector<Rational>& inner, int T) {
    // inner has zero constant term; Horner from the top
    std::vector<Rational> acc(1, Rational(0));
    auto mul_tr = [T](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        std::vector<Rational> r(std::min<size_t>(x.size() + y.size() - 1, static_cast<size_t>(T) + 1),
                                Rational(0));
        for (size_t i = 0; i < x.size() && i <= static_cast<size_t>(T); ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < y.size() && i + j <= static_cast<size_t>(T); ++j)
                r[i + j] += x[i] * y[j];
        }
        return r;
    };
    for (size_t k = outer.size(); k-- > 0;) {
        acc = mul_tr(acc, inner);
        if (acc.empty()) acc.assign(1, Rational(0));
        acc[0] += outer[k];  // valid Horner step because inner(0) = 0
        if (k == 0) break;
    }
    acc.resize(static_cast<size_t>(T) + 1, Rational(0));
    return acc;
}

std::vector<Rational> reversion(const std::vector<Rational>& l, int T) {
    // solve l(e(w)) = w with l = id + higher; iterate e <- id - g(e)
    std::vector<Rational> g = l;
    if (g.size() < 2 || g[1] != Rational(1) || !g[0].is_zero())
        throw RangeError("logarithm must be z + O(z^2)");
    g[1] = Rational(0);
    std::vector<Rational> e(static_cast<size_t>(T) + 1, Rational(0));
    if (T >= 1) e[1] = Rational(1);
    for (int it = 0; it < T; ++it) {
        std::vector<Rational> ge = compose_trunc(g, e, T);
        std::vector<Rational> next(static_cast<size_t>(T) + 1, Rational(0));
        if (T >= 1) next[1] = Rational(1);
        for (size_t i = 0; i < next.size() && i < ge.size(); ++i) next[i] = next[i] - ge[i];
        if (next == e) break;
        e = next;
    }
    return e;
}

}  // namespace

FormalGroupData formal_group_additive(int D) {
    FormalGroupData fg;
    fg.D = D;
    fg.log.assign(static_cast<size_t>(D) + 1, Rational(0));
    if (D >= 1) fg.log[1] = Rational(1);
    MPoly<Rational> z1 = MPoly<Rational>::variable(2, 0, Rational(1));
    MPoly<Rational> z2 = MPoly<Rational>::variable(2, 1, Rational(1));
    fg.law = z1 + z2;
    return fg;
}

FormalGroupData formal_group_from_log(std::vector<Rational> log, int D) {
    log.resize(static_cast<size_t>(D) + 1, Rational(0));
    if (!log[0].is_zero() || log[1] != Rational(1))
        throw RangeError("formal group logarithm must be z + O(z^2)");
    FormalGroupData fg;
    fg.D = D;
    fg.log = log;
    std::vector<Rational> e = reversion(log, D);
    MPoly<Rational> s(2);
    for (int k = 1; k <= D; ++k) {
        if (!log[static_cast<size_t>(k)].is_zero()) {
            s.add_term({static_cast<int32_t>(k), 0}, log[static_cast<size_t>(k)]);
            s.add_term({0, static_cast<int32_t>(k)}, log[static_cast<size_t>(k)]);
        }
    }
    KeepFn keep = keep_plain_leq(D);
    MPoly<Rational> law(2);
    MPoly<Rational> sp = MPoly<Rational>::constant(2, Rational(1));
    for (int k = 1; k <= D; ++k) {
        sp = sp.mul(s, &keep);
        if (!e[static_cast<size_t>(k)].is_zero()) law = law + sp.scale(e[static_cast<size_t>(k)]);
    }
    fg.law = law;
    return fg;
}

FormalGroupData formal_group_from_weierstrass(int64_t a1, int64_t a2, int64_t a3, int64_t a4,
                                              int64_t a6, int64_t p, int D) {
    BigInt disc = weierstrass_discriminant(a1, a2, a3, a4, a6);
    if ((disc % BigInt(p)).is_zero())
        throw BadReduction("discriminant vanishes mod p = " + std::to_string(p));
    const int T = D + 4;
    // w(z) = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3
    LSeries z{1, {Rational(1)}};
    LSeries w{3, {Rational(1)}};
    for (int it = 0; it < T; ++it) {
        LSeries w2 = ls_mul(w, w, T);
        LSeries w3 = ls_mul(w2, w, T);
        LSeries nw{3, {Rational(1)}};
        nw = ls_add(nw, ls_scale(ls_mul(z, w, T), Rational(a1)), T);
        nw = ls_add(nw, ls_scale(ls_mul(ls_mul(z, z, T), w, T), Rational(a2)), T);
        nw = ls_add(nw, ls_scale(w2, Rational(a3)), T);
        nw = ls_add(nw, ls_scale(ls_mul(z, w2, T), Rational(a4)), T);
        nw = ls_add(nw, ls_scale(w3, Rational(a6)), T);
        w = nw;
    }
    LSeries winv = ls_inverse(w, T);
    LSeries x = ls_mul(z, winv, T);                 // z/w
    LSeries y = ls_scale(winv, Rational(-1));       // -1/w
    LSeries num = ls_derivative(x);
    LSeries den = ls_add(ls_add(ls_scale(y, Rational(2)), ls_scale(x, Rational(a1)), T),
                         LSeries{0, {Rational(a3)}}, T);
    LSeries omega = ls_mul(num, ls_inverse(den, T), T);
    if (omega.off != 0 || omega.c.empty() || omega.c[0] != Rational(1))
        throw std::logic_error("invariant differential does not start at 1");
    std::vector<Rational> log(static_cast<size_t>(D) + 1, Rational(0));
    for (int k = 1; k <= D; ++k) {
        int idx = (k - 1) - omega.off;
        Rational ck = (idx >= 0 && idx < static_cast<int>(omega.c.size()))
                          ? omega.c[static_cast<size_t>(idx)]
                          : Rational(0);
        log[static_cast<size_t>(k)] = ck / Rational(k);
    }
    FormalGroupData fg = formal_group_from_log(std::move(log), D);
    for (const auto& [m, c] : fg.law.terms())
        if (!c.is_integer())
            throw std::logic_error("Weierstrass formal group law must be integral");
    return fg;
}

FormalGroupData formal_group_from_eigenform(const EigenformData& e, int D) {
    if (e.D < D) throw RangeError("eigenform data shorter than requested degree");
    std::vector<Rational> log(static_cast<size_t>(D) + 1, Rational(0));
    for (int k = 1; k <= D; ++k)
        log[static_cast<size_t>(k)] = Rational(e.a[static_cast<size_t>(k)], BigInt(k));
    FormalGroupData fg = formal_group_from_log(std::move(log), D);
    for (const auto& [m, c] : fg.law.terms())
        if (!c.p_integral(BigInt(e.p)))
            throw DivisionNotExact("eigenform formal group law not p-integral");
    return fg;
}

MPoly<Rational> f_sharp_exact(const EigenformData& e, int D) {
    if (e.D < D) throw RangeError("eigenform data shorter than the requested degree");
    const int64_t p = e.p;
    MPoly<Rational> q = MPoly<Rational>::variable(3, 0, Rational(1));
    MPoly<Rational> q1 = MPoly<Rational>::variable(3, 1, Rational(1));
    MPoly<Rational> q2 = MPoly<Rational>::variable(3, 2, Rational(1));
    MPoly<Rational> phiq = q.pow(static_cast<uint64_t>(p)) + q1.scale(Rational(p));
    MPoly<Rational> phi2q = phiq.pow(static_cast<uint64_t>(p)) +
                            (q1.pow(static_cast<uint64_t>(p)) + q2.scale(Rational(p))).scale(Rational(p));
    MPoly<Rational> acc(3);
    MPoly<Rational> A = MPoly<Rational>::constant(3, Rational(1));  // phi2q^n
    MPoly<Rational> B = A;                                          // phiq^n
    const Rational ap(e.ap());
    for (int n = 1; n <= D; ++n) {
        A = A * phi2q;
        B = B * phiq;
        MPoly<Rational> term = A - B.scale(ap);
        term.add_term({static_cast<int32_t>(n), 0, 0}, Rational(p));
        Rational factor = Rational(e.a[static_cast<size_t>(n)], BigInt(p) * BigInt(n));
        acc = acc + term.scale(factor);
    }
    return acc;
}

DeltaSeries f_sharp_series(const EigenformData& e, int N, int D) {
    DeltaSeries s;
    s.p = e.p;
    s.N = N;
    s.order = 2;
    s.terms = f_sharp_exact(e, D);
    s.plain_complete = D;
    s.weighted_complete = D;
    const BigInt pb(e.p);
    for (const auto& [m, c] : s.terms.terms()) {
        if (weighted_degree(m, e.p) > D) continue;
        if (!c.p_integral(pb)) {
            auto names = series_var_names(2);
            std::string mono;
            for (size_t i = 0; i < m.size(); ++i)
                if (m[i]) mono += names[i] + "^" + std::to_string(m[i]) + " ";
            throw DivisionNotExact("f-sharp coefficient of " + mono + "is " + c.to_string() +
                                   " (v_p < 0)");
        }
    }
    return s;
}

DeltaSeries f_sharp_series(const EigenformData& e, const BaseRingPtr& base, int D) {
    if (base->f() != 1)
        throw UnsupportedBase("f-sharp series is realized for q = p only (f = 1)");
    if (base->p() != e.p) throw RangeError("eigenform prime differs from base prime");
    return f_sharp_series(e, base->prec(), D);
}

std::vector<std::pair<Exps, BigInt>> series_emission_order(const DeltaSeries& s) {
    const BigInt pb(s.p);
    std::vector<std::pair<Exps, BigInt>> out;
    for (const auto& [m, c] : s.terms.terms()) {
        if (s.weighted_complete && weighted_degree(m, s.p) > *s.weighted_complete) continue;
        BigInt r = c.residue_mod(pb, s.N);
        if (!r.is_zero()) out.emplace_back(m, std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int da = delta_degree(a.first), db = delta_degree(b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    return out;
}

KeepFn keep_plain_leq(int bound) {
    return [bound](const Exps& m) { return plain_degree(m) <= bound; };
}

KeepFn keep_delta_leq(int bound, int nparams) {
    return [bound, nparams](const Exps& m) {
        int d = 0;
        for (size_t i = static_cast<size_t>(nparams); i < m.size(); ++i) d += m[i];
        return d <= bound;
    };
}

MPoly<Rational> embed_param(const MPoly<Rational>& a, int order, int nparams, int j) {
    MPoly<Rational> r(nparams * (order + 1));
    for (const auto& [m, c] : a.terms()) {
        Exps e(static_cast<size_t>(nparams * (order + 1)), 0);
        for (size_t k = 0; k < m.size(); ++k)
            e[k * static_cast<size_t>(nparams) + static_cast<size_t>(j)] = m[k];
        r.add_term(e, c);
    }
    return r;
}

MPoly<Rational> delta_substitute_terms(const DeltaSeries& s, const MPoly<Rational>& q_image,
                                       int nparams, int bound, TruncKind kind) {
    if (kind == TruncKind::Delta) {
        if (!s.delta_complete || *s.delta_complete < bound)
            throw TruncationUnderflow("series not delta-complete to degree " + std::to_string(bound));
    } else {
        if (!s.plain_complete || *s.plain_complete < bound)
            throw TruncationUnderflow("series not plain-complete to degree " + std::to_string(bound));
    }
    const int order = s.order;
    const int nt = nparams * (order + 1);
    if (q_image.nvars() != nt) throw RangeError("image variable count mismatch");

    KeepFn keep = (kind == TruncKind::Plain) ? keep_plain_leq(bound) : keep_delta_leq(bound, nparams);
    std::vector<int> succ(static_cast<size_t>(nt), -1);
    for (int k = 0; k < order; ++k)
        for (int j = 0; j < nparams; ++j)
            succ[static_cast<size_t>(k * nparams + j)] = (k + 1) * nparams + j;
    auto phi_images = phi_var_images(nt, succ, s.p, static_cast<uint64_t>(s.p), Rational(1));
    std::function<Rational(const Rational&)> id;

    std::vector<MPoly<Rational>> images;
    images.push_back(q_image);
    for (int k = 1; k <= order; ++k)
        images.push_back(poly_delta(images.back(), phi_images, id, s.p,
                                    static_cast<uint64_t>(s.p), &keep));

    // restrict the source to monomials complete at the requested joint degree
    MPoly<Rational> source(s.terms.nvars());
    for (const auto& [m, c] : s.terms.terms()) {
        int d = (kind == TruncKind::Plain) ? plain_degree(m) : delta_degree(m);
        if (d <= bound) source.add_term(m, c);
    }

    std::function<Rational(const Rational&)> inv = [](const Rational& c) { return Rational(1) / c; };
    return source.substitute(images, &keep, &inv);
}

DeltaSeries delta_substitute(const DeltaSeries& s, const MPoly<Rational>& q_image, int bound,
                             TruncKind kind) {
    DeltaSeries out;
    out.p = s.p;
    out.N = s.N;
    out.order = s.order;
    out.weight = s.weight;
    out.terms = delta_substitute_terms(s, q_image, 1, bound, kind);
    if (kind == TruncKind::Delta) out.delta_complete = bound;
    else out.plain_complete = bound;
    return out;
}

}  // namespace arithjet
