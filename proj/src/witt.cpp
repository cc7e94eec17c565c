#include "arithjet/witt.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include <sys/stat.h>
#include <unistd.h>

namespace arithjet {

MPoly<BigInt> ghost_poly(int nvars, int var_offset, int i, int64_t p, uint64_t q) {
    MPoly<BigInt> w(nvars);
    BigInt pj(1);
    for (int j = 0; j <= i; ++j) {
        uint64_t e = 1;
        for (int k = 0; k < i - j; ++k) e *= q;
        Exps m(static_cast<size_t>(nvars), 0);
        m[static_cast<size_t>(var_offset + j)] = static_cast<int32_t>(e);
        w.add_term(m, pj);
        pj = pj * BigInt(p);
    }
    return w;
}

namespace {

// Solve w_i(u_0..u_i) = target_i for u_i by peeling the top coordinate and
// dividing by p^i; integrality of the solve is asserted, never patched.
std::vector<MPoly<BigInt>> solve_ghost_system(const std::vector<MPoly<BigInt>>& targets,
                                              int64_t p, uint64_t q) {
    std::vector<MPoly<BigInt>> u;
    for (size_t i = 0; i < targets.size(); ++i) {
        MPoly<BigInt> acc = targets[i];
        BigInt pj(1);
        for (size_t j = 0; j < i; ++j) {
            uint64_t e = 1;
            for (size_t k = 0; k < i - j; ++k) e *= q;
            acc = acc - u[j].pow(e).scale(pj);
            pj = pj * BigInt(p);
        }
        u.push_back(poly_exact_div_p(acc, p, static_cast<int>(i)));
    }
    return u;
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void write_poly_list(std::ostream& os, const char* name, const std::vector<MPoly<BigInt>>& list) {
    os << "polys " << name << " " << list.size() << "\n";
    for (const auto& poly : list) {
        os << "poly " << poly.term_count() << "\n";
        for (const auto& [m, c] : poly.terms()) {
            for (auto e : m) os << e << " ";
            os << c << "\n";
        }
    }
}

bool read_poly_list(std::istream& is, const char* name, int nvars, std::vector<MPoly<BigInt>>& out) {
    std::string kw, got;
    size_t count = 0;
    if (!(is >> kw >> got >> count) || kw != "polys" || got != name) return false;
    out.clear();
    for (size_t k = 0; k < count; ++k) {
        size_t terms = 0;
        if (!(is >> kw >> terms) || kw != "poly") return false;
        MPoly<BigInt> poly(nvars);
        for (size_t t = 0; t < terms; ++t) {
            Exps m(static_cast<size_t>(nvars));
            for (auto& e : m)
                if (!(is >> e)) return false;
            std::string coeff;
            if (!(is >> coeff)) return false;
            poly.add_term(m, BigInt(coeff));
        }
        out.push_back(std::move(poly));
    }
    return true;
}

}  // namespace

WittPolysPtr generate_witt_polys(int64_t p, int f, int n) {
    auto out = std::make_shared<WittPolys>();
    out->p = p;
    out->f = f;
    out->n = n;
    out->q = 1;
    for (int i = 0; i < f; ++i) out->q *= static_cast<uint64_t>(p);
    const int nv2 = 2 * (n + 1);
    const int nv1 = n + 1;

    std::vector<MPoly<BigInt>> sum_t, prod_t, neg_t, frob_t, delta_t;
    for (int i = 0; i <= n; ++i) {
        MPoly<BigInt> wx = ghost_poly(nv2, 0, i, p, out->q);
        MPoly<BigInt> wy = ghost_poly(nv2, n + 1, i, p, out->q);
        sum_t.push_back(wx + wy);
        prod_t.push_back(wx * wy);
        neg_t.push_back(-ghost_poly(nv1, 0, i, p, out->q));
    }
    for (int i = 0; i < n; ++i) {
        frob_t.push_back(ghost_poly(nv1, 0, i + 1, p, out->q));
        // (w_{i+1} - w_i^q)/p is integral already; asserted by the division
        delta_t.push_back(
            poly_exact_div_p(ghost_poly(nv1, 0, i + 1, p, out->q) -
                                 ghost_poly(nv1, 0, i, p, out->q).pow(out->q),
                             p, 1));
    }
    out->sum = solve_ghost_system(sum_t, p, out->q);
    out->prod = solve_ghost_system(prod_t, p, out->q);
    out->neg = solve_ghost_system(neg_t, p, out->q);
    out->frob = solve_ghost_system(frob_t, p, out->q);
    out->wdelta = solve_ghost_system(delta_t, p, out->q);
    return out;
}

std::string witt_polys_to_text(const WittPolys& polys) {
    std::ostringstream os;
    os << "arithjet-witt v1\n";
    os << "p " << polys.p << "\nf " << polys.f << "\nn " << polys.n << "\n";
    write_poly_list(os, "sum", polys.sum);
    write_poly_list(os, "prod", polys.prod);
    write_poly_list(os, "neg", polys.neg);
    write_poly_list(os, "frob", polys.frob);
    write_poly_list(os, "delta", polys.wdelta);
    std::string body = os.str();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(body)));
    return body + "checksum " + buf + "\n";
}

WittPolysPtr witt_polys_from_text(const std::string& text) {
    size_t pos = text.rfind("checksum ");
    if (pos == std::string::npos) return nullptr;
    std::string body = text.substr(0, pos);
    std::string tail = text.substr(pos + 9);
    while (!tail.empty() && (tail.back() == '\n' || tail.back() == ' ')) tail.pop_back();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(body)));
    if (tail != buf) return nullptr;

    std::istringstream is(body);
    std::string magic, version;
    if (!(is >> magic >> version) || magic != "arithjet-witt" || version != "v1") return nullptr;
    auto out = std::make_shared<WittPolys>();
    std::string kw;
    if (!(is >> kw >> out->p) || kw != "p") return nullptr;
    if (!(is >> kw >> out->f) || kw != "f") return nullptr;
    if (!(is >> kw >> out->n) || kw != "n") return nullptr;
    out->q = 1;
    for (int i = 0; i < out->f; ++i) out->q *= static_cast<uint64_t>(out->p);
    const int nv2 = 2 * (out->n + 1);
    const int nv1 = out->n + 1;
    try {
        if (!read_poly_list(is, "sum", nv2, out->sum)) return nullptr;
        if (!read_poly_list(is, "prod", nv2, out->prod)) return nullptr;
        if (!read_poly_list(is, "neg", nv1, out->neg)) return nullptr;
        if (!read_poly_list(is, "frob", nv1, out->frob)) return nullptr;
        if (!read_poly_list(is, "delta", nv1, out->wdelta)) return nullptr;
    } catch (const std::exception&) {
        return nullptr;
    }
    return out;
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("ARITHJET_CACHE_DIR")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return std::string(xdg) + "/arithjet";
    if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/arithjet";
    return "./.arithjet-cache";
}

std::string witt_cache_path(const std::string& dir, int64_t p, int f, int n) {
    std::ostringstream os;
    os << dir << "/witt_p" << p << "_f" << f << "_n" << n << ".txt";
    return os.str();
}

namespace {

void ensure_dir(const std::string& dir) {
    std::string cur;
    for (size_t i = 0; i <= dir.size(); ++i) {
        if (i == dir.size() || dir[i] == '/') {
            if (!cur.empty() && cur != "/") ::mkdir(cur.c_str(), 0755);
        }
        if (i < dir.size()) cur.push_back(dir[i]);
    }
}

std::mutex cache_mutex;
std::map<std::string, WittPolysPtr> memory_cache;

}  // namespace

WittPolysPtr witt_polys(int64_t p, int f, int n, const std::string& cache_dir, int max_n) {
    if (n > max_n)
        throw BoundExceeded("witt order n = " + std::to_string(n) + " > bound " + std::to_string(max_n));
    uint64_t q = 1;
    for (int i = 0; i < f; ++i) q *= static_cast<uint64_t>(p);
    uint64_t qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    if (qn > 1024)
        throw BoundExceeded("q^n = " + std::to_string(qn) + " beyond the feasible monomial budget");

    std::string dir = cache_dir.empty() ? default_cache_dir() : cache_dir;
    std::string key = witt_cache_path(dir, p, f, n);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = memory_cache.find(key);
        if (it != memory_cache.end()) return it->second;
    }

    WittPolysPtr polys;
    {
        std::ifstream in(key);
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            polys = witt_polys_from_text(ss.str());
            if (polys && (polys->p != p || polys->f != f || polys->n != n)) polys = nullptr;
        }
    }
    if (!polys) {
        polys = generate_witt_polys(p, f, n);
        ensure_dir(dir);
        std::string tmp = key + ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp);
            out << witt_polys_to_text(*polys);
        }
        ::rename(tmp.c_str(), key.c_str());
    }
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        memory_cache.emplace(key, polys);
    }
    return polys;
}

}  // namespace arithjet
