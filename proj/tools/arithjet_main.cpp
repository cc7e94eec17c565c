#include "arithjet/characters.hpp"
#include "arithjet/graded.hpp"
#include "arithjet/jet.hpp"
#include "arithjet/json_io.hpp"
#include "arithjet/verify.hpp"
#include "arithjet/witt.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace aj = arithjet;

namespace {

std::vector<aj::BigInt> parse_bigint_csv(const std::string& s) {
    std::vector<aj::BigInt> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.emplace_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.emplace_back(cur);
    return out;
}

std::string coords_text(const std::vector<aj::BigInt>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

void reduce_mod(std::vector<aj::BigInt>& v, int64_t p, int N) {
    if (N <= 0) return;
    aj::BigInt pk = aj::BigInt(p).pow(static_cast<uint64_t>(N));
    for (auto& c : v) c = c.mod(pk);
}

struct GlobalOpts {
    std::string format = "text";
    std::string cache_dir;
};

void emit(const GlobalOpts& g, const aj::njson& j, const std::string& text) {
    if (g.format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text << "\n";
}

aj::BaseElem graded_elem_from_json(const aj::BaseRingPtr& ring, const aj::njson& v) {
    if (v.is_string()) return ring->from_bigint(aj::BigInt(v.get<std::string>()));
    std::vector<aj::BigInt> coeffs;
    for (const auto& c : v) coeffs.emplace_back(c.get<std::string>());
    return ring->from_coeffs(std::move(coeffs));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pi-typical Witt vectors, arithmetic jet spaces and delta-characters"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cache-dir", g.cache_dir,
                   "universal-polynomial cache directory (overrides ARITHJET_CACHE_DIR)");

    int64_t p = 0;
    int f = 1, n = 1, N = 0, D = 12, m = 4, max_n = 3, max_order = 2;
    uint64_t seed = 20260808;
    size_t samples = 200;
    bool exhaustive = false;
    std::string coords, xs, ys, input, curve, eigen, elem_json, suite = "all", list = "all";
    int64_t h_int = 1;

    // ---- witt ---------------------------------------------------------------
    auto* witt = app.add_subcommand("witt", "Witt vector operations");
    witt->require_subcommand(1);
    auto add_pfn = [&](CLI::App* cmd, bool need_n = true) {
        cmd->add_option("--p", p, "prime")->required();
        cmd->add_option("--f", f, "residue degree (q = p^f)");
        if (need_n) cmd->add_option("--n", n, "truncation order")->required();
        cmd->add_option("--N", N, "reduce output mod p^N (0 = exact)");
        cmd->add_option("--max-n", max_n, "generation bound for the truncation order");
    };

    auto* wghost = witt->add_subcommand("ghost", "ghost components of a Witt vector");
    add_pfn(wghost);
    wghost->add_option("--coords", coords, "comma-separated coordinates")->required();
    wghost->callback([&] {
        auto v = parse_bigint_csv(coords);
        if (static_cast<int>(v.size()) != n + 1) throw aj::RangeError("need n+1 coordinates");
        uint64_t q = 1;
        for (int i = 0; i < f; ++i) q *= static_cast<uint64_t>(p);
        aj::WittVec<aj::BigInt> wv{v};
        auto w = aj::ghost(p, q, wv, aj::BigInt(0));
        reduce_mod(w, p, N);
        aj::njson j;
        aj::njson arr = aj::njson::array();
        for (const auto& c : w) arr.push_back(c.to_string());
        j["ghost"] = arr;
        emit(g, j, coords_text(w));
    });

    for (const char* op : {"add", "mul"}) {
        auto* cmd = witt->add_subcommand(op, std::string("witt ") + op);
        add_pfn(cmd);
        cmd->add_option("--x", xs, "first operand coords")->required();
        cmd->add_option("--y", ys, "second operand coords")->required();
        std::string opname = op;
        cmd->callback([&, opname] {
            auto P = aj::witt_polys(p, f, n, g.cache_dir, max_n);
            aj::WittVec<aj::BigInt> a{parse_bigint_csv(xs)}, b{parse_bigint_csv(ys)};
            if (a.order() != n || b.order() != n) throw aj::RangeError("need n+1 coordinates");
            auto r = opname == "add" ? aj::witt_add(*P, a, b, aj::BigInt(0))
                                     : aj::witt_mul(*P, a, b, aj::BigInt(0));
            reduce_mod(r.x, p, N);
            aj::njson arr = aj::njson::array();
            for (const auto& c : r.x) arr.push_back(c.to_string());
            emit(g, aj::njson{{opname, arr}}, coords_text(r.x));
        });
    }

    auto* wfrob = witt->add_subcommand("frob", "Witt Frobenius F: W_n -> W_{n-1}");
    add_pfn(wfrob);
    wfrob->add_option("--coords", coords, "comma-separated coordinates")->required();
    wfrob->callback([&] {
        auto P = aj::witt_polys(p, f, n, g.cache_dir, max_n);
        aj::WittVec<aj::BigInt> a{parse_bigint_csv(coords)};
        if (a.order() != n) throw aj::RangeError("need n+1 coordinates");
        auto r = aj::frobenius_w(*P, a, aj::BigInt(0));
        reduce_mod(r.x, p, N);
        aj::njson arr = aj::njson::array();
        for (const auto& c : r.x) arr.push_back(c.to_string());
        emit(g, aj::njson{{"frob", arr}}, coords_text(r.x));
    });

    auto* wpolys = witt->add_subcommand("polys", "universal Witt polynomials");
    add_pfn(wpolys);
    wpolys->add_option("--list", list, "sum|prod|neg|frob|delta|all");
    wpolys->callback([&] {
        auto P = aj::witt_polys(p, f, n, g.cache_dir, max_n);
        if (g.format == "json") {
            aj::njson j;
            auto dump = [&](const char* name, const std::vector<aj::MPoly<aj::BigInt>>& ps) {
                if (list != "all" && list != name) return;
                aj::njson arr = aj::njson::array();
                for (const auto& poly : ps) arr.push_back(aj::int_poly_to_json(poly));
                j[name] = arr;
            };
            dump("sum", P->sum);
            dump("prod", P->prod);
            dump("neg", P->neg);
            dump("frob", P->frob);
            dump("delta", P->wdelta);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << aj::witt_polys_to_text(*P);
        }
    });

    // ---- delta --------------------------------------------------------------
    auto* delta = app.add_subcommand("delta", "pi-derivations");
    delta->require_subcommand(1);
    auto* dcpi = delta->add_subcommand("cpi", "the polynomial C_pi(X,Y)");
    dcpi->add_option("--p", p, "prime")->required();
    dcpi->add_option("--f", f, "residue degree");
    dcpi->callback([&] {
        auto c = aj::c_pi_poly(p, f);
        emit(g, aj::int_poly_to_json(c), c.to_string({"X", "Y"}));
    });

    auto* dcheck = delta->add_subcommand("check", "delta-law verification on the base ring");
    dcheck->add_option("--p", p, "prime")->required();
    dcheck->add_option("--f", f, "residue degree");
    dcheck->add_option("--N", N, "precision")->required();
    dcheck->add_option("--samples", samples, "sample count");
    dcheck->add_option("--seed", seed, "RNG seed");
    dcheck->add_flag("--exhaustive", exhaustive, "check every pair (rings with at most 4096 elements)");
    dcheck->callback([&] {
        auto ring = aj::BaseRing::make(p, f, N);
        auto d = aj::base_pderivation(ring);
        auto ops = aj::default_ring_ops(ring->zero());
        ops.show = [](const aj::BaseElem& e) { return e.to_string(); };
        aj::DeltaAxiomReport rep;
        if (exhaustive) {
            int64_t count = 1;
            for (int i = 0; i < f * N; ++i) {
                count *= p;
                if (count > 4096) throw aj::BoundExceeded("ring too large for exhaustive checking");
            }
            std::vector<aj::BaseElem> elems;
            int64_t pn = 1;
            for (int i = 0; i < N; ++i) pn *= p;
            for (int64_t code = 0; code < count; ++code) {
                std::vector<aj::BigInt> c;
                int64_t v = code;
                for (int i = 0; i < f; ++i) {
                    c.emplace_back(v % pn);
                    v /= pn;
                }
                elems.push_back(ring->from_coeffs(std::move(c)));
            }
            rep = aj::check_delta_axioms_exhaustive(d, ops, ops, elems);
        } else {
            aj::Rng rng(seed);
            rep = aj::check_delta_axioms(d, ops, ops, [&] { return ring->random(rng); }, samples);
        }
        std::cout << aj::delta_axiom_report_to_json(rep).dump(2) << "\n";
        if (!rep.pass()) throw aj::AxiomViolation("delta laws violated");
    });

    // ---- jet ----------------------------------------------------------------
    auto* jet = app.add_subcommand("jet", "arithmetic jet spaces");
    jet->require_subcommand(1);
    auto* jemit = jet->add_subcommand("emit", "jet presentation of an affine presentation");
    jemit->add_option("--p", p, "prime")->required();
    jemit->add_option("--f", f, "residue degree");
    jemit->add_option("--n", n, "jet order")->required();
    jemit->add_option("--input", input, "presentation JSON {vars, relations}; stdin when omitted");
    jemit->add_option("--max-order", max_order, "jet order bound");
    jemit->callback([&] {
        std::string text = input;
        if (text.empty()) {
            std::string line;
            while (std::getline(std::cin, line)) text += line;
        }
        auto A = aj::affine_presentation_from_json(aj::njson::parse(text), p, f);
        std::function<aj::BigInt(const aj::BigInt&)> idphi;
        auto J = aj::jet_presentation(A, n, aj::BigInt(1), idphi, max_order);
        aj::njson j = aj::jet_presentation_to_json(J);
        std::string human = "vars:";
        for (const auto& v : J.vars) human += " " + v;
        human += "\nrelations:\n";
        for (const auto& r : J.relations) human += "  " + r.to_string(J.vars) + "\n";
        emit(g, j, human);
    });

    auto* jkummer = jet->add_subcommand("kummer", "solved jets of S[t]/(t^m - h)");
    jkummer->add_option("--p", p, "prime")->required();
    jkummer->add_option("--f", f, "residue degree");
    jkummer->add_option("--N", N, "precision")->required();
    jkummer->add_option("--m", m, "cover degree (coprime to p)");
    jkummer->add_option("--n", n, "jet order")->required();
    jkummer->callback([&] {
        auto K = aj::kummer_jet(p, f, N, m, n);
        aj::njson j = aj::kummer_jet_to_json(K);
        j["verified"] = aj::kummer_verify(K);
        std::string human = "relation: " + K.relation.to_string(K.vars) + "\n";
        for (size_t k = 0; k < K.solved.size(); ++k)
            human += aj::prolonged_name("t", static_cast<int>(k) + 1) + " = " +
                     K.solved[k].to_string(K.vars) + "\n";
        emit(g, j, human);
    });

    // ---- series ---------------------------------------------------------------
    auto* series = app.add_subcommand("series", "delta-Fourier expansions");
    series->require_subcommand(1);
    auto series_text = [](const aj::DeltaSeries& s) {
        auto names = aj::series_var_names(s.order);
        std::string out;
        for (const auto& [mm, c] : aj::series_emission_order(s)) {
            std::string mono;
            for (size_t i = 0; i < mm.size(); ++i) {
                if (!mm[i]) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (mm[i] != 1) mono += "^" + std::to_string(mm[i]);
            }
            if (mono.empty()) mono = "1";
            out += c.to_string() + " * " + mono + "\n";
        }
        return out;
    };

    auto* spsi = series->add_subcommand("psi", "Psi = (1/p) log phi(q)/q^p");
    spsi->add_option("--p", p, "prime")->required();
    spsi->add_option("--N", N, "precision")->required();
    spsi->add_option("--D", D, "series truncation order");
    spsi->callback([&] {
        auto s = aj::psi_series(p, N, D);
        emit(g, aj::delta_series_to_json(s), series_text(s));
    });

    auto* spartial = series->add_subcommand("fpartial", "lift of the Hasse invariant expansion");
    spartial->add_option("--p", p, "prime")->required();
    spartial->add_option("--N", N, "precision")->required();
    spartial->callback([&] {
        auto s = aj::f_partial_series(p, N);
        emit(g, aj::delta_series_to_json(s), series_text(s));
    });

    auto* ssharp = series->add_subcommand("fsharp", "order-2 series from Hecke eigenvalue data");
    ssharp->add_option("--p,--prime", p, "prime")->required();
    ssharp->add_option("--N", N, "precision")->required();
    ssharp->add_option("--D", D, "q-degree truncation");
    ssharp->add_option("--curve", curve, "a1,a2,a3,a4,a6 Weierstrass coefficients");
    ssharp->add_option("--eigen", eigen, "eigenvalues a_1..a_D, comma-separated or a JSON array");
    ssharp->callback([&] {
        aj::EigenformData e;
        if (!curve.empty()) {
            auto a = parse_bigint_csv(curve);
            if (a.size() != 5) throw aj::RangeError("curve needs five coefficients");
            e = aj::eigenform_from_curve(a[0].to_int64(), a[1].to_int64(), a[2].to_int64(),
                                         a[3].to_int64(), a[4].to_int64(), p, D);
        } else if (!eigen.empty()) {
            std::vector<aj::BigInt> values;
            if (eigen.front() == '[') {
                for (const auto& v : aj::njson::parse(eigen))
                    values.emplace_back(v.is_string() ? v.get<std::string>()
                                                      : std::to_string(v.get<int64_t>()));
            } else {
                values = parse_bigint_csv(eigen);
            }
            e = aj::eigenform_from_list(p, std::move(values));
            if (e.D < D) throw aj::RangeError("need eigenvalues up to D");
        } else {
            throw aj::RangeError("fsharp needs --curve or --eigen");
        }
        auto s = aj::f_sharp_series(e, N, D);
        aj::njson j = aj::delta_series_to_json(s);
        if (!e.warnings.empty()) j["warnings"] = e.warnings;
        emit(g, j, series_text(s));
    });

    // ---- graded ---------------------------------------------------------------
    auto* graded = app.add_subcommand("graded", "Kummer algebra decomposition");
    graded->require_subcommand(1);
    auto add_graded_opts = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "prime")->required();
        cmd->add_option("--f", f, "residue degree (q = p^f)");
        cmd->add_option("--N", N, "precision")->required();
        cmd->add_option("--hasse", h_int, "the unit h with t^{q-1} = h");
        cmd->add_option("--elem", elem_json, "element JSON {coeffs: {r: value}}")->required();
    };
    auto parse_algebra_elem = [&](const aj::BaseRingPtr& ring, aj::KummerAlgebra& alg) {
        auto j = aj::njson::parse(elem_json);
        std::map<int, aj::BaseElem> comps;
        for (const auto& [key, val] : j.at("coeffs").items())
            comps.emplace(std::stoi(key), graded_elem_from_json(ring, val));
        return alg.from_components(comps);
    };

    auto* gdec = graded->add_subcommand("decompose", "tau graded decomposition");
    add_graded_opts(gdec);
    gdec->callback([&] {
        auto ring = aj::BaseRing::make(p, f, N);
        aj::BaseElem h = ring->from_int(h_int);
        aj::KummerAlgebra alg(ring, h, h.inverse());
        auto x = parse_algebra_elem(ring, alg);
        auto dec = alg.tau_decompose(x);
        aj::njson comps = aj::njson::object(), weights = aj::njson::object();
        std::string human;
        for (const auto& [r, c] : dec.components) {
            aj::njson arr = aj::njson::array();
            for (const auto& cc : c.coeffs()) arr.push_back(cc.to_string());
            comps[std::to_string(r)] = arr;
            int w = ((-r) % alg.m() + alg.m()) % alg.m();
            weights[std::to_string(r)] = -r;
            human += "t^" + std::to_string(r) + ": " + c.to_string() + "  (weight " +
                     std::to_string(w) + " mod " + std::to_string(alg.m()) + ")\n";
        }
        emit(g, aj::njson{{"components", comps}, {"weights", weights}}, human);
    });

    auto* geig = graded->add_subcommand("eigenweight", "diamond eigenweight");
    add_graded_opts(geig);
    geig->callback([&] {
        auto ring = aj::BaseRing::make(p, f, N);
        aj::BaseElem h = ring->from_int(h_int);
        aj::KummerAlgebra alg(ring, h, h.inverse());
        auto x = parse_algebra_elem(ring, alg);
        auto eig = alg.eigenweight(x);
        aj::njson j;
        std::string human;
        if (eig.weight) {
            j["weight"] = *eig.weight;
            human = "k' = " + std::to_string(*eig.weight) + " mod " + std::to_string(alg.m());
        } else {
            j["not_eigen"] = true;
            aj::njson occ = aj::njson::array();
            human = "NotEigen, occupied pieces:";
            for (int r : eig.occupied) {
                occ.push_back(r);
                human += " " + std::to_string(r);
            }
            j["occupied"] = occ;
        }
        emit(g, j, human);
    });

    // ---- verify ----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--suite", suite, "all|witt|delta|jet|series|graded");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--samples", samples, "samples per property");
    verify->callback([&] {
        aj::VerifyOptions opt;
        opt.seed = seed;
        opt.samples = samples;
        opt.cache_dir = g.cache_dir;
        auto report = aj::run_verify({suite}, opt);
        std::cout << report.dump(2) << "\n";
        if (!aj::verify_report_pass(report)) throw aj::AxiomViolation("verification failed");
    });

    // let --format / --cache-dir appear after the subcommand as well
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (auto* sub : a->get_subcommands([](const CLI::App*) { return true; }))
            enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
