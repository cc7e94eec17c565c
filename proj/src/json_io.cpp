#include "arithjet/json_io.hpp"

namespace arithjet {

njson base_elem_to_json(const BaseElem& e) {
    njson j;
    j["p"] = e.ring()->p();
    j["f"] = e.ring()->f();
    j["N"] = e.prec();
    njson coeffs = njson::array();
    for (const auto& c : e.coeffs()) coeffs.push_back(c.to_string());
    j["coeffs"] = coeffs;
    return j;
}

BaseElem base_elem_from_json(const njson& j) {
    int64_t p = j.at("p").get<int64_t>();
    int f = j.at("f").get<int>();
    int N = j.at("N").get<int>();
    auto ring = BaseRing::make(p, f, N);
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return ring->from_coeffs(std::move(coeffs), N);
}

njson int_poly_to_json(const MPoly<BigInt>& p) {
    njson terms = njson::array();
    for (const auto& [m, c] : p.terms()) {
        njson t;
        t["e"] = m;
        t["c"] = c.to_string();
        terms.push_back(t);
    }
    return njson{{"terms", terms}};
}

MPoly<BigInt> int_poly_from_json(const njson& j, int nvars) {
    MPoly<BigInt> p(nvars);
    for (const auto& t : j.at("terms")) {
        Exps m = t.at("e").get<Exps>();
        m.resize(static_cast<size_t>(nvars), 0);
        p.add_term(m, BigInt(t.at("c").get<std::string>()));
    }
    return p;
}

njson delta_series_to_json(const DeltaSeries& s) {
    static const char* keys[] = {"q", "q1", "q2", "q3"};
    njson terms = njson::array();
    const BigInt pb(s.p);
    for (const auto& [m, c] : series_emission_order(s)) {
        njson mono;
        for (size_t i = 0; i < m.size() && i < 4; ++i) mono[keys[i]] = m[i];
        njson t;
        t["monomial"] = mono;
        t["coeff"] = c.to_string();
        terms.push_back(t);
    }
    njson j;
    j["p"] = s.p;
    j["N"] = s.N;
    j["order"] = s.order;
    if (s.weight) {
        njson w = njson::array();
        for (auto v : s.weight->w) w.push_back(v);
        j["weight"] = w;
    }
    j["terms"] = terms;
    return j;
}

njson jet_presentation_to_json(const JetPresentation<BigInt>& J) {
    njson j;
    j["p"] = J.p;
    j["f"] = J.f;
    j["order"] = J.order;
    j["vars"] = J.vars;
    njson rels = njson::array();
    for (const auto& r : J.relations) rels.push_back(int_poly_to_json(r));
    j["relations"] = rels;
    njson u = njson::object(), phi = njson::object();
    for (size_t i = 0; i < J.u_images.size(); ++i) {
        const std::string& name = J.vars[i];
        u[name] = int_poly_to_json(J.u_images[i]);
        phi[name] = int_poly_to_json(J.phi_images[i]);
    }
    j["maps"] = njson{{"u", u}, {"phi", phi}};
    return j;
}

AffinePresentation<BigInt> affine_presentation_from_json(const njson& j, int64_t p, int f) {
    AffinePresentation<BigInt> A;
    A.p = p;
    A.f = f;
    A.q = 1;
    for (int i = 0; i < f; ++i) A.q *= static_cast<uint64_t>(p);
    A.vars = j.at("vars").get<std::vector<std::string>>();
    int nvars = static_cast<int>(A.vars.size());
    for (const auto& r : j.at("relations")) {
        // accept either {"terms": [...]} or the bare term array
        if (r.is_array()) {
            MPoly<BigInt> poly(nvars);
            for (const auto& t : r) {
                Exps m = t.at("e").get<Exps>();
                m.resize(static_cast<size_t>(nvars), 0);
                poly.add_term(m, BigInt(t.at("c").get<std::string>()));
            }
            A.relations.push_back(std::move(poly));
        } else {
            A.relations.push_back(int_poly_from_json(r, nvars));
        }
    }
    return A;
}

njson kummer_jet_to_json(const KummerJet& K) {
    njson j;
    j["p"] = K.p;
    j["f"] = K.f;
    j["N"] = K.N;
    j["m"] = K.m;
    j["order"] = K.order;
    j["vars"] = K.vars;
    j["relation"] = int_poly_to_json(K.relation);
    njson solved = njson::array();
    for (const auto& s : K.solved) solved.push_back(int_poly_to_json(s));
    j["solved"] = solved;
    return j;
}

njson delta_axiom_report_to_json(const DeltaAxiomReport& r) {
    njson laws = njson::array();
    for (const auto& l : r.laws) {
        njson lj;
        lj["law"] = l.law;
        lj["samples"] = l.samples;
        lj["violations"] = l.violations;
        if (!l.witness.empty()) lj["witness"] = l.witness;
        laws.push_back(lj);
    }
    return laws;
}

}  // namespace arithjet
