#include <doctest.h>

#include "arithjet/json_io.hpp"
#include "arithjet/rng.hpp"

using namespace arithjet;

TEST_CASE("base element JSON round trip") {
    Rng rng(91);
    for (auto [p, f] : std::vector<std::pair<int64_t, int>>{{3, 1}, {2, 2}, {5, 2}}) {
        auto ring = BaseRing::make(p, f, 4);
        for (int i = 0; i < 20; ++i) {
            BaseElem x = ring->random(rng);
            BaseElem back = base_elem_from_json(base_elem_to_json(x));
            CHECK(back == x);
            CHECK(back.prec() == x.prec());
        }
    }
    njson j = base_elem_to_json(BaseRing::make(3, 1, 4)->from_int(-5));
    CHECK(j["coeffs"][0].get<std::string>() == "76");  // -5 mod 81
}

TEST_CASE("integer polynomial JSON round trip") {
    Rng rng(92);
    for (int t = 0; t < 20; ++t) {
        MPoly<BigInt> a(3);
        for (int k = 0; k < 6; ++k) {
            Exps m = {static_cast<int32_t>(rng.below(5)) - 1, static_cast<int32_t>(rng.below(4)),
                      static_cast<int32_t>(rng.below(3))};
            a.add_term(m, BigInt(static_cast<int64_t>(rng.below(2000)) - 1000));
        }
        CHECK(int_poly_from_json(int_poly_to_json(a), 3) == a);
    }
}

TEST_CASE("series serialization uses q/q1/q2 keys and decimal residues") {
    auto psi = psi_series(3, 6, 4);
    njson j = delta_series_to_json(psi);
    CHECK(j["p"] == 3);
    CHECK(j["N"] == 6);
    CHECK(j["order"] == 1);
    REQUIRE(j["terms"].is_array());
    // emission orders by delta-degree: the n = 1 term q'/q^3 leads with coefficient 1
    CHECK(j["terms"][0]["monomial"]["q"] == -3);
    CHECK(j["terms"][0]["monomial"]["q1"] == 1);
    CHECK(j["terms"][0]["coeff"].get<std::string>() == "1");
    CHECK(j["weight"] == njson::array({-1, -1}));
    // terms whose residue vanishes mod p^N are omitted
    auto psi12 = psi_series(3, 6, 12);
    njson j12 = delta_series_to_json(psi12);
    for (const auto& t : j12["terms"]) CHECK(t["coeff"].get<std::string>() != "0");
}

TEST_CASE("affine presentation JSON parsing") {
    njson j = njson::parse(R"({"vars": ["x"], "relations": [[{"e": [2], "c": "1"}, {"e": [0], "c": "-7"}]]})");
    auto A = affine_presentation_from_json(j, 3, 1);
    CHECK(A.vars == std::vector<std::string>{"x"});
    REQUIRE(A.relations.size() == 1);
    MPoly<BigInt> expect(1);
    expect.add_term({2}, BigInt(1));
    expect.add_term({0}, BigInt(-7));
    CHECK(A.relations[0] == expect);

    std::function<BigInt(const BigInt&)> idphi;
    auto J = jet_presentation(A, 1, BigInt(1), idphi);
    njson out = jet_presentation_to_json(J);
    CHECK(out["vars"] == njson::array({"x", "x'"}));
    CHECK(out["relations"].size() == 2);
    CHECK(out["maps"]["phi"].contains("x"));
    CHECK(out["maps"]["u"].contains("x"));
}

TEST_CASE("kummer and axiom-report serialization") {
    auto K = kummer_jet(5, 1, 3, 4, 1);
    njson j = kummer_jet_to_json(K);
    CHECK(j["m"] == 4);
    CHECK(j["vars"] == njson::array({"t", "h", "h'"}));
    CHECK(j["solved"].size() == 1);

    DeltaAxiomReport rep;
    rep.laws.push_back({"sum", 10, 0, ""});
    rep.laws.push_back({"product", 10, 2, "x, y"});
    njson rj = delta_axiom_report_to_json(rep);
    CHECK(rj[0]["law"] == "sum");
    CHECK(rj[1]["violations"] == 2);
    CHECK(rj[1]["witness"] == "x, y");
}
