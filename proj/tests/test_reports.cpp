#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "schroder/schroder.hpp"

using namespace schroder;

namespace {

json strip_timing(std::vector<VerificationReport> reports) {
    json all = json::array();
    for (auto& r : reports) {
        json j = report_to_json(r);
        j.erase("ms");
        all.push_back(std::move(j));
    }
    return all;
}

CheckSet small_set() {
    CheckSet cs;
    cs.add("oracle", json{{"m", 1}, {"n", 2}, {"lmax", 2}}, 1,
           [] { return verify_oracle_vs_solver(1, 2, 2); });
    cs.add("totals", json{{"lmax", 3}}, 3, [] { return verify_classical_totals(3); });
    cs.add("adams-delta", json{{"size_cap", 3}}, 11, [] { return verify_adams_delta(3); });
    return cs;
}

}  // namespace

TEST_CASE("reports are deterministic modulo timing") {
    CheckSet cs = small_set();
    json a = strip_timing(cs.run(1));
    json b = strip_timing(cs.run(2));
    REQUIRE(a == b);
    REQUIRE(a.size() == 3);
    for (const auto& r : a) {
        REQUIRE(r.at("status") == "pass");
        REQUIRE(r.at("discrepancy").is_null());
    }
}

TEST_CASE("failures carry a first-discrepancy locator") {
    CheckSet cs;
    cs.add("broken", json::object(), 0, [] {
        SlopeFamily fam = solve_slope(1, 1, 2);
        WeightTable wrong = fam.table(0);
        wrong.add(0, 1, 1, 5);  // inject a bogus entry
        return compare_tables(wrong, fam.table(0));
    });
    cs.add("throwing", json::object(), 0,
           []() -> std::optional<Discrepancy> { throw error("deliberate"); });
    auto reports = cs.run(1);
    REQUIRE(!reports[0].pass);
    REQUIRE(reports[0].discrepancy.has_value());
    REQUIRE(reports[0].discrepancy->x == 1);
    REQUIRE(reports[0].discrepancy->q == 1);
    REQUIRE(!reports[1].pass);
    REQUIRE(reports[1].discrepancy->note == "deliberate");
    json j = report_to_json(reports[1]);
    REQUIRE(j.at("status") == "fail");
}

TEST_CASE("xseries json schema") {
    XSeries f(2);
    f.coeff(0) = AQCoeff::one();
    f.coeff(1) = AQCoeff::monomial(3, 2, -1);
    json j = xseries_to_json(f);
    REQUIRE(j.at("x_order") == 2);
    REQUIRE(j.at("coeffs").size() == 2);
    REQUIRE(j.at("coeffs")[1].at("terms")[0] ==
            json({{"a", 2}, {"q", -1}, {"c", "3"}}));
}

TEST_CASE("nut json schema") {
    NuTSeries p = eval_pstar(1, 1, 6);
    json j = nut_to_json(p);
    REQUIRE(j.at("grid") == 2);
    for (const auto& term : j.at("terms")) {
        REQUIRE(term.contains("u"));
        REQUIRE(term.contains("sigma"));
    }
}

TEST_CASE("weight table csv") {
    std::ostringstream os;
    weight_table_to_csv(enum_slope(1, 1, 0, 1), os);
    std::string text = os.str();
    REQUIRE(text.rfind("family,m,n,s_or_k,d,A,l,count\n", 0) == 0);
    REQUIRE(text.find("slope,1,1,0,0,0,0,1") != std::string::npos);
    REQUIRE(text.find("slope,1,1,0,1,0,1,1") != std::string::npos);
}

TEST_CASE("desk profile is wired for every criterion") {
    CheckSet cs = desk_profile();
    REQUIRE(cs.size() >= 25);
}
