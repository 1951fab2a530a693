#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "schroder/nut_series.hpp"
#include "schroder/weight_table.hpp"
#include "schroder/x_series.hpp"

namespace schroder {

using nlohmann::json;

// {"x_order":L, "coeffs":[{"l":int, "terms":[{"a":int,"q":int,"c":"decimal"}]}]}
// Coefficients are decimal strings so arbitrary precision survives the trip.
inline json xseries_to_json(const XSeries& f) {
    json coeffs = json::array();
    for (int l = 0; l < f.x_order(); ++l) {
        json terms = json::array();
        for (const auto& [a_exp, qs] : f.coeff(l).terms())
            qs.for_each_term([&](long long e, const Int& c) {
                terms.push_back(json{{"a", a_exp}, {"q", e}, {"c", to_decimal(c)}});
            });
        coeffs.push_back(json{{"l", l}, {"terms", std::move(terms)}});
    }
    return json{{"x_order", f.x_order()}, {"coeffs", std::move(coeffs)}};
}

// {"grid":2m, "terms":[{"u":int, "sigma":[{"e":int,"c":"decimal"}]}]}
inline json nut_to_json(const NuTSeries& f) {
    json terms = json::array();
    for (const auto& [u_exp, s] : f.terms()) {
        json sigma = json::array();
        s.for_each_term([&](long long e, const Int& c) {
            sigma.push_back(json{{"e", e}, {"c", to_decimal(c)}});
        });
        terms.push_back(json{{"u", u_exp}, {"sigma", std::move(sigma)}});
    }
    return json{{"grid", f.grid_denom()}, {"terms", std::move(terms)}};
}

inline json weight_table_to_json(const WeightTable& t) {
    json entries = json::array();
    for (const auto& [key, c] : t.entries) {
        const auto& [d, a, l] = key;
        entries.push_back(json{{"d", d}, {"A", a}, {"l", l}, {"count", to_decimal(c)}});
    }
    json j{{"family", family_name(t.family)},
           {"m", t.m},
           {"n", t.n},
           {"area_unit_denominator", t.area_unit_den},
           {"lmax", t.lmax},
           {"entries", std::move(entries)}};
    if (t.family == PathFamily::strip_stable) {
        j["s_or_k"] = "inf";
        j["jmax"] = t.jmax;
    } else {
        j["s_or_k"] = t.s_or_k;
    }
    return j;
}

// CSV columns: family,m,n,s_or_k,d,A,l,count
inline void weight_table_to_csv(const WeightTable& t, std::ostream& os) {
    os << "family,m,n,s_or_k,d,A,l,count\n";
    const std::string fam = family_name(t.family);
    const std::string sk =
        t.family == PathFamily::strip_stable ? "inf" : std::to_string(t.s_or_k);
    for (const auto& [key, c] : t.entries) {
        const auto& [d, a, l] = key;
        os << fam << "," << t.m << "," << t.n << "," << sk << "," << d << "," << a << ","
           << l << "," << to_decimal(c) << "\n";
    }
}

}  // namespace schroder
