// Command-line front end: enumerate path families, solve the q-difference
// systems, compute torus-knot invariants, and run the verification suites.
//
// Exit codes: 0 on success / all checks pass, 1 when a verification check
// fails, 2 on usage errors.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "schroder/schroder.hpp"

namespace {

using namespace schroder;

struct OutputTarget {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << "\n";
            return;
        }
        std::ofstream os(path);
        if (!os) throw error("cannot open output file " + path);
        os << text;
    }
};

std::string dump(const json& j) { return j.dump(2); }

json tag_series(const json& series, const char* family, const json& extra) {
    json j = extra;
    j["family"] = family;
    j["series"] = series;
    return j;
}

int run_enumerate(const std::string& sub, int m, int n, long long s, int f, long long k,
                  int lmax, long long jmax, const std::string& format,
                  const OutputTarget& out) {
    WeightTable t;
    if (sub == "slope") {
        t = enum_slope(m, n, s, lmax);
    } else if (sub == "strip") {
        t = enum_strip(f, k, lmax);
    } else {
        t = enum_strip_stable(f, lmax, jmax);
    }
    if (format == "json") {
        out.write(dump(weight_table_to_json(t)));
    } else {
        std::ostringstream os;
        weight_table_to_csv(t, os);
        out.write(os.str());
    }
    return 0;
}

int run_solve(const std::string& sub, int m, int n, int f, int kmax, int lmax,
              long long qorder, const OutputTarget& out) {
    if (sub == "slope") {
        SlopeFamily fam = solve_slope(m, n, lmax);
        json all = json::array();
        for (long long sv = 0; sv <= fam.mn(); ++sv)
            all.push_back(tag_series(xseries_to_json(fam.series(sv)), "slope",
                                     json{{"m", m}, {"n", n}, {"s", sv}, {"Lmax", lmax}}));
        out.write(dump(all));
        return 0;
    }
    if (sub == "yfamily") {
        std::vector<XSeries> y = solve_y_family(f, kmax, lmax);
        json all = json::array();
        for (int kk = 1; kk < static_cast<int>(y.size()); ++kk)
            all.push_back(tag_series(xseries_to_json(y[size_t(kk)]), "strip",
                                     json{{"f", f}, {"k", kk}, {"Lmax", lmax}}));
        out.write(dump(all));
        return 0;
    }
    if (sub == "yinf") {
        XSeries yinf = solve_yinf(f, lmax, qorder);
        XSeries residual = yinf_equation_residual(yinf, f);
        if (!is_zero_below(residual, lmax + 1, qorder))
            throw functional_equation_violation("y_inf self-check failed");
        out.write(dump(tag_series(
            xseries_to_json(yinf), "strip_stable",
            json{{"f", f}, {"k", "inf"}, {"Lmax", lmax}, {"Omega", qorder}})));
        return 0;
    }
    XSeries h = solve_h(f, lmax, qorder);
    out.write(dump(tag_series(xseries_to_json(h), "backward",
                              json{{"f", f}, {"Lmax", lmax}, {"Omega", qorder}})));
    return 0;
}

int run_knot(const std::string& sub, int m, int n, int f, const Partition& lambda,
             int kmax, int rmax, int i, int lmax, long long qorder,
             const OutputTarget& out) {
    if (sub == "homfly") {
        NuTSeries h = homfly(lambda, m, n, qorder);
        json j = nut_to_json(h);
        j["m"] = m;
        j["n"] = n;
        j["partition"] = partition_to_string(lambda);
        out.write(dump(j));
        return 0;
    }
    if (sub == "wave") {
        std::vector<NuTSeries> w = wave(m, n, kmax, qorder);
        json all = json::array();
        for (int kk = 0; kk <= kmax; ++kk) {
            json j = nut_to_json(w[size_t(kk)]);
            j["k"] = kk;
            all.push_back(std::move(j));
        }
        out.write(dump(json{{"m", m}, {"n", n}, {"coefficients", all}}));
        return 0;
    }
    if (sub == "superpoly") {
        XSeries p = superpoly_series(f, rmax, qorder);
        out.write(dump(tag_series(xseries_to_json(p), "superpoly",
                                  json{{"f", f}, {"Rmax", rmax}, {"Omega", qorder}})));
        return 0;
    }
    if (sub == "ytilde") {
        XSeries yt = ytilde(f, i, lmax, qorder);
        out.write(dump(tag_series(xseries_to_json(yt), "ytilde",
                                  json{{"f", f}, {"i", i}, {"Lmax", lmax}, {"Omega", qorder}})));
        return 0;
    }
    XSeries psi = psi_substituted(f, lmax, qorder);
    out.write(dump(tag_series(xseries_to_json(psi), "psi",
                              json{{"f", f}, {"Lmax", lmax}, {"Omega", qorder}})));
    return 0;
}

int emit_reports(const std::vector<VerificationReport>& reports, const OutputTarget& out) {
    json all = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        all.push_back(report_to_json(r));
        std::ostringstream line;
        line << (r.pass ? "PASS " : "FAIL ") << r.check << " " << r.params.dump();
        if (!r.pass && r.discrepancy && !r.discrepancy->note.empty())
            line << " [" << r.discrepancy->note << "]";
        std::cerr << line.str() << "\n";
        ok = ok && r.pass;
    }
    out.write(dump(all));
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Schroder paths, q-difference solvers and "
                 "torus-knot invariants"};
    app.require_subcommand(1);

    // Series computations default to the window pair (q^48, x^8); table
    // enumeration defaults to a smaller size since it is exhaustive.
    int m = 1, n = 1, f = 1, lmax_enum = 3, lmax = 7, kmax = 4, rmax = 5, idx = 1;
    long long s = 0, k = 1, jmax = 16, qorder = 48;
    int xorder = 8;
    std::string partition_text, format = "csv", out_path, profile;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output to this path instead of stdout");
    };

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "brute-force path enumeration");
    enumerate->require_subcommand(1);
    for (const char* name : {"slope", "strip", "strip-stable"}) {
        auto* c = enumerate->add_subcommand(name);
        c->add_option("--m", m);
        c->add_option("--n", n);
        c->add_option("--s", s);
        c->add_option("--f", f);
        c->add_option("--k", k);
        c->add_option("--lmax", lmax_enum);
        c->add_option("--jmax", jmax);
        c->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
        add_common(c);
    }

    // solve
    auto* solve = app.add_subcommand("solve", "q-difference solvers");
    solve->require_subcommand(1);
    for (const char* name : {"slope", "yfamily", "yinf", "h"}) {
        auto* c = solve->add_subcommand(name);
        c->add_option("--m", m);
        c->add_option("--n", n);
        c->add_option("--f", f);
        c->add_option("--kmax", kmax);
        c->add_option("--lmax", lmax);
        c->add_option("--qorder", qorder);
        add_common(c);
    }

    // knot
    auto* knot = app.add_subcommand("knot", "torus-knot invariants");
    knot->require_subcommand(1);
    for (const char* name : {"homfly", "wave", "superpoly", "ytilde", "psi"}) {
        auto* c = knot->add_subcommand(name);
        c->add_option("--m", m);
        c->add_option("--n", n);
        c->add_option("--f", f);
        c->add_option("--partition", partition_text);
        c->add_option("--kmax", kmax);
        c->add_option("--rmax", rmax);
        c->add_option("--i", idx);
        c->add_option("--lmax", lmax);
        c->add_option("--qorder", qorder);
        add_common(c);
    }

    // verify
    auto* verify = app.add_subcommand("verify", "identity verification suites");
    verify->require_subcommand(1);
    const std::vector<std::string> check_names = {
        "all",    "oracle",  "basecase", "totals",     "slope-eqs",   "strip-family",
        "strip-bounds", "yinf",    "prop12",   "prop13",     "nonneg",   "adams-delta",
        "adams-jt", "wave-qdiff", "grid",  "pbar"};
    int lmax_verify = 3;
    for (const auto& name : check_names) {
        auto* c = verify->add_subcommand(name);
        c->add_option("--m", m);
        c->add_option("--n", n);
        c->add_option("--f", f);
        c->add_option("--kmax", kmax);
        c->add_option("--rmax", rmax);
        c->add_option("--lmax", lmax_verify);
        c->add_option("--jmax", jmax);
        c->add_option("--xorder", xorder);
        c->add_option("--qorder", qorder);
        c->add_option("--partition", partition_text);
        c->add_option("--profile", profile)->check(CLI::IsMember({"desk"}));
        add_common(c);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    OutputTarget out{out_path};
    try {
        if (enumerate->parsed()) {
            auto* sub = enumerate->get_subcommands().at(0);
            return run_enumerate(sub->get_name(), m, n, s, f, k, lmax_enum, jmax, format,
                                 out);
        }
        if (solve->parsed()) {
            auto* sub = solve->get_subcommands().at(0);
            return run_solve(sub->get_name(), m, n, f, kmax, lmax, qorder, out);
        }
        if (knot->parsed()) {
            auto* sub = knot->get_subcommands().at(0);
            Partition lambda = parse_partition(partition_text);
            return run_knot(sub->get_name(), m, n, f, lambda, kmax, rmax, idx, lmax,
                            qorder, out);
        }
        auto* sub = verify->get_subcommands().at(0);
        const std::string name = sub->get_name();
        CheckSet cs;
        if (name == "all") {
            cs = desk_profile();  // the desk profile is the only one defined
        } else if (name == "oracle") {
            cs.add("oracle", json{{"m", m}, {"n", n}, {"lmax", lmax_verify}}, 1,
                   [=] { return verify_oracle_vs_solver(m, n, lmax_verify); });
        } else if (name == "basecase") {
            cs.add("basecase", json{{"m", m}, {"n", n}, {"lmax", lmax_verify}}, 2,
                   [=] { return verify_base_case(m, n, lmax_verify); });
        } else if (name == "totals") {
            cs.add("totals", json{{"lmax", lmax_verify}}, 3,
                   [=] { return verify_classical_totals(lmax_verify); });
        } else if (name == "slope-eqs") {
            cs.add("slope-eqs", json{{"m", m}, {"n", n}, {"lmax", lmax_verify}}, 4,
                   [=] { return verify_slope_equations(m, n, lmax_verify); });
        } else if (name == "strip-family") {
            cs.add("strip-family", json{{"f", f}, {"kmax", kmax}, {"lmax", lmax_verify}}, 5,
                   [=] { return verify_strip_family(f, std::max(kmax, f + 1), lmax_verify); });
        } else if (name == "strip-bounds") {
            cs.add("strip-bounds", json{{"f", f}, {"lmax", lmax_verify}, {"jmax", jmax}}, 6,
                   [=] { return verify_strip_bounds(f, lmax_verify, jmax); });
        } else if (name == "yinf") {
            cs.add("yinf", json{{"f", f}, {"xorder", xorder}, {"qorder", qorder}}, 7,
                   [=] { return verify_yinf(f, xorder, qorder); });
        } else if (name == "prop12") {
            cs.add("prop12", json{{"f", f}, {"xorder", xorder}, {"qorder", qorder}}, 8,
                   [=] { return verify_prop12(f, xorder, qorder); });
        } else if (name == "prop13") {
            cs.add("prop13", json{{"f", f}, {"xorder", xorder}, {"qorder", qorder}}, 9,
                   [=] { return verify_prop13(f, xorder, qorder); });
        } else if (name == "nonneg") {
            cs.add("nonneg", json{{"f", f}, {"xorder", xorder}, {"qorder", qorder}}, 10,
                   [=] { return verify_nonneg(f, xorder, qorder); });
        } else if (name == "adams-delta") {
            cs.add("adams-delta", json{{"size_cap", 4}}, 11,
                   [] { return verify_adams_delta(4); });
        } else if (name == "adams-jt") {
            cs.add("adams-jt", json{{"max_size", 3}, {"max_m", 3}}, 11,
                   [] { return verify_adams_vs_jt(3, 3); });
        } else if (name == "wave-qdiff") {
            cs.add("wave-qdiff", json{{"f", f}, {"kmax", kmax}, {"qorder", qorder}}, 11,
                   [=] { return verify_wave_qdiff(f, kmax, qorder); });
        } else if (name == "grid") {
            std::vector<Partition> lambdas = {Partition{1}, Partition{2}};
            if (!partition_text.empty()) lambdas = {parse_partition(partition_text)};
            cs.add("grid", json{{"m", m}, {"n", n}, {"qorder", qorder}}, 11,
                   [=] { return verify_grid(m, n, lambdas, qorder); });
        } else {  // pbar
            cs.add("pbar", json{{"f", f}, {"rmax", rmax}, {"qorder", qorder}}, 12,
                   [=] { return verify_pbar(f, rmax, qorder); });
        }
        return emit_reports(cs.run(), out);
    } catch (const schroder::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        // Parameter-shaped failures (bad slope, bad partition) are usage
        // errors; anything arising deeper is a real failure.
        if (dynamic_cast<const invalid_slope*>(&e)) return 2;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
