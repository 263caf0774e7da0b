// Command line front end: builds the diagram algebras, solves the commutant
// systems, and emits a machine-readable verification report.
#include <CLI11.hpp>
#include <json.hpp>

#include <ebrauer/duality.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using nlohmann::ordered_json;
using namespace ebrauer;

namespace {

const std::vector<std::string> kAllChecks = {
    "dims",       "restricted",   "levi",       "parabolic",
    "filtration", "annihilation", "mulformula", "sanity-gl"};

// Checks that solve a commutant system over the full enhanced endomorphism
// space; at r >= 3 those systems are large and sit behind --stress.
bool is_heavy(const std::string& check) {
    return check == "restricted" || check == "levi" || check == "parabolic" ||
           check == "filtration" || check == "sanity-gl";
}

struct Scenario {
    Form form = Form::orthogonal;
    int n = 0;
    int r = 0;
    std::vector<std::string> checks;
};

DualityReport run_check(const std::string& check, const Scenario& sc, Index samples,
                        std::uint64_t seed) {
    if (check == "dims") return verify_dims(sc.form, sc.n, sc.r);
    if (check == "restricted") return verify_restricted(sc.form, sc.n, sc.r);
    if (check == "levi") return verify_levi(sc.form, sc.n, sc.r);
    if (check == "parabolic") return verify_parabolic(sc.form, sc.n, sc.r);
    if (check == "filtration") return verify_filtration(sc.form, sc.n, sc.r);
    if (check == "annihilation") return verify_annihilation(sc.form, sc.n, sc.r);
    if (check == "mulformula") return verify_mulformula(sc.form, sc.n, sc.r, samples, seed);
    if (check == "sanity-gl") return verify_gl_sanity(sc.form, sc.n, sc.r);
    throw std::invalid_argument("unknown check: " + check);
}

std::vector<DualityReport> run_scenario(const Scenario& sc, Index samples, std::uint64_t seed,
                                        bool timings) {
    std::vector<DualityReport> out;
    for (const std::string& check : sc.checks) {
        auto start = std::chrono::steady_clock::now();
        DualityReport rep = run_check(check, sc, samples, seed);
        if (timings) {
            auto stop = std::chrono::steady_clock::now();
            rep.elapsed_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        }
        out.push_back(std::move(rep));
    }
    return out;
}

ordered_json to_json(const DualityReport& rep) {
    ordered_json j;
    j["scenario"] = rep.scenario;
    j["epsilon"] = rep.epsilon;
    j["n"] = rep.n;
    j["r"] = rep.r;
    ordered_json sides = ordered_json::array();
    for (const SideDim& s : rep.sides) {
        ordered_json e;
        e["name"] = s.name;
        e["dim"] = s.dim;
        sides.push_back(std::move(e));
    }
    j["sides"] = std::move(sides);
    j["equal"] = rep.equal;
    ordered_json levels = ordered_json::array();
    for (const LevelEntry& lev : rep.per_level) {
        ordered_json e;
        e["l"] = lev.l;
        e["lhs"] = lev.lhs;
        e["rhs"] = lev.rhs;
        e["match"] = lev.match;
        levels.push_back(std::move(e));
    }
    j["per_level"] = std::move(levels);
    j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

std::vector<std::string> split_checks(const std::string& arg) {
    std::vector<std::string> out;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enhanced Brauer algebra constructions and duality verification"};

    std::string form_str, checks_str, suite, out_path = "report.json", csv_path;
    int n = 0, r = 0;
    std::uint64_t seed = 0;
    Index samples = 200;
    bool stress = false, timings = false;

    auto* form_opt = app.add_option("--form", form_str, "group family: orthogonal or symplectic")
                         ->check(CLI::IsMember({"orthogonal", "symplectic"}));
    auto* n_opt = app.add_option("--n", n, "dimension of the defining space")->check(CLI::Range(1, 12));
    auto* r_opt = app.add_option("--r", r, "tensor exponent")->check(CLI::Range(1, 6));
    app.add_option("--checks", checks_str,
                   "comma list from: dims,restricted,levi,parabolic,filtration,"
                   "annihilation,mulformula,sanity-gl (default: all)");
    auto* suite_opt = app.add_option("--suite", suite, "preset scenario list")
                          ->check(CLI::IsMember({"default", "extended"}));
    app.add_option("--seed", seed, "seed for sampled product checks");
    app.add_option("--samples", samples, "sample count for product checks at r >= 3");
    app.add_option("--out", out_path, "JSON report path (default report.json)");
    app.add_option("--csv", csv_path, "also write the graded dimension tables as CSV");
    app.add_flag("--stress", stress, "allow full commutant solves at r >= 3");
    app.add_flag("--timings", timings, "record wall times (off keeps reports byte-stable)");

    form_opt->needs(n_opt)->needs(r_opt);
    suite_opt->excludes(form_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::vector<Scenario> scenarios;
    if (!form_str.empty()) {
        Scenario sc;
        sc.form = form_str == "orthogonal" ? Form::orthogonal : Form::symplectic;
        sc.n = n;
        sc.r = r;
        sc.checks = checks_str.empty() ? kAllChecks : split_checks(checks_str);
        for (const std::string& c : sc.checks) {
            if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end()) {
                std::cerr << "unknown check: " << c << "\n";
                return 2;
            }
        }
        scenarios.push_back(std::move(sc));
    } else {
        if (suite.empty()) suite = "default";
        scenarios.push_back({Form::orthogonal, 4, 2, kAllChecks});
        scenarios.push_back({Form::symplectic, 6, 2, kAllChecks});
        if (suite == "extended") {
            scenarios.push_back({Form::orthogonal, 6, 3, {"dims", "mulformula", "annihilation"}});
        }
    }

    for (const Scenario& sc : scenarios) {
        if (sc.r < 3 || stress) continue;
        for (const std::string& c : sc.checks) {
            if (is_heavy(c)) {
                std::cerr << "check '" << c << "' at r = " << sc.r
                          << " solves a full commutant system; rerun with --stress\n";
                return 2;
            }
        }
    }

    if (!form_str.empty() && form_str == "symplectic" && n % 2 != 0) {
        std::cerr << "symplectic forms need even n\n";
        return 2;
    }

    // Scenarios are independent; each future owns its data.
    std::vector<std::future<std::vector<DualityReport>>> futures;
    futures.reserve(scenarios.size());
    for (const Scenario& sc : scenarios) {
        futures.push_back(std::async(std::launch::async, run_scenario, sc, samples, seed, timings));
    }

    bool pass = true;
    ordered_json jreports = ordered_json::array();
    for (std::size_t k = 0; k < futures.size(); ++k) {
        std::vector<DualityReport> reps;
        try {
            reps = futures[k].get();
        } catch (const std::exception& e) {
            std::cerr << "scenario failed to run: " << e.what() << "\n";
            return 2;
        }
        for (const DualityReport& rep : reps) {
            pass = pass && rep.equal;
            std::cout << (rep.equal ? "[ok]   " : "[FAIL] ") << rep.scenario;
            for (const SideDim& s : rep.sides) std::cout << "  " << s.name << "=" << s.dim;
            std::cout << "\n";
            jreports.push_back(to_json(rep));
        }
    }

    ordered_json top;
    top["suite"] = form_str.empty() ? ordered_json(suite) : ordered_json(nullptr);
    top["seed"] = seed;
    top["stress"] = stress;
    top["scenarios"] = std::move(jreports);
    top["pass"] = pass;

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
    }
    out << top.dump(2) << "\n";
    out.close();

    if (!csv_path.empty()) {
        std::set<std::tuple<int, int, int>> seen;
        std::string csv;
        for (const Scenario& sc : scenarios) {
            int eps = epsilon_of(sc.form);
            if (!seen.insert({eps, sc.n, sc.r}).second) continue;
            std::string one = dimension_table_csv(dimension_table(eps, sc.n, sc.r));
            if (csv.empty()) {
                csv = one;
            } else {
                csv += one.substr(one.find('\n') + 1);
            }
        }
        std::ofstream cs(csv_path);
        if (!cs) {
            std::cerr << "cannot write " << csv_path << "\n";
            return 2;
        }
        cs << csv;
    }

    std::cout << (pass ? "PASS" : "FAIL") << " (" << out_path << ")\n";
    return pass ? 0 : 1;
}
