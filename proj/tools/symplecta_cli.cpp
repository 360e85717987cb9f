// Command-line front end: enumerate families and groups, run single named
// checks, or run the whole suite with a JSON report.
//
// Exit codes: 0 pass/refused/inapplicable, 1 any check failed, 2 usage.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "symplecta/verifier.hpp"

using namespace symplecta;

namespace {

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

void print_report(const Report& r) {
    std::printf("%-24s %-12s %8llu ms", r.check.c_str(), to_string(r.status).c_str(),
                static_cast<unsigned long long>(r.runtime_ms));
    for (const auto& [key, value] : r.counts)
        std::printf("  %s=%llu", key.c_str(), static_cast<unsigned long long>(value));
    std::printf("\n");
    if (r.status == CheckStatus::refused)
        std::printf("    refusal: %s\n", r.details.value("refusal", std::string{}).c_str());
    if (r.counterexample)
        std::printf("    counterexample kind: %s\n",
                    r.counterexample->value("kind", std::string{}).c_str());
}

int do_enumerate(std::uint32_t p, std::uint32_t n, std::uint32_t k, std::uint32_t d,
                 const std::string& what, std::uint64_t budget, const std::string& out_path) {
    if (budget == 0) budget = default_budget();
    SymplecticSpace space(n, Prime(p));
    json dump;
    try {
        if (what == "hk") {
            HkFamily fam = HkFamily::build(space, k, budget);
            std::printf("|H_%u| = %zu  (p=%u, n=%u)\n", k, fam.size(), p, n);
            if (!out_path.empty()) dump = family_to_json(fam);
        } else if (what == "subspaces") {
            std::uint64_t count = 0;
            json all = json::array();
            enumerate_subspaces(space.dim(), d, space.prime(), budget, [&](const Subspace& s) {
                ++count;
                if (!out_path.empty()) all.push_back(subspace_to_json(s));
                return true;
            });
            std::printf("[%zu choose %u]_%u = %llu\n", space.dim(), d, p,
                        static_cast<unsigned long long>(count));
            dump = std::move(all);
        } else if (what == "base-subsets") {
            std::uint64_t count = 0;
            json all = json::array();
            enumerate_base_subsets(space, budget, [&](const BaseSubsetH1& b) {
                ++count;
                if (!out_path.empty()) all.push_back(base_subset_to_json(b));
                return true;
            });
            std::printf("base subsets of H_1 (p=%u, n=%u): %llu\n", p, n,
                        static_cast<unsigned long long>(count));
            dump = std::move(all);
        } else if (what == "sp-order") {
            std::printf("|Sp(%zu,%u)| = %llu\n", space.dim(), p,
                        static_cast<unsigned long long>(sp_order(n, space.prime())));
        } else if (what == "sp") {
            std::uint64_t count = 0;
            json all = json::array();
            enumerate_sp(space, budget, [&](const GroupElement& g) {
                ++count;
                if (!out_path.empty()) all.push_back(group_element_to_json(g));
                return true;
            });
            std::printf("enumerated %llu elements of Sp(%zu,%u)\n",
                        static_cast<unsigned long long>(count), space.dim(), p);
            dump = std::move(all);
        } else {
            std::fprintf(stderr, "unknown enumeration target '%s'\n", what.c_str());
            return 2;
        }
    } catch (const budget_error& e) {
        std::printf("refused: %s\n", e.what());
        return 0;
    }
    if (!out_path.empty()) write_json(out_path, dump);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for finite symplectic base-subset geometry"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "materialize families, base subsets, groups");
    std::uint32_t en_p = 2, en_n = 2, en_k = 1, en_d = 2;
    std::string en_what = "hk", en_out;
    std::uint64_t en_budget = 0;
    enumerate->add_option("--p", en_p, "field characteristic (prime)");
    enumerate->add_option("--n", en_n, "half-dimension of V");
    enumerate->add_option("--k", en_k, "level k (for hk)");
    enumerate->add_option("--d", en_d, "subspace dimension (for subspaces)");
    enumerate->add_option("--what", en_what, "hk | subspaces | base-subsets | sp-order | sp");
    enumerate->add_option("--budget", en_budget, "node/count budget (0 = default)");
    enumerate->add_option("--out", en_out, "dump JSON to this file");

    // verify
    auto* verify = app.add_subcommand("verify", "run one named check");
    CheckSpec spec;
    std::string check_name, mode_str, verify_report;
    std::uint32_t v_p = 0, v_n = 0, v_k = 0, v_m = 0, v_samples = 0;
    verify->add_option("--check", check_name, "check name")->required();
    verify->add_option("--p", v_p, "field characteristic");
    verify->add_option("--n", v_n, "half-dimension of V");
    verify->add_option("--k", v_k, "level k");
    verify->add_option("--m", v_m, "level m");
    verify->add_option("--seed", spec.seed, "RNG seed");
    verify->add_option("--budget", spec.budget, "node/count budget (0 = default)");
    verify->add_option("--samples", v_samples, "sample count for sampled mode");
    verify->add_option("--mode", mode_str, "exhaustive | sampled");
    verify->add_option("--report", verify_report, "write the report JSON here");

    // suite
    auto* suite = app.add_subcommand("suite", "run a set of checks");
    bool suite_all = false;
    std::vector<std::string> suite_names;
    std::string suite_report;
    std::uint64_t suite_budget = 0, suite_seed = 42;
    suite->add_flag("--all", suite_all, "run every default check");
    suite->add_option("--names", suite_names, "explicit check names");
    suite->add_option("--report", suite_report, "write the suite report JSON here");
    suite->add_option("--budget", suite_budget, "node/count budget (0 = default)");
    suite->add_option("--seed", suite_seed, "RNG seed");

    auto* list = app.add_subcommand("list", "list registered checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed())
            return do_enumerate(en_p, en_n, en_k, en_d, en_what, en_budget, en_out);

        if (list->parsed()) {
            for (const std::string& name : registered_checks()) std::printf("%s\n", name.c_str());
            return 0;
        }

        if (verify->parsed()) {
            spec.name = check_name;
            if (v_p) spec.p = v_p;
            if (v_n) spec.n = v_n;
            if (v_k) spec.k = v_k;
            if (v_m) spec.m = v_m;
            if (v_samples) spec.samples = v_samples;
            if (!mode_str.empty()) {
                if (mode_str == "exhaustive") spec.mode = CheckMode::exhaustive;
                else if (mode_str == "sampled") spec.mode = CheckMode::sampled;
                else {
                    std::fprintf(stderr, "unknown mode '%s'\n", mode_str.c_str());
                    return 2;
                }
            }
            Report report = run_check(spec);
            print_report(report);
            if (!verify_report.empty()) write_json(verify_report, report.to_json());
            return report.status == CheckStatus::fail ? 1 : 0;
        }

        if (suite->parsed()) {
            if (suite_all && !suite_names.empty()) {
                std::fprintf(stderr, "--all and --names are mutually exclusive\n");
                return 2;
            }
            SuiteResult result = run_suite(suite_names, suite_budget, suite_seed);
            for (const Report& r : result.reports) print_report(r);
            std::printf("suite: %zu checks, exit %d\n", result.reports.size(), result.exit_code);
            if (!suite_report.empty())
                write_json(suite_report, suite_to_json(result, suite_seed, suite_budget));
            return result.exit_code;
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
