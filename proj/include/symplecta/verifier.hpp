#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symplecta/json_io.hpp"

namespace symplecta {

inline constexpr const char* kArtifactVersion = "0.1.0";

enum class CheckStatus { pass, fail, refused, inapplicable };
std::string to_string(CheckStatus s);

enum class CheckMode { exhaustive, sampled };

// A named verification request. Unset parameters fall back to the check's
// baked-in desk-scale defaults, so `verify --check <name>` reproduces the
// canonical run with one command.
struct CheckSpec {
    std::string name;
    std::optional<std::uint32_t> p;
    std::optional<std::uint32_t> n;
    std::optional<std::uint32_t> k;
    std::optional<std::uint32_t> m;
    std::optional<std::uint32_t> samples;
    std::optional<CheckMode> mode;
    std::uint64_t seed = 42;
    std::uint64_t budget = 0;  // 0 means default_budget()
};

// Machine-readable outcome. A failing report always carries a counterexample
// that recheck_counterexample can verify from the serialized data alone;
// "refused" marks an exceeded budget and is never a mathematical verdict.
struct Report {
    std::string check;
    json params = json::object();
    CheckStatus status = CheckStatus::pass;
    std::map<std::string, std::uint64_t> counts;
    json details = json::object();
    std::optional<json> counterexample;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::string mode;
    std::uint64_t runtime_ms = 0;
    std::string version = kArtifactVersion;

    json to_json() const;
};

// Runs one registered check. Unknown names are usage errors
// (std::invalid_argument); budget refusals come back as status "refused".
Report run_check(const CheckSpec& spec);

// All registry names, in suite order.
std::vector<std::string> registered_checks();

// The names `suite --all` runs (excludes the deliberately failing
// report-machinery selftest).
std::vector<std::string> default_suite();

struct SuiteResult {
    std::vector<Report> reports;
    int exit_code = 0;  // 0 pass/refused/inapplicable, 1 any fail
};

SuiteResult run_suite(const std::vector<std::string>& names, std::uint64_t budget,
                      std::uint64_t seed);
json suite_to_json(const SuiteResult& result, std::uint64_t seed, std::uint64_t budget);

// Re-verifies a failing report's counterexample from its serialized data,
// without re-running the search that found it. True when the counterexample
// still demonstrates the violation.
bool recheck_counterexample(const json& report);

// Decision procedure for "is this transformation induced": sweeps the whole
// group (Sp, or GSp when search_similitudes) and returns the first element
// whose induced permutation equals f. Refuses when the group order exceeds
// the budget.
std::optional<GroupElement> find_inducing_element(const HkFamily& fam, const ExplicitMap& f,
                                                  bool search_similitudes, std::uint64_t budget);

// Constraint-based recovery: the matrices M with M(U) inside U' for every
// pair (U, U') form a linear space; its nonzero elements are enumerated
// (budgeted) and filtered for form-preserving matrices that map each U onto
// U' exactly. Works where the full group sweep is out of reach.
std::optional<GroupElement> find_matrix_inducing(
    const SymplecticSpace& space, const std::vector<std::pair<Subspace, Subspace>>& constraints,
    std::uint64_t budget);

}  // namespace symplecta
