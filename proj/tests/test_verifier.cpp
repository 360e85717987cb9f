#include <doctest.h>

#include "symplecta/verifier.hpp"

using namespace symplecta;

TEST_CASE("registry and suite membership") {
    auto all = registered_checks();
    CHECK(all.size() == 15);
    auto suite = default_suite();
    CHECK(suite.size() == 14);
    for (const auto& name : suite) CHECK(name != "selftest_counterexample");
    CHECK_THROWS_AS(run_check(CheckSpec{.name = "nope"}), std::invalid_argument);
}

TEST_CASE("applicability guards are usage errors") {
    CheckSpec spec;
    spec.name = "fact1";
    spec.p = 2;
    CHECK_THROWS_AS(run_check(spec), std::invalid_argument);
    spec = CheckSpec{.name = "example1"};
    spec.n = 3;
    spec.k = 1;
    CHECK_THROWS_AS(run_check(spec), std::invalid_argument);
}

TEST_CASE("budget refusals are not failures") {
    for (const char* name : {"fact1", "lemma4", "thm1_positive"}) {
        CheckSpec spec;
        spec.name = name;
        spec.budget = 1;
        Report r = run_check(spec);
        CHECK(r.status == CheckStatus::refused);
        CHECK(r.details.contains("refusal"));
    }
}

TEST_CASE("reports carry the required fields") {
    CheckSpec spec;
    spec.name = "fact1";
    spec.seed = 7;
    Report r = run_check(spec);
    json j = r.to_json();
    for (const char* field :
         {"check", "params", "status", "counts", "seed", "budget", "mode", "runtime_ms", "version"})
        CHECK(j.contains(field));
    CHECK(j["seed"] == 7);
    CHECK(j["status"] == "pass");
    CHECK(j["version"] == kArtifactVersion);
}

TEST_CASE("suite exit codes") {
    SuiteResult good = run_suite({"fact1", "lemma1"}, 0, 42);
    CHECK(good.exit_code == 0);
    SuiteResult bad = run_suite({"fact1", "selftest_counterexample"}, 0, 42);
    CHECK(bad.exit_code == 1);
    SuiteResult refused = run_suite({"fact1", "lemma1"}, 1, 42);
    CHECK(refused.exit_code == 0);
    for (const Report& r : refused.reports) CHECK(r.status == CheckStatus::refused);
}

TEST_CASE("single-check determinism") {
    CheckSpec spec;
    spec.name = "lemma3";
    json a = run_check(spec).to_json();
    json b = run_check(spec).to_json();
    a.erase("runtime_ms");
    b.erase("runtime_ms");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("failing reports recheck from their serialized data") {
    CheckSpec spec;
    spec.name = "selftest_counterexample";
    Report r = run_check(spec);
    REQUIRE(r.status == CheckStatus::fail);
    REQUIRE(r.counterexample.has_value());
    json report = r.to_json();
    CHECK(recheck_counterexample(report));

    // Tampering with the witness makes the recheck reject it.
    json tampered = report;
    tampered["counterexample"]["subspace"] =
        json::array({json::array({1, 0, 0, 0}), json::array({0, 1, 0, 0})});
    CHECK_FALSE(recheck_counterexample(tampered));
    CHECK_FALSE(recheck_counterexample(json{{"status", "fail"}}));
}

TEST_CASE("recheck handlers verify hand-built counterexamples") {
    // A genuine violation: the image family is not a base subset.
    json genuine{{"kind", "image_not_base_subset"},
                 {"p", 2},
                 {"n", 2},
                 {"lines", json::array({json::array({json::array({1, 0, 0, 0}),
                                                     json::array({0, 1, 0, 0})}),
                                        json::array({json::array({0, 0, 1, 0}),
                                                     json::array({0, 0, 0, 1})})})},
                 {"images", json::array({json::array({json::array({1, 0, 0, 0}),
                                                      json::array({0, 0, 1, 0})}),
                                         json::array({json::array({0, 1, 0, 0}),
                                                      json::array({0, 0, 0, 1})})})}};
    CHECK(recheck_counterexample(json{{"counterexample", genuine}}));

    // A bogus one: the images do form a base subset.
    json bogus = genuine;
    bogus["images"] = bogus["lines"];
    CHECK_FALSE(recheck_counterexample(json{{"counterexample", bogus}}));
}

TEST_CASE("find_inducing_element recovers and rejects correctly") {
    SymplecticSpace space(2, Prime(2));
    HkFamily fam = HkFamily::build(space, 1, 1u << 22);

    GroupElement l0 = random_sp(space, 31337);
    ExplicitMap f = induced_map(fam, l0);
    auto witness = find_inducing_element(fam, f, true, 1u << 22);
    REQUIRE(witness.has_value());
    CHECK(induced_map(fam, *witness).image == f.image);

    auto id = find_inducing_element(fam, ExplicitMap::identity(fam), true, 1u << 22);
    REQUIRE(id.has_value());
    CHECK(induced_map(fam, *id).is_identity());

    int u = 0, uperp = fam.require_index(space.perp(fam.member(0)));
    ExplicitMap flip = flip_map(fam, {u, uperp});
    CHECK_FALSE(find_inducing_element(fam, flip, true, 1u << 22).has_value());

    CHECK_THROWS_AS(find_inducing_element(fam, f, true, 10), budget_error);
}

TEST_CASE("constraint-based recovery") {
    SymplecticSpace space(3, Prime(3));
    GroupElement l0 = random_sp(space, 2024);
    Rng rng(55);
    std::vector<std::pair<Subspace, Subspace>> constraints;
    for (int t = 0; t < 12; ++t) {
        BaseSubsetH1 d = random_base_subset(space, rng);
        for (const Subspace& line : d.lines())
            constraints.emplace_back(line, l0.apply(line));
    }
    auto witness = find_matrix_inducing(space, constraints, 1u << 22);
    REQUIRE(witness.has_value());
    for (const auto& [from, to] : constraints) CHECK(witness->apply(from) == to);

    // With no constraints the solution space is all of End(V): refused.
    CHECK_THROWS_AS(find_matrix_inducing(space, {}, 1u << 22), budget_error);
}

TEST_CASE("wire formats round-trip") {
    SymplecticSpace space(2, Prime(3));
    HkFamily fam = HkFamily::build(space, 1, 1u << 20);

    // Subspaces: arrays of basis rows with reduced entries.
    const Subspace& s = fam.member(7);
    json sj = subspace_to_json(s);
    CHECK(subspace_from_json(sj, space.dim(), space.prime()) == s);
    for (const auto& row : sj)
        for (const auto& e : row) CHECK(e.get<std::uint32_t>() < 3);

    // Family dump: indexed serialized members.
    json fj = family_to_json(fam);
    REQUIRE(fj.size() == fam.size());
    CHECK(fj[7]["index"] == 7);
    CHECK(subspace_from_json(fj[7]["basis"], space.dim(), space.prime()) == fam.member(7));

    // Map dump: a plain index permutation.
    GroupElement l = random_sp(space, 88);
    ExplicitMap m = induced_map(fam, l);
    json mj = map_to_json(m);
    REQUIRE(mj.size() == fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) CHECK(mj[i].get<int>() == m.image[i]);

    // Group elements: row-major matrix plus kind and multiplier.
    json gj = group_element_to_json(l);
    CHECK(gj["kind"] == "symplectic");
    CHECK(matrix_from_json(gj["matrix"], space.dim(), space.dim(), space.prime()) == l.matrix);
    json simj = group_element_to_json(standard_similitude(space, Scalar(2, Prime(3))));
    CHECK(simj["kind"] == "similitude");
    CHECK(simj["lambda"] == 2);

    // Involutions: matrix plus fixed space.
    Involution u = involution_from_subspace(space, fam.member(0));
    json uj = involution_to_json(u);
    CHECK(subspace_from_json(uj["s_plus"], space.dim(), space.prime()) == fam.member(0));

    // Base subsets: arrays of serialized lines.
    BaseSubsetH1 d = random_base_subset(space, 5);
    CHECK(base_subset_from_json(base_subset_to_json(d), space) == d);
}

TEST_CASE("exactness verdicts carry witnesses") {
    SymplecticSpace space(4, Prime(2));
    BaseSubsetH1 src = random_base_subset(space, 3);
    BaseSubsetHk hk = BaseSubsetHk::expand(space, src, 2);

    std::vector<int> everything = {0, 1, 2, 3, 4, 5};
    ExactnessVerdict exact = exactness_verdict(hk, everything, 1u << 22);
    CHECK(exact.exact);
    REQUIRE(exact.witnesses.size() == 1);
    CHECK(exact.witnesses[0] == src);

    ExactnessVerdict inexact = exactness_verdict(hk, {0}, 1u << 22);
    CHECK_FALSE(inexact.exact);
    REQUIRE(inexact.witnesses.size() == 2);
    CHECK(inexact.witnesses[0] != inexact.witnesses[1]);
    for (const BaseSubsetH1& w : inexact.witnesses)
        CHECK(BaseSubsetHk::expand(space, w, 2).index_of(hk.member(0)) >= 0);
}
