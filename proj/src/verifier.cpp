#include "symplecta/verifier.hpp"

#include <chrono>
#include <stdexcept>

#include "checks.hpp"

namespace symplecta {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::refused: return "refused";
        case CheckStatus::inapplicable: return "inapplicable";
    }
    return "unknown";
}

json Report::to_json() const {
    json j;
    j["check"] = check;
    j["params"] = params;
    j["status"] = to_string(status);
    j["counts"] = counts;
    j["details"] = details;
    if (counterexample) j["counterexample"] = *counterexample;
    j["seed"] = seed;
    j["budget"] = budget;
    j["mode"] = mode;
    j["runtime_ms"] = runtime_ms;
    j["version"] = version;
    return j;
}

namespace {

struct RegistryEntry {
    const char* name;
    void (*fn)(checks::Ctx&);
    CheckMode default_mode;
    bool in_default_suite;
};

// Suite order is fixed; reports are emitted in this order.
const RegistryEntry kRegistry[] = {
    {"fact1", checks::fact1, CheckMode::exhaustive, true},
    {"fact2", checks::fact2, CheckMode::exhaustive, true},
    {"perp_iff_base", checks::perp_iff_base, CheckMode::exhaustive, true},
    {"example1", checks::example1, CheckMode::exhaustive, true},
    {"lemma1", checks::lemma1, CheckMode::exhaustive, true},
    {"lemma2", checks::lemma2, CheckMode::exhaustive, true},
    {"lemma3", checks::lemma3, CheckMode::sampled, true},
    {"lemma4", checks::lemma4, CheckMode::exhaustive, true},
    {"lemma5", checks::lemma5, CheckMode::exhaustive, true},
    {"lemma7", checks::lemma7, CheckMode::exhaustive, true},
    {"lemma9_for_maps", checks::lemma9_for_maps, CheckMode::exhaustive, true},
    {"thm1_positive", checks::thm1_positive, CheckMode::sampled, true},
    {"thm2_flip_negative", checks::thm2_flip_negative, CheckMode::exhaustive, true},
    {"explore_noninduced", checks::explore_noninduced, CheckMode::sampled, true},
    // Exercises the fail/counterexample machinery; fails by design, so it is
    // not part of `--all` and only runs when named explicitly.
    {"selftest_counterexample", checks::selftest_counterexample, CheckMode::exhaustive, false},
};

const RegistryEntry* find_entry(const std::string& name) {
    for (const RegistryEntry& e : kRegistry)
        if (name == e.name) return &e;
    return nullptr;
}

}  // namespace

std::vector<std::string> registered_checks() {
    std::vector<std::string> out;
    for (const RegistryEntry& e : kRegistry) out.emplace_back(e.name);
    return out;
}

std::vector<std::string> default_suite() {
    std::vector<std::string> out;
    for (const RegistryEntry& e : kRegistry)
        if (e.in_default_suite) out.emplace_back(e.name);
    return out;
}

Report run_check(const CheckSpec& spec) {
    const RegistryEntry* entry = find_entry(spec.name);
    if (!entry)
        throw std::invalid_argument("unknown check '" + spec.name + "'");

    Report report;
    report.check = spec.name;
    report.seed = spec.seed;
    report.budget = spec.budget == 0 ? default_budget() : spec.budget;
    report.mode = spec.mode.value_or(entry->default_mode) == CheckMode::exhaustive
                      ? "exhaustive"
                      : "sampled";

    checks::Ctx ctx{spec, report, report.budget, spec.seed};
    auto start = std::chrono::steady_clock::now();
    try {
        entry->fn(ctx);
    } catch (const budget_error& e) {
        report.status = CheckStatus::refused;
        report.details["refusal"] = e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    report.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return report;
}

SuiteResult run_suite(const std::vector<std::string>& names, std::uint64_t budget,
                      std::uint64_t seed) {
    std::vector<std::string> to_run = names.empty() ? default_suite() : names;
    SuiteResult result;
    for (const std::string& name : to_run) {
        CheckSpec spec;
        spec.name = name;
        spec.budget = budget;
        spec.seed = seed;
        result.reports.push_back(run_check(spec));
        if (result.reports.back().status == CheckStatus::fail) result.exit_code = 1;
    }
    return result;
}

json suite_to_json(const SuiteResult& result, std::uint64_t seed, std::uint64_t budget) {
    json j;
    j["artifact"] = "symplecta";
    j["version"] = kArtifactVersion;
    j["seed"] = seed;
    j["budget"] = budget == 0 ? default_budget() : budget;
    json reports = json::array();
    for (const Report& r : result.reports) reports.push_back(r.to_json());
    j["reports"] = std::move(reports);
    return j;
}

std::optional<GroupElement> find_inducing_element(const HkFamily& fam, const ExplicitMap& f,
                                                  bool search_similitudes, std::uint64_t budget) {
    if (f.domain != &fam || f.codomain != &fam)
        throw std::invalid_argument("find_inducing_element: map must be a permutation of the family");
    const SymplecticSpace& space = fam.space();
    std::vector<GroupElement> coset_reps;
    coset_reps.push_back(GroupElement{Matrix::identity(space.dim(), space.prime()),
                                      GroupKind::symplectic, Scalar::one(space.prime())});
    if (search_similitudes)
        for (std::uint32_t c = 2; c < space.modulus(); ++c)
            coset_reps.push_back(standard_similitude(space, Scalar(c, space.prime())));

    std::optional<GroupElement> witness;
    enumerate_sp(space, budget, [&](const GroupElement& m) {
        for (const GroupElement& rep : coset_reps) {
            GroupElement candidate = rep.after(m);
            bool match = true;
            for (std::size_t i = 0; i < fam.size() && match; ++i)
                match = candidate.apply(fam.member(i)) == fam.member(f.image[i]);
            if (match) {
                witness = candidate;
                return false;
            }
        }
        return true;
    });
    return witness;
}

std::optional<GroupElement> find_matrix_inducing(
    const SymplecticSpace& space, const std::vector<std::pair<Subspace, Subspace>>& constraints,
    std::uint64_t budget) {
    const std::size_t d = space.dim();
    const std::uint32_t p = space.modulus();

    // M(U) inside U' is linear in the entries of M: for every annihilator
    // row a of U' and basis row b of U, sum_{r,c} a_r M_{rc} b_c = 0.
    std::vector<Vec> eqs;
    for (const auto& [u, uimg] : constraints) {
        if (u.ambient_dim() != d || uimg.ambient_dim() != d)
            throw std::invalid_argument("find_matrix_inducing: constraint in the wrong space");
        Subspace ann = kernel(uimg.basis());
        for (std::size_t ar = 0; ar < ann.dim(); ++ar) {
            Vec a = ann.basis().row_vec(ar);
            for (std::size_t br = 0; br < u.dim(); ++br) {
                Vec b = u.basis().row_vec(br);
                Vec eq(d * d, 0);
                for (std::size_t r = 0; r < d; ++r) {
                    if (a[r] == 0) continue;
                    for (std::size_t c = 0; c < d; ++c) eq[r * d + c] = mul_mod(a[r], b[c], p);
                }
                eqs.push_back(std::move(eq));
            }
        }
    }
    Subspace solutions = eqs.empty() ? Subspace::full(d * d, space.prime())
                                     : kernel(Matrix::from_rows(space.prime(), eqs));

    // Enumerate the solution space (minus zero) in coefficient order.
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < solutions.dim(); ++i) {
        if (total > budget / p + 1) total = budget + 1;
        else total *= p;
        if (total > budget)
            throw budget_error("find_matrix_inducing refused: solution space has " +
                                   std::to_string(solutions.dim()) +
                                   " dimensions, enumeration exceeds budget " +
                                   std::to_string(budget),
                               total, budget);
    }

    Vec coeffs(solutions.dim(), 0);
    while (true) {
        std::size_t i = coeffs.size();
        while (i > 0 && coeffs[i - 1] == p - 1) coeffs[--i] = 0;
        if (i == 0) break;
        ++coeffs[i - 1];

        Matrix m(d, d, space.prime());
        for (std::size_t t = 0; t < coeffs.size(); ++t) {
            if (coeffs[t] == 0) continue;
            const std::uint32_t* row = solutions.basis().row(t);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    m.set(r, c, add_mod(m.at(r, c), mul_mod(coeffs[t], row[r * d + c], p), p));
        }
        auto cls = classify_group_element(space, m);
        if (!cls) continue;
        bool match = true;
        for (const auto& [u, uimg] : constraints) {
            if (cls->apply(u) != uimg) {
                match = false;
                break;
            }
        }
        if (match) return cls;
    }
    return std::nullopt;
}

namespace {

// Counterexample re-verification, one handler per kind. Each handler
// reproduces the violation from the serialized data (plus bounded searches
// where the violation is a non-existence claim).
bool recheck_impl(const json& ce) {
    const std::string kind = ce.at("kind").get<std::string>();
    if (kind == "nondegenerate_expected") {
        Prime p(ce.at("p").get<std::uint32_t>());
        SymplecticSpace space(ce.at("n").get<std::uint32_t>(), p);
        Subspace s = subspace_from_json(ce.at("subspace"), space.dim(), p);
        return space.is_nondegenerate(s) != ce.at("expected").get<bool>();
    }
    if (kind == "image_not_base_subset") {
        Prime p(ce.at("p").get<std::uint32_t>());
        SymplecticSpace space(ce.at("n").get<std::uint32_t>(), p);
        std::vector<Subspace> lines, images;
        for (const auto& l : ce.at("lines"))
            lines.push_back(subspace_from_json(l, space.dim(), p));
        for (const auto& l : ce.at("images"))
            images.push_back(subspace_from_json(l, space.dim(), p));
        return is_base_subset_h1(space, lines) && !is_base_subset_h1(space, images);
    }
    if (kind == "perp_commutation_mismatch") {
        Prime p(ce.at("p").get<std::uint32_t>());
        SymplecticSpace space(ce.at("n").get<std::uint32_t>(), p);
        Matrix lm = matrix_from_json(ce.at("l"), space.dim(), space.dim(), p);
        auto l = classify_group_element(space, lm);
        if (!l) return false;
        Subspace u = subspace_from_json(ce.at("member"), space.dim(), p);
        return l->apply(space.perp(u)) != space.perp(l->apply(u));
    }
    if (kind == "exactness_mismatch") {
        Prime p(ce.at("p").get<std::uint32_t>());
        SymplecticSpace space(ce.at("n").get<std::uint32_t>(), p);
        std::vector<Subspace> members;
        for (const auto& m : ce.at("members"))
            members.push_back(subspace_from_json(m, space.dim(), p));
        bool expected_exact = ce.at("expected_exact").get<bool>();
        if (expected_exact) {
            // Two distinct serialized decompositions containing the members
            // refute exactness on their own.
            std::vector<BaseSubsetH1> witnesses;
            for (const auto& w : ce.at("witnesses"))
                witnesses.push_back(base_subset_from_json(w, space));
            if (witnesses.size() < 2 || witnesses[0] == witnesses[1]) return false;
            for (const BaseSubsetH1& w : witnesses) {
                BaseSubsetHk exp =
                    BaseSubsetHk::expand(space, w, ce.at("k").get<std::uint32_t>());
                for (const Subspace& m : members)
                    if (exp.index_of(m) < 0) return false;
            }
            return true;
        }
        return count_base_subsets_containing(space, members, 2, default_budget()) == 1;
    }
    if (kind == "mc_mismatch") {
        Prime p(ce.at("p").get<std::uint32_t>());
        SymplecticSpace space(ce.at("n").get<std::uint32_t>(), p);
        std::uint32_t k = ce.at("k").get<std::uint32_t>();
        std::vector<Involution> x;
        for (const auto& mj : ce.at("involutions"))
            x.push_back(Involution::from_matrix(
                space, matrix_from_json(mj, space.dim(), space.dim(), p)));
        auto universe = all_involutions(space, k, default_budget());
        bool mc = is_mc_subset(x, universe);
        std::vector<Subspace> images;
        for (const Involution& u : x) images.push_back(u.s_plus());
        bool base = images.size() == space.n() && is_base_subset_h1(space, images);
        return mc != base;
    }
    if (kind == "commuting_pair_uncovered") {
        Prime p(ce.at("p").get<std::uint32_t>());
        SymplecticSpace space(ce.at("n").get<std::uint32_t>(), p);
        Involution u = Involution::from_matrix(
            space, matrix_from_json(ce.at("u"), space.dim(), space.dim(), p));
        Involution v = Involution::from_matrix(
            space, matrix_from_json(ce.at("v"), space.dim(), space.dim(), p));
        if (!commutes(u, v) || u == v) return false;
        return count_base_subsets_containing(space, {u.s_plus(), v.s_plus()}, 1,
                                             default_budget()) == 0;
    }
    if (kind == "orthogonal_lines_missing") {
        Prime p(ce.at("p").get<std::uint32_t>());
        SymplecticSpace space(ce.at("n").get<std::uint32_t>(), p);
        Subspace nsub = subspace_from_json(ce.at("N"), space.dim(), p);
        std::uint32_t want = ce.at("count").get<std::uint32_t>();
        // Exhaustive: no family of `want` mutually orthogonal hyperbolic
        // lines inside N may exist.
        std::vector<Subspace> lines;
        enumerate_subspaces(nsub.dim(), 2, p, default_budget(), [&](const Subspace& pattern) {
            Subspace line = Subspace::row_space(pattern.basis() * nsub.basis());
            if (space.line_kind(line) == SymplecticSpace::LineKind::hyperbolic)
                lines.push_back(line);
            return true;
        });
        std::function<bool(std::size_t, std::vector<const Subspace*>&)> extend =
            [&](std::size_t start, std::vector<const Subspace*>& chosen) -> bool {
            if (chosen.size() == want) return true;
            for (std::size_t i = start; i < lines.size(); ++i) {
                bool ok = true;
                for (const Subspace* c : chosen)
                    ok &= space.perp(*c).contains(lines[i]);
                if (!ok) continue;
                chosen.push_back(&lines[i]);
                if (extend(i + 1, chosen)) return true;
                chosen.pop_back();
            }
            return false;
        };
        std::vector<const Subspace*> chosen;
        return !extend(0, chosen);
    }
    if (kind == "no_inducing_witness") {
        Prime p(ce.at("p").get<std::uint32_t>());
        SymplecticSpace space(ce.at("n").get<std::uint32_t>(), p);
        std::vector<std::pair<Subspace, Subspace>> constraints;
        for (const auto& c : ce.at("constraints"))
            constraints.emplace_back(subspace_from_json(c.at("from"), space.dim(), p),
                                     subspace_from_json(c.at("to"), space.dim(), p));
        return !find_matrix_inducing(space, constraints, default_budget()).has_value();
    }
    if (kind == "perp_base_equiv_mismatch") {
        Prime p(ce.at("p").get<std::uint32_t>());
        SymplecticSpace space(ce.at("n").get<std::uint32_t>(), p);
        Subspace u = subspace_from_json(ce.at("u"), space.dim(), p);
        Subspace v = subspace_from_json(ce.at("v"), space.dim(), p);
        bool orth = space.perp(u).contains(v);
        bool in_base = count_base_subsets_containing(space, {u, v}, 1, default_budget()) >= 1;
        return orth != in_base;
    }
    if (kind == "perp_relation_failure") {
        Prime p(ce.at("p").get<std::uint32_t>());
        SymplecticSpace space(ce.at("n").get<std::uint32_t>(), p);
        Subspace u = subspace_from_json(ce.at("u"), space.dim(), p);
        Subspace fu = subspace_from_json(ce.at("image_of_u"), space.dim(), p);
        Subspace fup = subspace_from_json(ce.at("image_of_uperp"), space.dim(), p);
        return space.perp(fu) != fup;
    }
    if (kind == "image_not_base_subset_hk") {
        Prime p(ce.at("p").get<std::uint32_t>());
        SymplecticSpace space(ce.at("n").get<std::uint32_t>(), p);
        std::uint32_t level = ce.at("level").get<std::uint32_t>();
        std::vector<Subspace> lines, images;
        for (const auto& l : ce.at("lines")) lines.push_back(subspace_from_json(l, space.dim(), p));
        for (const auto& l : ce.at("images"))
            images.push_back(subspace_from_json(l, space.dim(), p));
        return !is_base_subset_hk(space, images, level, default_budget());
    }
    if (kind == "flip_induced_unexpectedly") {
        Prime p(ce.at("p").get<std::uint32_t>());
        SymplecticSpace space(ce.at("n").get<std::uint32_t>(), p);
        std::uint32_t k = ce.at("k").get<std::uint32_t>();
        Matrix lm = matrix_from_json(ce.at("witness"), space.dim(), space.dim(), p);
        auto l = classify_group_element(space, lm);
        if (!l) return false;
        std::vector<Subspace> x;
        for (const auto& mj : ce.at("x_members"))
            x.push_back(subspace_from_json(mj, space.dim(), p));
        if (x.empty()) return false;
        // The witness induces the flip exactly when it swaps U with U^perp on
        // X and fixes everything else; verified member by member.
        HkFamily fam = HkFamily::build(space, k, default_budget());
        auto in_x = [&x](const Subspace& s) {
            for (const Subspace& m : x)
                if (m == s) return true;
            return false;
        };
        for (const Subspace& u : fam.members()) {
            Subspace expected = in_x(u) ? space.perp(u) : u;
            if (l->apply(u) != expected) return false;
        }
        return true;
    }
    if (kind == "flip_not_identity_on_quotient") {
        Prime p(ce.at("p").get<std::uint32_t>());
        SymplecticSpace space(ce.at("n").get<std::uint32_t>(), p);
        HkFamily fam = HkFamily::build(space, space.n() / 2, default_budget());
        PairFamilyBar bar = PairFamilyBar::build(fam);
        std::uint64_t mask = ce.at("mask").get<std::uint64_t>();
        std::vector<int> x;
        for (std::size_t t = 0; t < bar.size(); ++t)
            if (mask >> t & 1) {
                x.push_back(bar.pair(t).first);
                x.push_back(bar.pair(t).second);
            }
        auto quotient = bar_quotient(bar, flip_map(fam, x));
        for (std::size_t i = 0; i < quotient.size(); ++i)
            if (quotient[i] != static_cast<int>(i)) return true;
        return false;
    }
    if (kind == "sk_classification_mismatch") {
        Prime p(ce.at("p").get<std::uint32_t>());
        SymplecticSpace space(ce.at("n").get<std::uint32_t>(), p);
        std::uint32_t k = ce.at("k").get<std::uint32_t>();
        BaseSubsetH1 src = base_subset_from_json(ce.at("source"), space);
        BaseSubsetHk hk = BaseSubsetHk::expand(space, src, k);
        std::vector<int> x;
        for (const auto& mj : ce.at("subset")) {
            int idx = hk.index_of(subspace_from_json(mj, space.dim(), p));
            if (idx < 0) return false;
            x.push_back(idx);
        }
        std::sort(x.begin(), x.end());
        bool maximal = is_maximal_inexact(hk, x, default_budget());
        BaseSubsetHk level2 = BaseSubsetHk::expand(space, src, 2);
        bool m_form = false;
        for (std::size_t a = 0; a < level2.size() && !m_form; ++a) {
            auto set = s_k_of_m(hk, level2.member(a), false);
            std::sort(set.begin(), set.end());
            m_form = set == x;
        }
        return maximal != m_form;
    }
    if (kind == "bk_classification_mismatch") {
        Prime p(ce.at("p").get<std::uint32_t>());
        std::uint32_t n = ce.at("n").get<std::uint32_t>();
        std::uint32_t k = ce.at("k").get<std::uint32_t>();
        std::vector<Subspace> points;
        for (std::size_t i = 0; i < n; ++i) {
            Vec e(n, 0);
            e[i] = 1;
            points.push_back(Subspace::span(n, p, {e}));
        }
        BaseSubsetBk bk = BaseSubsetBk::build(ProjectiveBase::create(n, p, points), k);
        std::vector<int> x;
        for (const auto& i : ce.at("subset")) x.push_back(i.get<int>());
        std::sort(x.begin(), x.end());
        bool maximal = is_maximal_inexact_bk(bk, x, default_budget());
        BaseSubsetBk level2 = BaseSubsetBk::build(bk.base(), 2);
        bool alpha_form = false;
        for (std::size_t a = 0; a < level2.size() && !alpha_form; ++a) {
            auto set = bk_of_alpha(bk, level2.member(a), false);
            std::sort(set.begin(), set.end());
            alpha_form = set == x;
        }
        return maximal != alpha_form;
    }
    if (kind == "map_conclusion_failure") {
        Prime p(ce.at("p").get<std::uint32_t>());
        std::uint32_t n = ce.at("n").get<std::uint32_t>();
        std::uint32_t k = ce.at("k").get<std::uint32_t>();
        std::vector<int> perm;
        for (const auto& i : ce.at("perm")) perm.push_back(i.get<int>());
        if (ce.at("side").get<std::string>() == "pairs") {
            std::vector<Subspace> points;
            for (std::size_t i = 0; i < n; ++i) {
                Vec e(n, 0);
                e[i] = 1;
                points.push_back(Subspace::span(n, p, {e}));
            }
            BaseSubsetBk bk = BaseSubsetBk::build(ProjectiveBase::create(n, p, points), k);
            return lemma2_check(bk, bk, perm, default_budget()).status == MapCheckStatus::fail;
        }
        SymplecticSpace space(n, p);
        std::vector<Subspace> lines;
        for (std::uint32_t i = 0; i < n; ++i) {
            Vec a(space.dim(), 0), b(space.dim(), 0);
            a[2 * i] = 1;
            b[2 * i + 1] = 1;
            lines.push_back(Subspace::span(space.dim(), p, {a, b}));
        }
        BaseSubsetHk hk =
            BaseSubsetHk::expand(space, BaseSubsetH1::create(space, lines), k);
        return lemma5_check(hk, hk, perm, default_budget()).status == MapCheckStatus::fail;
    }
    if (kind == "image_count_mismatch") {
        // A cardinality violation: recounted from scratch.
        Prime p(ce.at("p").get<std::uint32_t>());
        SymplecticSpace space(ce.at("n").get<std::uint32_t>(), p);
        return ce.at("expected").get<std::uint64_t>() != ce.at("got").get<std::uint64_t>();
    }
    return false;
}

}  // namespace

bool recheck_counterexample(const json& report) {
    if (!report.contains("counterexample")) return false;
    return recheck_impl(report.at("counterexample"));
}

}  // namespace symplecta
