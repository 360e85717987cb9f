#pragma once

#include "symplecta/verifier.hpp"

// Check bodies. Each fills in the report's params, counts, details and, on a
// violation, a self-contained counterexample; budget refusals propagate as
// budget_error and are mapped to "refused" by run_check.
namespace symplecta::checks {

struct Ctx {
    const CheckSpec& spec;
    Report& report;
    std::uint64_t budget;
    std::uint64_t seed;

    std::uint32_t p(std::uint32_t def) {
        std::uint32_t v = spec.p.value_or(def);
        report.params["p"] = v;
        return v;
    }
    std::uint32_t n(std::uint32_t def) {
        std::uint32_t v = spec.n.value_or(def);
        report.params["n"] = v;
        return v;
    }
    std::uint32_t k(std::uint32_t def) {
        std::uint32_t v = spec.k.value_or(def);
        report.params["k"] = v;
        return v;
    }
    std::uint32_t samples(std::uint32_t def) {
        std::uint32_t v = spec.samples.value_or(def);
        report.params["samples"] = v;
        return v;
    }
    std::vector<std::uint32_t> p_list(std::vector<std::uint32_t> def) {
        std::vector<std::uint32_t> v = spec.p ? std::vector<std::uint32_t>{*spec.p} : std::move(def);
        report.params["p"] = v;
        return v;
    }
    std::vector<std::uint32_t> m_list(std::vector<std::uint32_t> def) {
        std::vector<std::uint32_t> v = spec.m ? std::vector<std::uint32_t>{*spec.m} : std::move(def);
        report.params["m"] = v;
        return v;
    }
    std::vector<std::uint32_t> k_list(std::vector<std::uint32_t> def) {
        std::vector<std::uint32_t> v = spec.k ? std::vector<std::uint32_t>{*spec.k} : std::move(def);
        report.params["k"] = v;
        return v;
    }

    void fail(json counterexample) {
        report.status = CheckStatus::fail;
        if (!report.counterexample) report.counterexample = std::move(counterexample);
    }
    bool failed() const { return report.status == CheckStatus::fail; }
};

void fact1(Ctx& ctx);
void fact2(Ctx& ctx);
void perp_iff_base(Ctx& ctx);
void example1(Ctx& ctx);
void lemma1(Ctx& ctx);
void lemma2(Ctx& ctx);
void lemma3(Ctx& ctx);
void lemma4(Ctx& ctx);
void lemma5(Ctx& ctx);
void lemma7(Ctx& ctx);
void lemma9_for_maps(Ctx& ctx);
void thm1_positive(Ctx& ctx);
void thm2_flip_negative(Ctx& ctx);
void explore_noninduced(Ctx& ctx);
void selftest_counterexample(Ctx& ctx);

}  // namespace symplecta::checks
