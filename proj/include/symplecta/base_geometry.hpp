#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "symplecta/hyperbolic_grassmannian.hpp"

namespace symplecta {

// A symplectic base of the projective space: 2n independent points, each
// non-orthogonal to exactly one partner (the pairing sigma).
struct SymplecticBase {
    std::vector<Subspace> points;  // 2n one-dimensional subspaces
    std::vector<int> sigma;        // involutive pairing without fixed points
};

SymplecticBase make_symplectic_base(const SymplecticSpace& space, std::vector<Subspace> points);

// n pairwise orthogonal hyperbolic lines summing to V -- an orthogonal
// hyperbolic decomposition. Lines are kept in canonical order, so equal
// decompositions compare equal.
class BaseSubsetH1 {
public:
    static BaseSubsetH1 create(const SymplecticSpace& space, std::vector<Subspace> lines);

    std::size_t n() const noexcept { return lines_.size(); }
    const Subspace& line(std::size_t i) const { return lines_.at(i); }
    const std::vector<Subspace>& lines() const noexcept { return lines_; }
    int index_of_line(const Subspace& s) const;

    bool operator==(const BaseSubsetH1& o) const { return lines_ == o.lines_; }
    bool operator!=(const BaseSubsetH1& o) const { return !(*this == o); }
    bool operator<(const BaseSubsetH1& o) const;

    struct Hash {
        std::size_t operator()(const BaseSubsetH1& b) const noexcept;
    };

private:
    friend struct BaseSubsetAccess;
    explicit BaseSubsetH1(std::vector<Subspace> sorted) : lines_(std::move(sorted)) {}

    std::vector<Subspace> lines_;
};

// Validation predicate without construction.
bool is_base_subset_h1(const SymplecticSpace& space, const std::vector<Subspace>& lines);

// Whether the set is the full level-k base subset of some decomposition:
// a containing decomposition is searched for and its expansion compared.
bool is_base_subset_hk(const SymplecticSpace& space, const std::vector<Subspace>& members,
                       std::uint32_t k, std::uint64_t budget);

BaseSubsetH1 base_subset_from_base(const SymplecticSpace& space, const SymplecticBase& base);

// Seeded random decomposition via iterated hyperbolic-pair extraction.
BaseSubsetH1 random_base_subset(const SymplecticSpace& space, std::uint64_t seed);
BaseSubsetH1 random_base_subset(const SymplecticSpace& space, Rng& rng);

// Closed-form count of orthogonal hyperbolic-line decompositions of
// GF(p)^{2n}, saturating at cap. Used for budget refusals and cross-checks.
std::uint64_t decomposition_count(std::uint32_t n, Prime p, std::uint64_t cap = UINT64_MAX);

// Every decomposition exactly once. The search extends a partial
// decomposition by candidate lines in increasing canonical order, so each
// unordered decomposition appears through its sorted line sequence; emission
// order is deterministic. Refuses when the total count exceeds the budget;
// also counts search nodes against it.
void enumerate_base_subsets(const SymplecticSpace& space, std::uint64_t budget,
                            const std::function<bool(const BaseSubsetH1&)>& visit);

// Every decomposition whose level-k expansion contains all of X. Candidate
// lines must lie inside U or U^perp for every U in X, which is exactly the
// containment condition, so the filter is applied per line during the
// search. Node-budgeted; callback may stop the stream early.
void base_subsets_containing(const SymplecticSpace& space, const std::vector<Subspace>& x,
                             std::uint64_t budget,
                             const std::function<bool(const BaseSubsetH1&)>& visit);

// Decompositions containing X, counted up to `limit` (early exit).
std::uint64_t count_base_subsets_containing(const SymplecticSpace& space,
                                            const std::vector<Subspace>& x, std::uint64_t limit,
                                            std::uint64_t budget);

// The level-k base subset: all sums of k distinct lines of a decomposition,
// indexed by k-element index sets in lexicographic order.
class BaseSubsetHk {
public:
    static BaseSubsetHk expand(const SymplecticSpace& space, const BaseSubsetH1& source,
                               std::uint32_t k);

    const SymplecticSpace& space() const { return *space_; }
    const BaseSubsetH1& source() const noexcept { return source_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t n() const noexcept { return static_cast<std::uint32_t>(source_.n()); }
    std::size_t size() const noexcept { return members_.size(); }
    const Subspace& member(std::size_t i) const { return members_.at(i); }
    const std::vector<int>& combo(std::size_t i) const { return combos_.at(i); }
    int index_of(const Subspace& s) const;
    int index_of_combo(const std::vector<int>& sorted_combo) const;

    // Index of the member on the other side of the perp pairing (the sum of
    // the complementary lines); only defined when n = 2k.
    int complement_index(int i) const;

private:
    BaseSubsetHk(const SymplecticSpace& space, BaseSubsetH1 source, std::uint32_t k)
        : space_(&space), source_(std::move(source)), k_(k) {}

    const SymplecticSpace* space_;
    BaseSubsetH1 source_;
    std::uint32_t k_;
    std::vector<std::vector<int>> combos_;
    std::vector<Subspace> members_;
    std::unordered_map<Subspace, int, Subspace::Hash> index_;
};

// Intersection of the members of X (given as member indices) that contain
// line i of the source; nullopt when no member of X contains it. The empty
// marker is distinct from the zero subspace.
std::optional<Subspace> u_i(const BaseSubsetHk& hk, const std::vector<int>& x, std::size_t i);

// Members incident to M (containment either way), and to M^perp unless
// plus_only. M must be a sum of source lines; anything else is a usage error.
std::vector<int> s_k_of_m(const BaseSubsetHk& hk, const Subspace& m, bool plus_only);

// Exactness: X (member indices) lies in exactly one base subset of H_k.
bool is_exact(const BaseSubsetHk& hk, const std::vector<int>& x, std::uint64_t budget);
bool is_maximal_inexact(const BaseSubsetHk& hk, const std::vector<int>& x, std::uint64_t budget);

// Verdict with witnesses: the containing decomposition when exact, two
// distinct ones when not.
struct ExactnessVerdict {
    bool exact;
    std::vector<BaseSubsetH1> witnesses;
};
ExactnessVerdict exactness_verdict(const BaseSubsetHk& hk, const std::vector<int>& x,
                                   std::uint64_t budget);

// If at most one source line i has U_i(X) != S_i, X must be exact; returns
// whether the implication held (vacuously true when the premise fails).
bool lemma3_check(const BaseSubsetHk& hk, const std::vector<int>& x, std::uint64_t budget);

// All maximal inexact subsets of the expansion, as sorted index sets.
// Classifies every subset, so the member count must stay small.
std::vector<std::vector<int>> maximal_inexact_subsets(const BaseSubsetHk& hk, std::uint64_t budget);

enum class MapCheckStatus { inapplicable, pass, fail };

struct MapCheckResult {
    MapCheckStatus status;
    std::string detail;  // witness description on failure
    std::uint64_t hypothesis_holds = 0;
};

// Exactness and incidence data of one expansion, precomputed once so that
// sweeps over many bijections stay cheap.
struct IncidenceTables {
    std::set<std::vector<int>> maximal_inexact;
    std::vector<std::vector<int>> low_sets;       // incidence set per level-(k-1) member
    std::vector<std::vector<int>> low_plus_sets;  // plus-variant per level-(k-1) member
};

IncidenceTables make_incidence_tables(const BaseSubsetHk& hk, std::uint64_t budget);

// For a bijection h between two expansions whose both directions preserve
// maximal inexact subsets: every incidence set S_k(M), M at level k-1, must
// map onto an incidence set S'_k(M'); for n != 2k the plus-variants must
// match for the same M'. Hypothesis failure reports inapplicable.
MapCheckResult lemma5_check(const BaseSubsetHk& dom, const BaseSubsetHk& cod,
                            const std::vector<int>& h, std::uint64_t budget);
MapCheckResult lemma5_check(const BaseSubsetHk& dom, const IncidenceTables& dom_tables,
                            const IncidenceTables& cod_tables, const std::vector<int>& h);

// Shared combinatorics helpers.
std::vector<std::vector<int>> combinations(std::uint32_t n, std::uint32_t k);
std::uint64_t binomial(std::uint32_t n, std::uint32_t k);

}  // namespace symplecta
