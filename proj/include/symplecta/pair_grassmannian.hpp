#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "symplecta/base_geometry.hpp"

namespace symplecta {

// (S, U) with S + U = W: a k-dimensional subspace together with a
// complement. The plain linear-algebra side, no form involved.
struct PairElement {
    Subspace s;
    Subspace u;

    bool operator==(const PairElement& o) const { return s == o.s && u == o.u; }
    bool operator!=(const PairElement& o) const { return !(*this == o); }
};

PairElement make_pair_element(Subspace s, Subspace u);

// n independent points of P(W); identity is the set of points, order-free
// (kept canonical by sorting).
class ProjectiveBase {
public:
    static ProjectiveBase create(std::size_t ambient, Prime p, std::vector<Subspace> points);

    std::size_t n() const noexcept { return points_.size(); }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    const Subspace& point(std::size_t i) const { return points_.at(i); }
    const std::vector<Subspace>& points() const noexcept { return points_; }

    bool operator==(const ProjectiveBase& o) const { return points_ == o.points_; }

private:
    friend struct ProjectiveBaseAccess;
    ProjectiveBase(std::size_t ambient, std::vector<Subspace> sorted)
        : ambient_(ambient), points_(std::move(sorted)) {}

    std::size_t ambient_;
    std::vector<Subspace> points_;
};

// Level-k base subset: all (span of points in I, span of the complement),
// indexed by k-element index sets in lexicographic order.
class BaseSubsetBk {
public:
    static BaseSubsetBk build(const ProjectiveBase& base, std::uint32_t k);

    const ProjectiveBase& base() const noexcept { return base_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t n() const noexcept { return static_cast<std::uint32_t>(base_.n()); }
    std::size_t size() const noexcept { return members_.size(); }
    const PairElement& member(std::size_t i) const { return members_.at(i); }
    const std::vector<int>& combo(std::size_t i) const { return combos_.at(i); }
    int index_of(const PairElement& e) const;
    int complement_index(int i) const;  // the swapped pair (U, S); needs n = 2k

private:
    BaseSubsetBk(ProjectiveBase base, std::uint32_t k) : base_(std::move(base)), k_(k) {}

    ProjectiveBase base_;
    std::uint32_t k_;
    std::vector<std::vector<int>> combos_;
    std::vector<PairElement> members_;
};

// Members (S, U) whose S is incident to alpha's first component or (unless
// plus_only) its second. alpha must come from a level of the same base.
std::vector<int> bk_of_alpha(const BaseSubsetBk& bk, const PairElement& alpha, bool plus_only);

// Every projective base whose level-k base subset contains all pairs in X:
// points are chosen in increasing canonical order; a candidate point must be
// independent of the chosen ones and lie inside S or U for every (S, U) in X.
void bases_containing(std::size_t ambient, Prime p, const std::vector<PairElement>& x,
                      std::uint64_t budget, const std::function<bool(const ProjectiveBase&)>& visit);

std::uint64_t count_bases_containing(std::size_t ambient, Prime p,
                                     const std::vector<PairElement>& x, std::uint64_t limit,
                                     std::uint64_t budget);

bool is_exact_bk(const BaseSubsetBk& bk, const std::vector<int>& x, std::uint64_t budget);
bool is_maximal_inexact_bk(const BaseSubsetBk& bk, const std::vector<int>& x, std::uint64_t budget);
std::vector<std::vector<int>> maximal_inexact_subsets_bk(const BaseSubsetBk& bk,
                                                         std::uint64_t budget);

struct Lemma1Result {
    bool pass = true;
    std::uint64_t subsets = 0;
    std::uint64_t exact = 0;
    std::uint64_t inexact = 0;
    std::uint64_t maximal_inexact = 0;
    std::string detail;
    std::vector<int> failing_subset;  // on failure: the offending member set
    bool failing_is_maximal = false;
    bool failing_is_alpha_form = false;
};

// Classifies every subset of the level-k members and verifies: maximal
// inexact subsets are exactly the sets B_k(alpha) with alpha at level 2.
Lemma1Result lemma1_check(const BaseSubsetBk& bk, std::uint64_t budget);

IncidenceTables make_incidence_tables_bk(const BaseSubsetBk& bk, std::uint64_t budget);

// Mirror of lemma5_check on the pair side: a bijection preserving maximal
// inexact subsets must map every B_k(alpha), alpha at level k-1, onto some
// B_k(beta); plus-variants must match when n != 2k.
MapCheckResult lemma2_check(const BaseSubsetBk& dom, const BaseSubsetBk& cod,
                            const std::vector<int>& g, std::uint64_t budget);
MapCheckResult lemma2_check(const BaseSubsetBk& dom, const IncidenceTables& dom_tables,
                            const IncidenceTables& cod_tables, const std::vector<int>& g);

// The natural bijection between level-m index sets on the pair side and the
// level-m expansion of a symplectic decomposition: I -> sum of lines S_i.
class BmBridge {
public:
    BmBridge(const SymplecticSpace& space, const BaseSubsetH1& source, std::uint32_t m);

    const BaseSubsetHk& level() const noexcept { return level_; }
    Subspace image_of_index_set(const std::vector<int>& sorted_combo) const;
    std::vector<int> preimage(const Subspace& member) const;

    // Member index translation from a pair-side base subset with the same
    // (n, m); combos are matched, so the bridge is honest about index sets.
    std::vector<int> map_members(const BaseSubsetBk& bk) const;

private:
    BaseSubsetHk level_;
};

inline BmBridge b_m_bridge(const SymplecticSpace& space, const BaseSubsetH1& source,
                           std::uint32_t m) {
    return BmBridge(space, source, m);
}

// All points of P(W), canonical order; utility for tests and searches.
std::vector<Subspace> all_points(std::size_t ambient, Prime p);

}  // namespace symplecta
