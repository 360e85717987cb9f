#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "symplecta/symplectic_core.hpp"

namespace symplecta {

// H_k: all non-degenerate 2k-dimensional subspaces, fully materialized with a
// stable index so maps on the family are plain permutations.
class HkFamily {
public:
    static HkFamily build(const SymplecticSpace& space, std::uint32_t k, std::uint64_t budget);

    const SymplecticSpace& space() const noexcept { return space_; }
    std::uint32_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return members_.size(); }
    const Subspace& member(std::size_t i) const { return members_.at(i); }
    const std::vector<Subspace>& members() const noexcept { return members_; }

    // Position of a subspace in the family; -1 when absent.
    int index_of(const Subspace& s) const;
    int require_index(const Subspace& s) const;

private:
    HkFamily(SymplecticSpace space, std::uint32_t k) : space_(std::move(space)), k_(k) {}

    SymplecticSpace space_;
    std::uint32_t k_;
    std::vector<Subspace> members_;
    std::unordered_map<Subspace, int, Subspace::Hash> index_;
};

// A bijection between two materialized families (or a permutation of one),
// stored as an index map. Families must outlive the map.
struct ExplicitMap {
    const HkFamily* domain;
    const HkFamily* codomain;
    std::vector<int> image;

    static ExplicitMap identity(const HkFamily& fam);

    int apply_index(int i) const { return image.at(i); }
    const Subspace& apply(const Subspace& s) const;

    bool is_bijection() const;
    bool is_identity() const;
    ExplicitMap inverse() const;

    bool operator==(const ExplicitMap& o) const {
        return domain == o.domain && codomain == o.codomain && image == o.image;
    }
};

// g after f (apply f first); requires f.codomain == g.domain.
ExplicitMap compose(const ExplicitMap& g, const ExplicitMap& f);

// U -> U^perp as a bijection from H_k onto H_{n-k}.
ExplicitMap p_k_map(const HkFamily& from, const HkFamily& to);

// U -> l(U); l must be symplectic or a similitude on the same space.
ExplicitMap induced_map(const HkFamily& fam, const GroupElement& l);

// Members incident to T (containment either way), and to T^perp unless
// plus_only is set. T must be non-degenerate.
std::vector<int> incidence_set(const HkFamily& fam, const Subspace& t, bool plus_only);

// Swaps U with U^perp on a perp-closed index set, identity elsewhere.
// Requires n = 2k.
ExplicitMap flip_map(const HkFamily& fam, const std::vector<int>& x);

// Quotient of H_k (n = 2k) by the pairing U <-> U^perp.
class PairFamilyBar {
public:
    static PairFamilyBar build(const HkFamily& fam);

    const HkFamily& family() const { return *family_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    const std::pair<int, int>& pair(std::size_t i) const { return pairs_.at(i); }
    int pair_index_of_member(int member) const { return member_pair_.at(member); }

private:
    const HkFamily* family_ = nullptr;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> member_pair_;
};

// The permutation a member map induces on pairs; throws when the map does
// not descend to the quotient.
std::vector<int> bar_quotient(const PairFamilyBar& bar, const ExplicitMap& f);
std::vector<int> induced_bar_map(const PairFamilyBar& bar, const GroupElement& l);

}  // namespace symplecta
