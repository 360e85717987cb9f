#pragma once

#include <cstdint>
#include <vector>

#include "symplecta/base_geometry.hpp"

namespace symplecta {

// A symplectic involution u (u^2 = I, u in Sp) over odd characteristic,
// with both eigenspaces cached: u fixes s_plus pointwise and negates
// s_minus = s_plus^perp pointwise; dim s_plus = 2k.
class Involution {
public:
    static Involution from_matrix(const SymplecticSpace& space, const Matrix& m);

    const Matrix& matrix() const noexcept { return matrix_; }
    const Subspace& s_plus() const noexcept { return s_plus_; }
    const Subspace& s_minus() const noexcept { return s_minus_; }
    std::uint32_t k() const noexcept { return k_; }

    bool operator==(const Involution& o) const { return matrix_ == o.matrix_; }
    bool operator!=(const Involution& o) const { return !(*this == o); }

    struct Hash {
        std::size_t operator()(const Involution& u) const noexcept;
    };

private:
    Involution(Matrix m, Subspace plus, Subspace minus, std::uint32_t k)
        : matrix_(std::move(m)), s_plus_(std::move(plus)), s_minus_(std::move(minus)), k_(k) {}

    Matrix matrix_;
    Subspace s_plus_;
    Subspace s_minus_;
    std::uint32_t k_;
};

// The unique symplectic involution fixing S and negating S^perp. S must be
// non-degenerate and even-dimensional; p = 2 is a characteristic error.
Involution involution_from_subspace(const SymplecticSpace& space, const Subspace& s);

// The bijection onto H_k: u -> S_+(u).
inline const Subspace& i_k(const Involution& u) { return u.s_plus(); }

// u -> -u, swapping the two eigenspaces.
Involution negate(const SymplecticSpace& space, const Involution& u);

bool commutes(const Involution& u, const Involution& v);

// All of I_k, materialized through H_k (i_k is a bijection); same order as
// the family enumeration.
std::vector<Involution> all_involutions(const SymplecticSpace& space, std::uint32_t k,
                                        std::uint64_t budget);

// X is pairwise commuting and no involution outside X commutes with all of X.
bool is_mc_subset(const std::vector<Involution>& x, const std::vector<Involution>& universe);

// Every maximal clique of the commutation graph on the universe, as sorted
// index sets in deterministic order.
std::vector<std::vector<int>> maximal_commuting_sets(const std::vector<Involution>& universe,
                                                     std::uint64_t budget);

// u -> l u l^{-1}; the result is validated as a symplectic involution again.
Involution conjugate(const SymplecticSpace& space, const GroupElement& l, const Involution& u);

// The automorphism u -> l u l^{-1} as a callable.
class ConjugationAutomorphism {
public:
    ConjugationAutomorphism(const SymplecticSpace& space, GroupElement l)
        : space_(&space), l_(std::move(l)) {}

    Involution operator()(const Involution& u) const { return conjugate(*space_, l_, u); }

private:
    const SymplecticSpace* space_;
    GroupElement l_;
};

inline ConjugationAutomorphism conjugation_automorphism(const SymplecticSpace& space,
                                                        GroupElement l) {
    return ConjugationAutomorphism(space, std::move(l));
}

}  // namespace symplecta
