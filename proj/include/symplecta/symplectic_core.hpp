#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "symplecta/exact_linalg.hpp"

namespace symplecta {

// V = GF(p)^{2n} with the standard symplectic form: coordinates are paired
// (0,1), (2,3), ... with Omega(e_{2i}, e_{2i+1}) = 1. Every non-degenerate
// alternating form over a field is equivalent to this one, so fixing it makes
// all examples bit-exact.
class SymplecticSpace {
public:
    SymplecticSpace(std::uint32_t n, Prime p);

    std::uint32_t n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return 2 * static_cast<std::size_t>(n_); }
    Prime prime() const { return gram_.prime(); }
    std::uint32_t modulus() const noexcept { return gram_.modulus(); }
    const Matrix& gram() const noexcept { return gram_; }

    Scalar omega(const Vec& x, const Vec& y) const;
    std::uint32_t omega_raw(const Vec& x, const Vec& y) const;

    Subspace full_space() const { return Subspace::full(dim(), prime()); }
    Subspace zero_space() const { return Subspace::zero(dim(), prime()); }

    // Orthogonal complement with respect to Omega; dim(perp) = 2n - dim(S).
    Subspace perp(const Subspace& s) const;

    // Omega restricted to S has full rank. Non-degenerate subspaces are
    // always even-dimensional (asserted).
    bool is_nondegenerate(const Subspace& s) const;

    enum class LineKind { hyperbolic, isotropic };
    LineKind line_kind(const Subspace& line) const;

    // Gram matrix of Omega restricted to a basis of S.
    Matrix restricted_gram(const Subspace& s) const;

    // { x in inside : Omega(x, s) = 0 for all s in S }; same as
    // intersect(inside, perp(S)) but in one elimination.
    Subspace perp_within(const Subspace& inside, const Subspace& s) const;

private:
    std::uint32_t n_;
    Matrix gram_;
};

enum class GroupKind { symplectic, similitude };

// An invertible matrix preserving Omega exactly (symplectic) or up to a
// nonzero multiplier (similitude). Vectors are columns: the action on a
// subspace maps basis rows b to b * M^T.
struct GroupElement {
    Matrix matrix;
    GroupKind kind;
    Scalar lambda;  // multiplier; 1 for symplectic

    Vec apply(const Vec& x) const { return matrix.apply(x); }
    Subspace apply(const Subspace& s) const;

    GroupElement after(const GroupElement& first) const;  // composition: this ∘ first
    GroupElement inverse() const;

    bool operator==(const GroupElement& o) const { return matrix == o.matrix; }
};

// Exact classification of a square matrix against lambda * gram for each
// lambda; nullopt when the matrix preserves Omega for no multiplier.
std::optional<GroupElement> classify_group_element(const SymplecticSpace& space, const Matrix& m);

// x -> x + lambda * Omega(x, v) * v. Standard generators of Sp.
GroupElement symplectic_transvection(const SymplecticSpace& space, const Vec& v, Scalar lambda);

// |Sp(2n, p)| = p^{n^2} * prod_{i=1..n} (p^{2i} - 1), saturating at cap.
std::uint64_t sp_order(std::uint32_t n, Prime p, std::uint64_t cap = UINT64_MAX);

// Every element of Sp exactly once, breadth-first over transvection
// generators from the identity; deterministic order. Refuses when the group
// order exceeds the budget.
void enumerate_sp(const SymplecticSpace& space, std::uint64_t budget,
                  const std::function<bool(const GroupElement&)>& visit);

// A non-scalar similitude with multiplier c (stretches the first vector of
// every hyperbolic coordinate pair).
GroupElement standard_similitude(const SymplecticSpace& space, Scalar c);

// A seeded random symplectic basis as hyperbolic pairs (v_i, w_i) with
// Omega(v_i, w_i) = 1 and distinct pairs orthogonal. Deterministic per seed.
std::vector<std::pair<Vec, Vec>> random_symplectic_basis(const SymplecticSpace& space, Rng& rng);

// Restriction of the sampling above to a non-degenerate subspace; used to
// decompose members of H_k into mutually orthogonal hyperbolic lines.
std::vector<std::pair<Vec, Vec>> symplectic_basis_of(const SymplecticSpace& space, const Subspace& u);

// Deterministic decomposition of a non-degenerate subspace into pairwise
// orthogonal hyperbolic lines (first-found pairs, canonical vector order).
std::vector<Subspace> hyperbolic_decomposition(const SymplecticSpace& space, const Subspace& u);

// Symplectic element sending the standard basis to a seeded random
// symplectic basis. Deterministic per seed.
GroupElement random_sp(const SymplecticSpace& space, std::uint64_t seed);
GroupElement random_sp(const SymplecticSpace& space, Rng& rng);

}  // namespace symplecta
