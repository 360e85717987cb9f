#include <doctest.h>

#include <set>

#include "symplecta/involution_algebra.hpp"

using namespace symplecta;

namespace {

Vec unit(std::size_t dim, std::size_t i) {
    Vec v(dim, 0);
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("construction from a subspace") {
    SymplecticSpace space(2, Prime(3));
    Subspace s = Subspace::span(4, Prime(3), {unit(4, 0), unit(4, 1)});
    Involution u = involution_from_subspace(space, s);
    Matrix expected = Matrix::from_rows(
        Prime(3), {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
    CHECK(u.matrix() == expected);
    CHECK(u.s_plus() == s);
    CHECK(u.s_minus() == space.perp(s));
    CHECK(u.k() == 1);
    CHECK(i_k(u) == s);

    // Swapping the eigenspaces negates the matrix.
    Involution v = involution_from_subspace(space, space.perp(s));
    CHECK(v.matrix() == -u.matrix());
    CHECK(negate(space, u) == v);
}

TEST_CASE("characteristic-2 and degenerate requests are distinct errors") {
    SymplecticSpace even(2, Prime(2));
    Subspace s2 = Subspace::span(4, Prime(2), {unit(4, 0), unit(4, 1)});
    CHECK_THROWS_AS(involution_from_subspace(even, s2), characteristic_error);

    SymplecticSpace odd(2, Prime(3));
    Subspace isotropic = Subspace::span(4, Prime(3), {unit(4, 0), unit(4, 2)});
    CHECK_THROWS_AS(involution_from_subspace(odd, isotropic), std::domain_error);
    CHECK_THROWS_AS(all_involutions(even, 1, 1u << 20), characteristic_error);
}

TEST_CASE("round trips over the whole family at p=3, n=2") {
    SymplecticSpace space(2, Prime(3));
    HkFamily fam = HkFamily::build(space, 1, 1u << 20);
    REQUIRE(fam.size() == 90);
    auto universe = all_involutions(space, 1, 1u << 20);
    REQUIRE(universe.size() == 90);
    for (std::size_t i = 0; i < fam.size(); ++i) {
        CHECK(universe[i].s_plus() == fam.member(i));
        CHECK((universe[i].matrix() * universe[i].matrix()).is_identity());
        Involution back = Involution::from_matrix(space, universe[i].matrix());
        CHECK(back.s_plus() == fam.member(i));
    }
}

TEST_CASE("commutation") {
    SymplecticSpace space(2, Prime(3));
    Subspace a = Subspace::span(4, Prime(3), {unit(4, 0), unit(4, 1)});
    Subspace b = Subspace::span(4, Prime(3), {unit(4, 2), unit(4, 3)});
    Involution u = involution_from_subspace(space, a);
    Involution v = involution_from_subspace(space, b);
    CHECK(commutes(u, u));
    CHECK(commutes(u, v));  // block-diagonal pieces commute

    // The eigenspace criterion: v commutes with u exactly when v's fixed
    // space splits along u's eigenspaces.
    auto universe = all_involutions(space, 1, 1u << 20);
    for (const Involution& w : universe) {
        bool by_matrix = commutes(u, w);
        Subspace plus_part = intersect(w.s_plus(), u.s_plus());
        Subspace minus_part = intersect(w.s_plus(), u.s_minus());
        bool by_subspace = sum(plus_part, minus_part) == w.s_plus();
        CHECK(by_matrix == by_subspace);
    }
}

TEST_CASE("MC subsets correspond to base subsets") {
    SymplecticSpace space(2, Prime(3));
    auto universe = all_involutions(space, 1, 1u << 20);

    std::uint64_t base_subset_count = 0;
    enumerate_base_subsets(space, 1u << 20, [&](const BaseSubsetH1& d) {
        ++base_subset_count;
        std::vector<Involution> x;
        for (const Subspace& line : d.lines()) x.push_back(involution_from_subspace(space, line));
        CHECK(is_mc_subset(x, universe));
        // proper subsets are not maximal
        CHECK_FALSE(is_mc_subset({x[0]}, universe));
        return true;
    });
    CHECK(base_subset_count == 45);

    auto cliques = maximal_commuting_sets(universe, 1u << 22);
    CHECK(cliques.size() == 45);
    for (const auto& clique : cliques) {
        std::vector<Subspace> lines;
        for (int i : clique) lines.push_back(universe[i].s_plus());
        CHECK(is_base_subset_h1(space, lines));
    }

    // Every commuting pair is covered by some base subset.
    for (std::size_t i = 0; i < universe.size(); ++i)
        for (std::size_t j = i + 1; j < universe.size(); ++j)
            if (commutes(universe[i], universe[j]))
                CHECK(count_base_subsets_containing(
                          space, {universe[i].s_plus(), universe[j].s_plus()}, 1, 1u << 20) == 1);
}

TEST_CASE("conjugation acts on fixed spaces") {
    SymplecticSpace space(2, Prime(3));
    auto universe = all_involutions(space, 1, 1u << 20);
    Rng rng(77);
    GroupElement id{Matrix::identity(4, Prime(3)), GroupKind::symplectic, Scalar::one(Prime(3))};
    CHECK(conjugate(space, id, universe[0]) == universe[0]);

    for (int t = 0; t < 50; ++t) {
        GroupElement l = random_sp(space, rng);
        const Involution& u = universe[rng.below(universe.size())];
        Involution conj = conjugate(space, l, u);
        CHECK(conj.s_plus() == l.apply(u.s_plus()));
        const Involution& v = universe[rng.below(universe.size())];
        CHECK(commutes(u, v) == commutes(conj, conjugate(space, l, v)));
    }

    auto functor = conjugation_automorphism(space, random_sp(space, 5));
    Involution image = functor(universe[3]);
    CHECK((image.matrix() * image.matrix()).is_identity());
}

TEST_CASE("the base-subset dictionary transports to commutativity") {
    SymplecticSpace space(2, Prime(3));
    HkFamily fam = HkFamily::build(space, 1, 1u << 20);
    auto universe = all_involutions(space, 1, 1u << 20);

    std::vector<std::vector<int>> base_sets;
    enumerate_base_subsets(space, 1u << 20, [&](const BaseSubsetH1& d) {
        std::vector<int> ids;
        for (const Subspace& line : d.lines()) ids.push_back(fam.require_index(line));
        std::sort(ids.begin(), ids.end());
        base_sets.push_back(ids);
        return true;
    });

    auto preserves_base_subsets = [&](const std::vector<int>& image) {
        for (const auto& ids : base_sets) {
            std::vector<Subspace> images;
            for (int i : ids) images.push_back(fam.member(image[i]));
            if (!is_base_subset_h1(space, images)) return false;
        }
        return true;
    };
    auto preserves_commutativity = [&](const std::vector<int>& image) {
        for (std::size_t i = 0; i < universe.size(); ++i)
            for (std::size_t j = i + 1; j < universe.size(); ++j)
                if (commutes(universe[i], universe[j]) !=
                    commutes(universe[image[i]], universe[image[j]]))
                    return false;
        return true;
    };

    // Induced maps and flips preserve both; an arbitrary transposition of
    // two non-perp members breaks both. The two sides must always agree.
    std::vector<std::vector<int>> candidates;
    Rng rng(13);
    for (int t = 0; t < 3; ++t)
        candidates.push_back(induced_map(fam, random_sp(space, rng)).image);
    int u0 = 0, u0p = fam.require_index(space.perp(fam.member(0)));
    candidates.push_back(flip_map(fam, {u0, u0p}).image);
    std::vector<int> transposed = ExplicitMap::identity(fam).image;
    int other = u0p == 1 ? 2 : 1;
    std::swap(transposed[0], transposed[other]);
    candidates.push_back(transposed);

    bool saw_preserving = false, saw_breaking = false;
    for (const auto& image : candidates) {
        bool lhs = preserves_base_subsets(image);
        bool rhs = preserves_commutativity(image);
        CHECK(lhs == rhs);
        saw_preserving |= lhs;
        saw_breaking |= !lhs;
    }
    CHECK(saw_preserving);
    CHECK(saw_breaking);
}

TEST_CASE("sign-ambiguous automorphism forms") {
    // Maps on involutions are matched against conjugation and against
    // negation composed with conjugation; both preserve commutativity.
    SymplecticSpace space(2, Prime(3));
    auto universe = all_involutions(space, 1, 1u << 20);
    Rng rng(321);
    for (int t = 0; t < 10; ++t) {
        GroupElement l = random_sp(space, rng);
        const Involution& u = universe[rng.below(universe.size())];
        const Involution& v = universe[rng.below(universe.size())];
        Involution cu = conjugate(space, l, u);
        Involution ncu = negate(space, cu);
        CHECK(ncu.matrix() == -(l.matrix * u.matrix() * l.matrix.inverse()));
        CHECK(commutes(u, v) == commutes(ncu, negate(space, conjugate(space, l, v))));
        // The two forms differ precisely by the eigenspace swap.
        CHECK(ncu.s_plus() == cu.s_minus());
    }
}
