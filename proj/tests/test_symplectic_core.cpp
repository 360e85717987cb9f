#include <doctest.h>

#include <set>

#include "symplecta/symplectic_core.hpp"

using namespace symplecta;

namespace {

Vec unit(std::size_t dim, std::size_t i) {
    Vec v(dim, 0);
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("omega on the standard form") {
    SymplecticSpace sp2(2, Prime(2));
    CHECK(sp2.omega_raw(unit(4, 0), unit(4, 1)) == 1);

    SymplecticSpace sp3(2, Prime(3));
    CHECK(sp3.omega_raw(unit(4, 1), unit(4, 0)) == 2);  // -1 mod 3

    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        Vec x(4);
        for (auto& e : x) e = static_cast<std::uint32_t>(rng.below(3));
        CHECK(sp3.omega_raw(x, x) == 0);  // alternating
    }
    CHECK_THROWS_AS(sp2.omega_raw(unit(3, 0), unit(4, 0)), std::invalid_argument);
}

TEST_CASE("perp examples and involution property") {
    SymplecticSpace space(2, Prime(2));
    Subspace s = Subspace::span(4, Prime(2), {unit(4, 0), unit(4, 1)});
    CHECK(space.perp(s) == Subspace::span(4, Prime(2), {unit(4, 2), unit(4, 3)}));
    CHECK(space.perp(space.zero_space()) == space.full_space());

    // perp(perp(S)) = S for all 35 planes of F_2^4.
    std::size_t seen = 0;
    enumerate_subspaces(4, 2, Prime(2), 1000, [&](const Subspace& s2) {
        ++seen;
        CHECK(space.perp(space.perp(s2)) == s2);
        CHECK(space.perp(s2).dim() == 2);
        return true;
    });
    CHECK(seen == 35);
}

TEST_CASE("perp is an inclusion-reversing involution, exhaustively") {
    for (std::uint32_t pv : {2u, 3u}) {
        for (std::uint32_t n : {1u, 2u, 3u}) {
            if (pv == 3 && n == 3) continue;  // covered below with a lighter sweep
            SymplecticSpace space(n, Prime(pv));
            std::vector<Subspace> all;
            for (std::size_t d = 0; d <= space.dim(); ++d)
                for (const Subspace& s : all_subspaces(space.dim(), d, Prime(pv), 1u << 22))
                    all.push_back(s);
            for (const Subspace& s : all) {
                Subspace sp = space.perp(s);
                CHECK(sp.dim() == space.dim() - s.dim());
                CHECK(space.perp(sp) == s);
            }
            for (std::size_t i = 0; i < all.size(); i += 7)
                for (std::size_t j = 0; j < all.size(); j += 11)
                    if (all[j].contains(all[i]))
                        CHECK(space.perp(all[i]).contains(space.perp(all[j])));
        }
    }
    // p = 3, 2n = 6: full sweep of the involution identity alone.
    SymplecticSpace space(3, Prime(3));
    for (std::size_t d = 0; d <= 6; ++d) {
        enumerate_subspaces(6, d, Prime(3), 1u << 22, [&](const Subspace& s) {
            CHECK(space.perp(space.perp(s)) == s);
            return true;
        });
    }
}

TEST_CASE("non-degeneracy and the splitting identity") {
    SymplecticSpace space(2, Prime(2));
    CHECK(space.is_nondegenerate(Subspace::span(4, Prime(2), {unit(4, 0), unit(4, 1)})));
    CHECK_FALSE(space.is_nondegenerate(Subspace::span(4, Prime(2), {unit(4, 0), unit(4, 2)})));

    std::size_t nondeg = 0;
    enumerate_subspaces(4, 2, Prime(2), 1000, [&](const Subspace& s) {
        if (space.is_nondegenerate(s)) {
            ++nondeg;
            CHECK(sum(s, space.perp(s)) == space.full_space());
            CHECK(intersect(s, space.perp(s)).dim() == 0);
        }
        return true;
    });
    CHECK(nondeg == 20);

    // All even dimensions of F_2^6 and F_3^4.
    SymplecticSpace big(3, Prime(2));
    for (std::size_t d = 0; d <= 6; ++d)
        enumerate_subspaces(6, d, Prime(2), 1u << 22, [&](const Subspace& s) {
            if (big.is_nondegenerate(s)) {
                CHECK(s.dim() % 2 == 0);
                CHECK(sum(s, big.perp(s)) == big.full_space());
                CHECK(intersect(s, big.perp(s)).dim() == 0);
            }
            return true;
        });
    SymplecticSpace odd(2, Prime(3));
    for (std::size_t d = 0; d <= 4; ++d)
        enumerate_subspaces(4, d, Prime(3), 1u << 22, [&](const Subspace& s) {
            if (odd.is_nondegenerate(s)) {
                CHECK(s.dim() % 2 == 0);
                CHECK(sum(s, odd.perp(s)) == odd.full_space());
            }
            return true;
        });
}

TEST_CASE("line kinds and their counts over F_2^6") {
    SymplecticSpace space(3, Prime(2));
    std::size_t hyperbolic = 0, isotropic = 0;
    enumerate_subspaces(6, 2, Prime(2), 1000, [&](const Subspace& line) {
        if (space.line_kind(line) == SymplecticSpace::LineKind::hyperbolic)
            ++hyperbolic;
        else
            ++isotropic;
        return true;
    });
    CHECK(hyperbolic == 336);
    CHECK(isotropic == 315);
    CHECK(hyperbolic + isotropic == 651);
    CHECK_THROWS_AS(space.line_kind(space.full_space()), std::invalid_argument);
}

TEST_CASE("group element classification") {
    SymplecticSpace space(2, Prime(3));
    auto id = classify_group_element(space, Matrix::identity(4, Prime(3)));
    REQUIRE(id.has_value());
    CHECK(id->kind == GroupKind::symplectic);

    // Scalar 2I has multiplier 4 = 1 mod 3, so it is symplectic.
    Matrix twos = Matrix::identity(4, Prime(3)).scaled(2);
    auto cls = classify_group_element(space, twos);
    REQUIRE(cls.has_value());
    CHECK(cls->kind == GroupKind::symplectic);

    // A genuine similitude with non-square multiplier 2.
    auto sim = standard_similitude(space, Scalar(2, Prime(3)));
    CHECK(sim.kind == GroupKind::similitude);
    CHECK(sim.lambda.value() == 2);

    // Transvection along e1 is symplectic; verified through the raw matrix.
    GroupElement t = symplectic_transvection(space, unit(4, 0), Scalar(1, Prime(3)));
    CHECK(t.matrix.transpose() * space.gram() * t.matrix == space.gram());

    Matrix junk = Matrix::from_rows(Prime(3), {{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK_FALSE(classify_group_element(space, junk).has_value());
}

TEST_CASE("transvection algebra") {
    SymplecticSpace space(2, Prime(3));
    CHECK(symplectic_transvection(space, unit(4, 2), Scalar(0, Prime(3))).matrix.is_identity());
    CHECK_THROWS_AS(symplectic_transvection(space, Vec(4, 0), Scalar(1, Prime(3))),
                    std::invalid_argument);

    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        Vec v(4, 0);
        bool zero = true;
        for (auto& e : v) {
            e = static_cast<std::uint32_t>(rng.below(3));
            zero &= e == 0;
        }
        if (zero) v[0] = 1;
        Scalar lam(rng.below(3), Prime(3)), mu(rng.below(3), Prime(3));
        GroupElement a = symplectic_transvection(space, v, lam);
        GroupElement b = symplectic_transvection(space, v, mu);
        GroupElement c = symplectic_transvection(space, v, lam + mu);
        CHECK(a.matrix * b.matrix == c.matrix);
    }
}

TEST_CASE("group enumeration at p=2, n=2") {
    SymplecticSpace space(2, Prime(2));
    CHECK(sp_order(2, Prime(2)) == 720);  // 2^4 * 3 * 15
    std::set<std::vector<std::uint32_t>> seen;
    std::size_t identities = 0;
    enumerate_sp(space, 10000, [&](const GroupElement& g) {
        CHECK(g.matrix.transpose() * space.gram() * g.matrix == space.gram());
        if (g.matrix.is_identity()) ++identities;
        seen.insert(g.matrix.entries());
        return true;
    });
    CHECK(seen.size() == 720);
    CHECK(identities == 1);
    CHECK_THROWS_AS(enumerate_sp(space, 100, [](const GroupElement&) { return true; }),
                    budget_error);
}

TEST_CASE("random symplectic elements are deterministic members") {
    SymplecticSpace space(3, Prime(3));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        GroupElement g = random_sp(space, seed);
        CHECK(g.kind == GroupKind::symplectic);
        CHECK(g.matrix.transpose() * space.gram() * g.matrix == space.gram());
    }
    CHECK(random_sp(space, 42) == random_sp(space, 42));
    CHECK(random_sp(space, 42).matrix != random_sp(space, 43).matrix);
}

TEST_CASE("group elements respect the downstream geometry") {
    SymplecticSpace space(2, Prime(3));
    Rng rng(3);
    for (int t = 0; t < 5; ++t) {
        GroupElement l = random_sp(space, rng);
        enumerate_subspaces(4, 2, Prime(3), 1u << 20, [&](const Subspace& u) {
            Subspace image = l.apply(u);
            CHECK(space.is_nondegenerate(image) == space.is_nondegenerate(u));
            CHECK(l.apply(space.perp(u)) == space.perp(image));
            return true;
        });
    }
}

TEST_CASE("hyperbolic decomposition of non-degenerate subspaces") {
    SymplecticSpace space(2, Prime(2));
    Subspace u = Subspace::span(4, Prime(2), {unit(4, 0), unit(4, 1)});
    auto lines = hyperbolic_decomposition(space, u);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] == u);
    CHECK_THROWS_AS(hyperbolic_decomposition(space, Subspace::span(4, Prime(2), {unit(4, 0)})),
                    std::domain_error);

    auto full = hyperbolic_decomposition(space, space.full_space());
    CHECK(full.size() == 2);
    Subspace total = space.zero_space();
    for (const Subspace& line : full) {
        CHECK(space.line_kind(line) == SymplecticSpace::LineKind::hyperbolic);
        total = sum(total, line);
    }
    CHECK(total == space.full_space());
}
