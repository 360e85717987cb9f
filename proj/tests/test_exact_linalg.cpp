#include <doctest.h>

#include <set>

#include "symplecta/exact_linalg.hpp"

using namespace symplecta;

namespace {

// Independent oracle: all vectors of GF(p)^m in odometer order.
std::vector<Vec> all_vectors(std::size_t m, std::uint32_t p) {
    std::vector<Vec> out;
    Vec v(m, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = m;
        while (i > 0 && v[i - 1] == p - 1) v[--i] = 0;
        if (i == 0) break;
        ++v[i - 1];
    }
    return out;
}

// Independent oracle: d-dimensional subspaces collected as sorted sets of
// their member vectors, by brute force over all d-tuples. Tiny sizes only.
std::set<std::set<Vec>> brute_force_subspaces(std::size_t m, std::size_t d, Prime p) {
    auto vectors = all_vectors(m, p.value());
    std::set<std::set<Vec>> out;
    std::vector<std::size_t> idx(d, 0);
    while (true) {
        std::vector<Vec> gens;
        for (std::size_t i : idx) gens.push_back(vectors[i]);
        Subspace s = Subspace::span(m, p, gens);
        if (s.dim() == d) {
            std::set<Vec> members;
            for (const Vec& v : vectors)
                if (s.contains_vector(v)) members.insert(v);
            out.insert(std::move(members));
        }
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == vectors.size() - 1) idx[--i] = 0;
        if (i == 0) break;
        ++idx[i - 1];
    }
    return out;
}

// Closed form, independent of the DP used in the library.
std::uint64_t gauss_formula(std::size_t m, std::size_t d, std::uint64_t p) {
    auto pw = [p](std::size_t e) {
        std::uint64_t r = 1;
        while (e--) r *= p;
        return r;
    };
    std::uint64_t num = 1, den = 1;
    for (std::size_t i = 0; i < d; ++i) {
        num *= pw(m - i) - 1;
        den *= pw(i + 1) - 1;
    }
    return num / den;
}

}  // namespace

TEST_CASE("rref examples") {
    Prime p3(3);
    auto [r1, rank1] = rref(Matrix::identity(2, p3));
    CHECK(r1 == Matrix::identity(2, p3));
    CHECK(rank1 == 2);

    auto [r2, rank2] = rref(Matrix::from_rows(p3, {{1, 1}, {2, 2}}));
    CHECK(rank2 == 1);
    CHECK(r2.at(0, 0) == 1);
    CHECK(r2.at(0, 1) == 1);
    CHECK(r2.at(1, 0) == 0);
    CHECK(r2.at(1, 1) == 0);

    auto [r3, rank3] = rref(Matrix(3, 3, p3));
    CHECK(rank3 == 0);
    CHECK(r3.is_zero());
}

TEST_CASE("span examples") {
    Prime p2(2), p3(3);
    Subspace s = Subspace::span(4, p2, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK(s.dim() == 2);
    CHECK(s.basis().at(0, 0) == 1);
    CHECK(s.basis().at(1, 1) == 1);

    CHECK(Subspace::span(4, p3, {{1, 0, 0, 0}, {2, 0, 0, 0}}).dim() == 1);
    CHECK(Subspace::span(4, p3, {}).dim() == 0);
    CHECK_THROWS_AS(Subspace::span(4, p3, {{1, 0}}), std::invalid_argument);
}

TEST_CASE("sum, intersect, contains") {
    Prime p2(2), p3(3);
    Subspace a = Subspace::span(4, p2, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    Subspace b = Subspace::span(4, p2, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(sum(a, b) == Subspace::full(4, p2));
    CHECK(intersect(a, b) == Subspace::zero(4, p2));
    CHECK(intersect(a, a) == a);
    CHECK(sum(a, a) == a);
    CHECK(a.contains(Subspace::span(4, p2, {{1, 1, 0, 0}})));
    CHECK_FALSE(a.contains(b));

    // Brute-force oracle for the mixed case over F_3^4.
    Subspace c = Subspace::span(4, p3, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    Subspace d = Subspace::span(4, p3, {{0, 1, 0, 0}, {0, 0, 1, 0}});
    Subspace meet = intersect(c, d);
    std::vector<Vec> common;
    for (const Vec& v : all_vectors(4, 3))
        if (c.contains_vector(v) && d.contains_vector(v)) common.push_back(v);
    CHECK(meet == Subspace::span(4, p3, common));
    CHECK(meet == Subspace::span(4, p3, {{0, 1, 0, 0}}));

    CHECK_THROWS_AS(sum(a, Subspace::zero(3, p2)), std::invalid_argument);
}

TEST_CASE("canonical form is generator independent") {
    Prime p3(3);
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        // Random subspace, then a second generating set of the same space.
        std::vector<Vec> gens;
        for (int g = 0; g < 3; ++g) {
            Vec v(5);
            for (auto& e : v) e = static_cast<std::uint32_t>(rng.below(3));
            gens.push_back(v);
        }
        Subspace s = Subspace::span(5, p3, gens);
        std::vector<Vec> mixed;
        for (int g = 0; g < 6; ++g) {
            Vec v(5, 0);
            for (const Vec& b : gens) {
                std::uint32_t c = static_cast<std::uint32_t>(rng.below(3));
                for (std::size_t i = 0; i < 5; ++i) v[i] = add_mod(v[i], mul_mod(c, b[i], 3), 3);
            }
            mixed.push_back(v);
        }
        Subspace t = Subspace::span(5, p3, mixed);
        if (t.dim() == s.dim()) {
            CHECK(s.basis() == t.basis());
            CHECK(Subspace::Hash{}(s) == Subspace::Hash{}(t));
        } else {
            CHECK(s.contains(t));
        }
    }
}

TEST_CASE("modular law over all pairs at small sizes") {
    for (std::uint32_t pv : {2u, 3u}) {
        Prime p(pv);
        std::vector<Subspace> all;
        for (std::size_t d = 0; d <= 3; ++d)
            for (const Subspace& s : all_subspaces(3, d, p, 1u << 20)) all.push_back(s);
        for (const Subspace& a : all)
            for (const Subspace& b : all)
                CHECK(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim());
    }
}

TEST_CASE("enumeration counts match the closed form for m <= 6") {
    for (std::uint32_t pv : {2u, 3u}) {
        for (std::size_t m = 0; m <= 6; ++m) {
            for (std::size_t d = 0; d <= m; ++d) {
                std::uint64_t count = 0;
                enumerate_subspaces(m, d, Prime(pv), UINT64_MAX, [&](const Subspace&) {
                    ++count;
                    return true;
                });
                CHECK(count == gauss_formula(m, d, pv));
                CHECK(count == gaussian_binomial(m, d, Prime(pv)));
            }
        }
    }
}

TEST_CASE("enumeration boundary dimensions") {
    Prime p2(2);
    auto zero = all_subspaces(4, 0, p2, 100);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == Subspace::zero(4, p2));
    auto full = all_subspaces(4, 4, p2, 100);
    REQUIRE(full.size() == 1);
    CHECK(full[0] == Subspace::full(4, p2));
}

TEST_CASE("enumeration agrees with vector-set brute force") {
    // [4 choose 2]_2 = 35 via an entirely different route.
    auto brute = brute_force_subspaces(4, 2, Prime(2));
    CHECK(brute.size() == 35);
    std::set<std::set<Vec>> enumerated;
    enumerate_subspaces(4, 2, Prime(2), 1000, [&](const Subspace& s) {
        std::set<Vec> members;
        for (const Vec& v : all_vectors(4, 2))
            if (s.contains_vector(v)) members.insert(v);
        enumerated.insert(std::move(members));
        return true;
    });
    CHECK(enumerated == brute);
}

TEST_CASE("enumeration is deterministic and canonically ordered") {
    auto first = all_subspaces(4, 2, Prime(3), 1u << 20);
    auto second = all_subspaces(4, 2, Prime(3), 1u << 20);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
    for (std::size_t i = 0; i + 1 < first.size(); ++i) CHECK(first[i] < first[i + 1]);
}

TEST_CASE("budget refusal names the count") {
    CHECK_THROWS_AS(all_subspaces(6, 3, Prime(3), 100), budget_error);
    try {
        all_subspaces(6, 3, Prime(3), 100);
    } catch (const budget_error& e) {
        CHECK(e.budget() == 100);
        CHECK(e.required() > 100);
        CHECK(std::string(e.what()).find("101") != std::string::npos);
    }
}

TEST_CASE("matrix inverse and kernel") {
    Prime p5(5);
    Matrix m = Matrix::from_rows(p5, {{1, 2, 0}, {0, 1, 4}, {3, 0, 2}});
    Matrix inv = m.inverse();
    CHECK((m * inv).is_identity());
    CHECK((inv * m).is_identity());
    CHECK_THROWS_AS(Matrix::from_rows(p5, {{1, 2}, {2, 4}}).inverse(), std::domain_error);

    Matrix singular = Matrix::from_rows(p5, {{1, 2, 3}});
    Subspace null = kernel(singular);
    CHECK(null.dim() == 2);
    for (std::size_t r = 0; r < null.dim(); ++r) {
        Vec x = null.basis().row_vec(r);
        std::uint32_t acc = 0;
        for (std::size_t i = 0; i < 3; ++i) acc = add_mod(acc, mul_mod(singular.at(0, i), x[i], 5), 5);
        CHECK(acc == 0);
    }
}
