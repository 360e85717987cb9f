#include <doctest.h>

#include <set>

#include "symplecta/pair_grassmannian.hpp"

using namespace symplecta;

namespace {

Vec unit(std::size_t dim, std::size_t i) {
    Vec v(dim, 0);
    v[i] = 1;
    return v;
}

ProjectiveBase standard_base(std::size_t n, Prime p) {
    std::vector<Subspace> points;
    for (std::size_t i = 0; i < n; ++i) points.push_back(Subspace::span(n, p, {unit(n, i)}));
    return ProjectiveBase::create(n, p, std::move(points));
}

BaseSubsetH1 standard_source(const SymplecticSpace& space) {
    std::vector<Subspace> lines;
    for (std::uint32_t i = 0; i < space.n(); ++i)
        lines.push_back(Subspace::span(space.dim(), space.prime(),
                                       {unit(space.dim(), 2 * i), unit(space.dim(), 2 * i + 1)}));
    return BaseSubsetH1::create(space, std::move(lines));
}

}  // namespace

TEST_CASE("pair elements and projective bases") {
    Prime p2(2);
    Subspace s = Subspace::span(4, p2, {unit(4, 0), unit(4, 1)});
    Subspace u = Subspace::span(4, p2, {unit(4, 2), unit(4, 3)});
    PairElement e = make_pair_element(s, u);
    CHECK(e.s == s);
    CHECK_THROWS_AS(make_pair_element(s, s), std::invalid_argument);

    CHECK(standard_base(4, p2).n() == 4);
    std::vector<Subspace> dependent = {
        Subspace::span(3, p2, {unit(3, 0)}), Subspace::span(3, p2, {unit(3, 1)}),
        Subspace::span(3, p2, {{1, 1, 0}})};
    CHECK_THROWS_AS(ProjectiveBase::create(3, p2, dependent), std::invalid_argument);
}

TEST_CASE("level-k base subsets") {
    BaseSubsetBk bk = BaseSubsetBk::build(standard_base(4, Prime(2)), 2);
    CHECK(bk.size() == 6);
    std::set<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> distinct;
    for (std::size_t i = 0; i < bk.size(); ++i) {
        const PairElement& e = bk.member(i);
        CHECK(intersect(e.s, e.u).dim() == 0);
        CHECK(sum(e.s, e.u).dim() == 4);
        distinct.insert({e.s.basis().entries(), e.u.basis().entries()});
    }
    CHECK(distinct.size() == 6);
    CHECK_THROWS_AS(BaseSubsetBk::build(standard_base(4, Prime(2)), 4), std::invalid_argument);
}

TEST_CASE("incidence sets around alpha") {
    BaseSubsetBk bk4 = BaseSubsetBk::build(standard_base(4, Prime(2)), 2);
    BaseSubsetBk level2 = BaseSubsetBk::build(standard_base(4, Prime(2)), 2);
    for (std::size_t a = 0; a < level2.size(); ++a) {
        auto set = bk_of_alpha(bk4, level2.member(a), false);
        CHECK(set.size() == 2);  // alpha and its complement swap
        auto plus = bk_of_alpha(bk4, level2.member(a), true);
        CHECK(std::includes(set.begin(), set.end(), plus.begin(), plus.end()));
    }

    BaseSubsetBk bk5 = BaseSubsetBk::build(standard_base(5, Prime(2)), 2);
    BaseSubsetBk level2of5 = BaseSubsetBk::build(standard_base(5, Prime(2)), 2);
    CHECK(bk_of_alpha(bk5, level2of5.member(0), false).size() == 4);  // 1 + C(3,2)

    // alpha from a foreign base is rejected.
    Subspace fs = Subspace::span(4, Prime(2), {{1, 1, 0, 0}, {0, 0, 1, 0}});
    Subspace fu = Subspace::span(4, Prime(2), {{1, 0, 0, 0}, {0, 0, 0, 1}});
    CHECK_THROWS_AS(bk_of_alpha(bk4, make_pair_element(fs, fu), false), std::invalid_argument);
}

TEST_CASE("incidence cardinalities do not depend on p") {
    for (std::uint32_t n : {4u, 5u}) {
        BaseSubsetBk a = BaseSubsetBk::build(standard_base(n, Prime(2)), 2);
        BaseSubsetBk b = BaseSubsetBk::build(standard_base(n, Prime(3)), 2);
        for (std::uint32_t m : {1u, 2u}) {
            BaseSubsetBk la = BaseSubsetBk::build(standard_base(n, Prime(2)), m);
            BaseSubsetBk lb = BaseSubsetBk::build(standard_base(n, Prime(3)), m);
            REQUIRE(la.size() == lb.size());
            for (std::size_t i = 0; i < la.size(); ++i) {
                CHECK(bk_of_alpha(a, la.member(i), false).size() ==
                      bk_of_alpha(b, lb.member(i), false).size());
                CHECK(bk_of_alpha(a, la.member(i), true).size() ==
                      bk_of_alpha(b, lb.member(i), true).size());
            }
        }
    }
}

TEST_CASE("base search and exactness on the pair side") {
    Prime p2(2);
    CHECK(count_bases_containing(4, p2, {}, UINT64_MAX, 1u << 22) == 840);

    BaseSubsetBk bk = BaseSubsetBk::build(standard_base(4, p2), 2);
    std::vector<int> everythingternal = {0, 1, 2, 3, 4, 5};
    CHECK(is_exact_bk(bk, everythingternal, 1u << 22));
    BaseSubsetBk level2 = BaseSubsetBk::build(standard_base(4, p2), 2);
    for (std::size_t a = 0; a < level2.size(); ++a) {
        auto set = bk_of_alpha(bk, level2.member(a), false);
        CHECK(is_maximal_inexact_bk(bk, set, 1u << 22));
    }
    CHECK_FALSE(is_exact_bk(bk, {}, 1u << 22));

    Lemma1Result res = lemma1_check(bk, 1u << 22);
    CHECK(res.pass);
    CHECK(res.subsets == 64);
    CHECK(res.exact == 54);
    CHECK(res.maximal_inexact == 3);
}

TEST_CASE("lemma2 for identity and point permutations") {
    BaseSubsetBk bk = BaseSubsetBk::build(standard_base(4, Prime(2)), 2);
    IncidenceTables tables = make_incidence_tables_bk(bk, 1u << 22);
    CHECK(tables.maximal_inexact.size() == 3);

    std::vector<int> identity = {0, 1, 2, 3, 4, 5};
    CHECK(lemma2_check(bk, tables, tables, identity).status == MapCheckStatus::pass);

    // A permutation of the base points acts on members by index sets.
    std::vector<int> point_perm = {1, 2, 3, 0};
    std::vector<int> g(bk.size());
    for (std::size_t i = 0; i < bk.size(); ++i) {
        std::vector<int> mapped;
        for (int j : bk.combo(i)) mapped.push_back(point_perm[j]);
        std::sort(mapped.begin(), mapped.end());
        bool found = false;
        for (std::size_t t = 0; t < bk.size() && !found; ++t)
            if (bk.combo(t) == mapped) {
                g[i] = static_cast<int>(t);
                found = true;
            }
        REQUIRE(found);
    }
    CHECK(lemma2_check(bk, tables, tables, g).status == MapCheckStatus::pass);

    // A transposition of two non-complementary members is inapplicable.
    std::vector<int> broken = identity;
    std::swap(broken[0], broken[1]);
    CHECK(lemma2_check(bk, tables, tables, broken).status == MapCheckStatus::inapplicable);
}

TEST_CASE("the index-set bridge onto symplectic expansions") {
    SymplecticSpace space(4, Prime(2));
    BaseSubsetH1 src = standard_source(space);
    BmBridge bridge = b_m_bridge(space, src, 2);

    CHECK(b_m_bridge(space, src, 1).image_of_index_set({0}) == src.line(0));
    CHECK(bridge.image_of_index_set({0, 1}) == sum(src.line(0), src.line(1)));
    CHECK(bridge.preimage(sum(src.line(0), src.line(1))) == std::vector<int>{0, 1});

    // Bijectivity: C(n, m) distinct images.
    std::set<Subspace> images;
    for (const auto& combo : combinations(4, 2)) images.insert(bridge.image_of_index_set(combo));
    CHECK(images.size() == 6);

    // B_k(alpha) maps onto S_k(image of alpha).
    BaseSubsetBk bk = BaseSubsetBk::build(standard_base(4, Prime(2)), 2);
    BaseSubsetHk hk = BaseSubsetHk::expand(space, src, 2);
    std::vector<int> member_map = bridge.map_members(bk);
    BaseSubsetBk level2 = BaseSubsetBk::build(standard_base(4, Prime(2)), 2);
    for (std::size_t a = 0; a < level2.size(); ++a) {
        auto pattern = bk_of_alpha(bk, level2.member(a), false);
        std::vector<int> mapped;
        for (int i : pattern) mapped.push_back(member_map[i]);
        std::sort(mapped.begin(), mapped.end());
        Subspace m = bridge.image_of_index_set(level2.combo(a));
        auto target = s_k_of_m(hk, m, false);
        CHECK(mapped == target);
    }
}

TEST_CASE("the bridge intertwines exactness at p=2, n=4, k=2") {
    SymplecticSpace space(4, Prime(2));
    BaseSubsetH1 src = standard_source(space);
    BaseSubsetHk hk = BaseSubsetHk::expand(space, src, 2);
    BaseSubsetBk bk = BaseSubsetBk::build(standard_base(4, Prime(2)), 2);
    std::vector<int> member_map = b_m_bridge(space, src, 2).map_members(bk);

    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        std::vector<int> xb, xs;
        for (int i = 0; i < 6; ++i)
            if (mask >> i & 1) {
                xb.push_back(i);
                xs.push_back(member_map[i]);
            }
        std::sort(xs.begin(), xs.end());
        CHECK(is_exact_bk(bk, xb, 1u << 22) == is_exact(hk, xs, 1u << 22));
    }
}
