#include "symplecta/pair_grassmannian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace symplecta {

PairElement make_pair_element(Subspace s, Subspace u) {
    if (s.ambient_dim() != u.ambient_dim() || s.modulus() != u.modulus())
        throw std::invalid_argument("PairElement: components live in different spaces");
    if (s.dim() + u.dim() != s.ambient_dim() || intersect(s, u).dim() != 0)
        throw std::invalid_argument("PairElement: S + U must be a direct sum filling W");
    return PairElement{std::move(s), std::move(u)};
}

ProjectiveBase ProjectiveBase::create(std::size_t ambient, Prime p, std::vector<Subspace> points) {
    if (points.size() != ambient)
        throw std::invalid_argument("ProjectiveBase: need exactly dim W points");
    std::vector<Vec> reps;
    for (const Subspace& pt : points) {
        if (pt.ambient_dim() != ambient || pt.dim() != 1 || pt.modulus() != p.value())
            throw std::invalid_argument("ProjectiveBase: entries must be points of P(W)");
        reps.push_back(pt.basis().row_vec(0));
    }
    if (Subspace::span(ambient, p, reps).dim() != ambient)
        throw std::invalid_argument("ProjectiveBase: points are not independent");
    std::sort(points.begin(), points.end());
    return ProjectiveBase(ambient, std::move(points));
}

struct ProjectiveBaseAccess {
    static ProjectiveBase make_sorted(std::size_t ambient, std::vector<Subspace> points) {
        return ProjectiveBase(ambient, std::move(points));
    }
};

BaseSubsetBk BaseSubsetBk::build(const ProjectiveBase& base, std::uint32_t k) {
    const std::uint32_t n = static_cast<std::uint32_t>(base.n());
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("BaseSubsetBk: k must satisfy 1 <= k <= n-1");
    BaseSubsetBk bk(base, k);
    bk.combos_ = combinations(n, k);
    Prime p = base.point(0).prime();
    for (const auto& combo : bk.combos_) {
        std::vector<Vec> in, out;
        std::size_t next = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            bool chosen = next < combo.size() && combo[next] == static_cast<int>(i);
            if (chosen) ++next;
            (chosen ? in : out).push_back(base.point(i).basis().row_vec(0));
        }
        bk.members_.push_back(make_pair_element(Subspace::span(base.ambient_dim(), p, in),
                                                Subspace::span(base.ambient_dim(), p, out)));
    }
    return bk;
}

int BaseSubsetBk::index_of(const PairElement& e) const {
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i] == e) return static_cast<int>(i);
    return -1;
}

int BaseSubsetBk::complement_index(int i) const {
    SYMPLECTA_CHECK(n() == 2 * k_, "complement_index needs n = 2k");
    const PairElement& e = members_.at(i);
    int idx = index_of(PairElement{e.u, e.s});
    SYMPLECTA_CHECK(idx >= 0, "swapped pair missing from base subset");
    return idx;
}

std::vector<int> bk_of_alpha(const BaseSubsetBk& bk, const PairElement& alpha, bool plus_only) {
    // alpha must be spanned by base points: its index set rebuilds both parts.
    std::vector<Vec> in, out;
    for (std::size_t i = 0; i < bk.base().n(); ++i) {
        const Subspace& pt = bk.base().point(i);
        if (alpha.s.contains(pt))
            in.push_back(pt.basis().row_vec(0));
        else if (alpha.u.contains(pt))
            out.push_back(pt.basis().row_vec(0));
    }
    Prime p = bk.base().point(0).prime();
    if (in.size() + out.size() != bk.base().n() ||
        Subspace::span(bk.base().ambient_dim(), p, in) != alpha.s ||
        Subspace::span(bk.base().ambient_dim(), p, out) != alpha.u)
        throw std::invalid_argument("bk_of_alpha: alpha is not spanned by this base");

    auto incident = [](const Subspace& a, const Subspace& b) {
        return a.contains(b) || b.contains(a);
    };
    std::vector<int> result;
    for (std::size_t i = 0; i < bk.size(); ++i) {
        const Subspace& s = bk.member(i).s;
        if (incident(s, alpha.s) || (!plus_only && incident(s, alpha.u)))
            result.push_back(static_cast<int>(i));
    }
    return result;
}

namespace {

std::vector<Subspace> points_of(std::size_t ambient, Prime p) {
    std::vector<Subspace> out;
    enumerate_subspaces(ambient, 1, p, UINT64_MAX, [&](const Subspace& s) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Point-by-point construction of projective bases, ascending canonical
// order; mirrors the decomposition search on the symplectic side.
class BaseSearch {
public:
    BaseSearch(std::size_t ambient, Prime p, std::vector<PairElement> constraints,
               std::uint64_t budget, const std::function<bool(const ProjectiveBase&)>& visit)
        : ambient_(ambient),
          p_(p),
          constraints_(std::move(constraints)),
          points_(points_of(ambient, p)),
          budget_(budget),
          visit_(visit) {}

    void run() {
        chosen_.reserve(ambient_);
        descend(Subspace::zero(ambient_, p_), 0);
    }

private:
    bool descend(const Subspace& span_so_far, std::size_t first_candidate) {
        if (chosen_.size() == ambient_) {
            budget_.charge();
            return visit_(ProjectiveBaseAccess::make_sorted(ambient_, chosen_));
        }
        for (std::size_t c = first_candidate; c < points_.size(); ++c) {
            const Subspace& pt = points_[c];
            if (span_so_far.contains(pt)) continue;
            bool ok = true;
            for (const PairElement& e : constraints_)
                if (!e.s.contains(pt) && !e.u.contains(pt)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            budget_.charge();
            chosen_.push_back(pt);
            bool keep_going = descend(sum(span_so_far, pt), c + 1);
            chosen_.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }

    std::size_t ambient_;
    Prime p_;
    std::vector<PairElement> constraints_;
    std::vector<Subspace> points_;
    Budget budget_;
    const std::function<bool(const ProjectiveBase&)>& visit_;
    std::vector<Subspace> chosen_;
};

}  // namespace

std::vector<Subspace> all_points(std::size_t ambient, Prime p) { return points_of(ambient, p); }

void bases_containing(std::size_t ambient, Prime p, const std::vector<PairElement>& x,
                      std::uint64_t budget, const std::function<bool(const ProjectiveBase&)>& visit) {
    for (const PairElement& e : x)
        if (e.s.ambient_dim() != ambient || e.s.modulus() != p.value())
            throw std::invalid_argument("bases_containing: constraint pair in the wrong space");
    BaseSearch(ambient, p, x, budget, visit).run();
}

std::uint64_t count_bases_containing(std::size_t ambient, Prime p,
                                     const std::vector<PairElement>& x, std::uint64_t limit,
                                     std::uint64_t budget) {
    std::uint64_t count = 0;
    bases_containing(ambient, p, x, budget, [&](const ProjectiveBase&) {
        ++count;
        return count < limit;
    });
    return count;
}

bool is_exact_bk(const BaseSubsetBk& bk, const std::vector<int>& x, std::uint64_t budget) {
    std::vector<PairElement> subs;
    for (int i : x) subs.push_back(bk.member(i));
    std::uint64_t found =
        count_bases_containing(bk.base().ambient_dim(), bk.base().point(0).prime(), subs, 2, budget);
    SYMPLECTA_CHECK(found >= 1, "subset of a base subset not contained in its own base");
    return found == 1;
}

bool is_maximal_inexact_bk(const BaseSubsetBk& bk, const std::vector<int>& x, std::uint64_t budget) {
    if (is_exact_bk(bk, x, budget)) return false;
    std::vector<bool> in_x(bk.size(), false);
    for (int i : x) in_x.at(i) = true;
    for (std::size_t u = 0; u < bk.size(); ++u) {
        if (in_x[u]) continue;
        std::vector<int> bigger = x;
        bigger.push_back(static_cast<int>(u));
        if (!is_exact_bk(bk, bigger, budget)) return false;
    }
    return true;
}

std::vector<std::vector<int>> maximal_inexact_subsets_bk(const BaseSubsetBk& bk,
                                                         std::uint64_t budget) {
    const std::size_t size = bk.size();
    if (size >= 63 || (std::uint64_t{1} << size) > budget)
        throw budget_error("maximal_inexact_subsets_bk refused: 2^" + std::to_string(size) +
                               " subsets exceed budget " + std::to_string(budget),
                           size < 63 ? (std::uint64_t{1} << size) : UINT64_MAX, budget);
    const std::uint64_t total = std::uint64_t{1} << size;
    std::vector<char> exact(total, 0);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<int> x;
        for (std::size_t i = 0; i < size; ++i)
            if (mask >> i & 1) x.push_back(static_cast<int>(i));
        exact[mask] = is_exact_bk(bk, x, budget) ? 1 : 0;
    }
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (exact[mask]) continue;
        bool maximal = true;
        for (std::size_t u = 0; u < size && maximal; ++u)
            if (!(mask >> u & 1)) maximal = exact[mask | (std::uint64_t{1} << u)];
        if (!maximal) continue;
        std::vector<int> x;
        for (std::size_t i = 0; i < size; ++i)
            if (mask >> i & 1) x.push_back(static_cast<int>(i));
        out.push_back(std::move(x));
    }
    return out;
}

Lemma1Result lemma1_check(const BaseSubsetBk& bk, std::uint64_t budget) {
    Lemma1Result result;
    const std::size_t size = bk.size();
    if (size >= 63 || (std::uint64_t{1} << size) > budget)
        throw budget_error("lemma1_check refused: 2^" + std::to_string(size) +
                               " subsets exceed budget " + std::to_string(budget),
                           size < 63 ? (std::uint64_t{1} << size) : UINT64_MAX, budget);

    // The candidate family: B_k(alpha) for alpha at level 2.
    std::set<std::vector<int>> alpha_sets;
    BaseSubsetBk level2 = BaseSubsetBk::build(bk.base(), 2);
    for (std::size_t a = 0; a < level2.size(); ++a) {
        auto set = bk_of_alpha(bk, level2.member(a), false);
        std::sort(set.begin(), set.end());
        alpha_sets.insert(std::move(set));
    }

    const std::uint64_t total = std::uint64_t{1} << size;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<int> x;
        for (std::size_t i = 0; i < size; ++i)
            if (mask >> i & 1) x.push_back(static_cast<int>(i));
        bool exact = is_exact_bk(bk, x, budget);
        result.subsets++;
        if (exact)
            result.exact++;
        else
            result.inexact++;
        bool maximal = !exact && is_maximal_inexact_bk(bk, x, budget);
        if (maximal) result.maximal_inexact++;
        bool is_alpha_set = alpha_sets.count(x) > 0;
        if (maximal != is_alpha_set) {
            result.pass = false;
            result.detail = "subset mask " + std::to_string(mask) +
                            (maximal ? " is maximal inexact but not of the form B_k(alpha)"
                                     : " has the form B_k(alpha) but is not maximal inexact");
            result.failing_subset = x;
            result.failing_is_maximal = maximal;
            result.failing_is_alpha_form = is_alpha_set;
            return result;
        }
    }
    return result;
}

namespace {

std::vector<int> image_sorted(const std::vector<int>& perm, const std::vector<int>& set) {
    std::vector<int> out;
    out.reserve(set.size());
    for (int i : set) out.push_back(perm.at(i));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

IncidenceTables make_incidence_tables_bk(const BaseSubsetBk& bk, std::uint64_t budget) {
    if (bk.k() < 2) throw std::invalid_argument("make_incidence_tables_bk: needs k >= 2");
    IncidenceTables tables;
    for (auto& mi : maximal_inexact_subsets_bk(bk, budget))
        tables.maximal_inexact.insert(std::move(mi));
    BaseSubsetBk low = BaseSubsetBk::build(bk.base(), bk.k() - 1);
    for (std::size_t j = 0; j < low.size(); ++j) {
        tables.low_sets.push_back(bk_of_alpha(bk, low.member(j), false));
        tables.low_plus_sets.push_back(bk_of_alpha(bk, low.member(j), true));
    }
    return tables;
}

MapCheckResult lemma2_check(const BaseSubsetBk& dom, const IncidenceTables& dom_tables,
                            const IncidenceTables& cod_tables, const std::vector<int>& g) {
    if (g.size() != dom.size())
        throw std::invalid_argument("lemma2_check: map size mismatch");

    std::vector<int> ginv(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) ginv.at(g[i]) = static_cast<int>(i);

    bool hypothesis = true;
    for (const auto& y : dom_tables.maximal_inexact)
        if (!cod_tables.maximal_inexact.count(image_sorted(g, y))) hypothesis = false;
    for (const auto& y : cod_tables.maximal_inexact)
        if (!dom_tables.maximal_inexact.count(image_sorted(ginv, y))) hypothesis = false;
    if (!hypothesis) return MapCheckResult{MapCheckStatus::inapplicable, "", 0};

    const bool plus_applies = dom.n() != 2 * dom.k();
    for (std::size_t i = 0; i < dom_tables.low_sets.size(); ++i) {
        std::vector<int> image = image_sorted(g, dom_tables.low_sets[i]);
        std::vector<int> plus_image = image_sorted(g, dom_tables.low_plus_sets[i]);
        bool found = false;
        for (std::size_t j = 0; j < cod_tables.low_sets.size() && !found; ++j) {
            if (cod_tables.low_sets[j] != image) continue;
            found = !plus_applies || cod_tables.low_plus_sets[j] == plus_image;
        }
        if (!found)
            return MapCheckResult{MapCheckStatus::fail,
                                  "B_k(alpha) for level-" + std::to_string(dom.k() - 1) +
                                      " member " + std::to_string(i) +
                                      " does not map onto any B_k(beta)",
                                  1};
    }
    return MapCheckResult{MapCheckStatus::pass, "", 1};
}

MapCheckResult lemma2_check(const BaseSubsetBk& dom, const BaseSubsetBk& cod,
                            const std::vector<int>& g, std::uint64_t budget) {
    if (g.size() != dom.size() || dom.size() != cod.size())
        throw std::invalid_argument("lemma2_check: map size mismatch");
    return lemma2_check(dom, make_incidence_tables_bk(dom, budget),
                        make_incidence_tables_bk(cod, budget), g);
}

BmBridge::BmBridge(const SymplecticSpace& space, const BaseSubsetH1& source, std::uint32_t m)
    : level_(BaseSubsetHk::expand(space, source, m)) {}

Subspace BmBridge::image_of_index_set(const std::vector<int>& sorted_combo) const {
    int idx = level_.index_of_combo(sorted_combo);
    if (idx < 0) throw std::invalid_argument("BmBridge: not a valid index set");
    return level_.member(idx);
}

std::vector<int> BmBridge::preimage(const Subspace& member) const {
    int idx = level_.index_of(member);
    if (idx < 0) throw std::invalid_argument("BmBridge: subspace is not a level member");
    return level_.combo(idx);
}

std::vector<int> BmBridge::map_members(const BaseSubsetBk& bk) const {
    if (bk.n() != level_.n() || bk.k() != level_.k())
        throw std::invalid_argument("BmBridge: base subset has different (n, k)");
    std::vector<int> out(bk.size());
    for (std::size_t i = 0; i < bk.size(); ++i) {
        int idx = level_.index_of_combo(bk.combo(i));
        SYMPLECTA_CHECK(idx >= 0, "bridge combo lookup failed");
        out[i] = idx;
    }
    return out;
}

}  // namespace symplecta
