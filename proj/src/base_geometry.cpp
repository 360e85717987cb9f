#include "symplecta/base_geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace symplecta {

std::vector<std::vector<int>> combinations(std::uint32_t n, std::uint32_t k) {
    std::vector<std::vector<int>> out;
    if (k > n) return out;
    std::vector<int> c(k);
    for (std::uint32_t i = 0; i < k; ++i) c[i] = static_cast<int>(i);
    while (true) {
        out.push_back(c);
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && c[i] == static_cast<int>(n - k) + i) --i;
        if (i < 0) break;
        ++c[i];
        for (std::uint32_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

std::uint64_t binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint32_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

SymplecticBase make_symplectic_base(const SymplecticSpace& space, std::vector<Subspace> points) {
    const std::size_t m = space.dim();
    if (points.size() != m)
        throw std::invalid_argument("symplectic base needs exactly 2n points");
    std::vector<Vec> reps;
    for (const Subspace& p : points) {
        if (p.ambient_dim() != m || p.dim() != 1)
            throw std::invalid_argument("symplectic base: entries must be points of P(V)");
        reps.push_back(p.basis().row_vec(0));
    }
    if (Subspace::span(m, space.prime(), reps).dim() != m)
        throw std::invalid_argument("symplectic base: points are not independent");
    std::vector<int> sigma(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        int partner = -1;
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            if (space.omega_raw(reps[i], reps[j]) != 0) {
                if (partner >= 0)
                    throw std::invalid_argument("symplectic base: point " + std::to_string(i) +
                                                " has several non-orthogonal partners");
                partner = static_cast<int>(j);
            }
        }
        if (partner < 0)
            throw std::invalid_argument("symplectic base: point " + std::to_string(i) +
                                        " is orthogonal to every other point");
        sigma[i] = partner;
    }
    for (std::size_t i = 0; i < m; ++i)
        SYMPLECTA_CHECK(sigma[static_cast<std::size_t>(sigma[i])] == static_cast<int>(i),
                        "sigma is not involutive");
    return SymplecticBase{std::move(points), std::move(sigma)};
}

// Grants the enumeration code access to the unchecked constructor.
struct BaseSubsetAccess {
    static BaseSubsetH1 make_sorted(std::vector<Subspace> lines) {
        return BaseSubsetH1(std::move(lines));
    }
};

bool is_base_subset_h1(const SymplecticSpace& space, const std::vector<Subspace>& lines) {
    if (lines.size() != space.n()) return false;
    for (const Subspace& l : lines) {
        if (l.ambient_dim() != space.dim() || l.dim() != 2) return false;
        if (space.line_kind(l) != SymplecticSpace::LineKind::hyperbolic) return false;
    }
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i] == lines[j]) return false;
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b)
                    if (space.omega_raw(lines[i].basis().row_vec(a), lines[j].basis().row_vec(b)) != 0)
                        return false;
        }
    Subspace total = space.zero_space();
    for (const Subspace& l : lines) total = sum(total, l);
    return total.dim() == space.dim();
}

BaseSubsetH1 BaseSubsetH1::create(const SymplecticSpace& space, std::vector<Subspace> lines) {
    std::sort(lines.begin(), lines.end());
    if (!is_base_subset_h1(space, lines))
        throw std::invalid_argument(
            "BaseSubsetH1: lines are not a pairwise-orthogonal hyperbolic decomposition of V");
    return BaseSubsetH1(std::move(lines));
}

int BaseSubsetH1::index_of_line(const Subspace& s) const {
    for (std::size_t i = 0; i < lines_.size(); ++i)
        if (lines_[i] == s) return static_cast<int>(i);
    return -1;
}

bool BaseSubsetH1::operator<(const BaseSubsetH1& o) const {
    return std::lexicographical_compare(lines_.begin(), lines_.end(), o.lines_.begin(),
                                        o.lines_.end());
}

std::size_t BaseSubsetH1::Hash::operator()(const BaseSubsetH1& b) const noexcept {
    std::size_t h = 14695981039346656037ull;
    Subspace::Hash sh;
    for (const Subspace& l : b.lines()) {
        h ^= sh(l);
        h *= 1099511628211ull;
    }
    return h;
}

BaseSubsetH1 base_subset_from_base(const SymplecticSpace& space, const SymplecticBase& base) {
    std::vector<Subspace> lines;
    std::vector<bool> used(base.points.size(), false);
    for (std::size_t i = 0; i < base.points.size(); ++i) {
        if (used[i]) continue;
        std::size_t j = static_cast<std::size_t>(base.sigma[i]);
        used[i] = used[j] = true;
        lines.push_back(sum(base.points[i], base.points[j]));
    }
    return BaseSubsetH1::create(space, std::move(lines));
}

BaseSubsetH1 random_base_subset(const SymplecticSpace& space, Rng& rng) {
    auto pairs = random_symplectic_basis(space, rng);
    std::vector<Subspace> lines;
    for (const auto& [v, w] : pairs)
        lines.push_back(Subspace::span(space.dim(), space.prime(), {v, w}));
    return BaseSubsetH1::create(space, std::move(lines));
}

BaseSubsetH1 random_base_subset(const SymplecticSpace& space, std::uint64_t seed) {
    Rng rng(seed);
    return random_base_subset(space, rng);
}

namespace {

using u128 = unsigned __int128;

// Hyperbolic lines in GF(p)^{2i}: (p^{2i}-1) p^{2i-1} / ((p^2-1) p).
u128 hyperbolic_line_count(std::uint32_t i, std::uint64_t p) {
    u128 pk = 1;
    for (std::uint32_t t = 0; t < 2 * i; ++t) pk *= p;
    u128 num = (pk - 1) * (pk / p);
    u128 den = (static_cast<u128>(p) * p - 1) * p;
    return num / den;
}

}  // namespace

std::uint64_t decomposition_count(std::uint32_t n, Prime prime, std::uint64_t cap) {
    const std::uint64_t p = prime.value();
    const u128 huge = static_cast<u128>(-1) / (1u << 30);
    u128 prod = 1;
    bool saturated = false;
    for (std::uint32_t i = 1; i <= n; ++i) {
        u128 h = hyperbolic_line_count(i, p);
        if (prod > huge / h) {
            saturated = true;
            break;
        }
        prod *= h;
    }
    u128 fact = 1;
    for (std::uint32_t i = 2; i <= n; ++i) fact *= i;
    if (saturated) return cap == UINT64_MAX ? UINT64_MAX : cap + 1;
    u128 count = prod / fact;
    if (count > cap) return cap == UINT64_MAX ? UINT64_MAX : cap + 1;
    return static_cast<std::uint64_t>(count);
}

namespace {

// Depth-first construction of orthogonal hyperbolic-line decompositions.
// Lines are added in strictly increasing canonical order, so every unordered
// decomposition is produced exactly once, through its sorted line sequence.
class DecompositionSearch {
public:
    DecompositionSearch(const SymplecticSpace& space, std::vector<std::pair<Subspace, Subspace>> constraints,
                        std::uint64_t budget, const std::function<bool(const BaseSubsetH1&)>& visit)
        : space_(space), constraints_(std::move(constraints)), budget_(budget), visit_(visit) {}

    void run() {
        chosen_.reserve(space_.n());
        descend(space_.full_space(), nullptr);
    }

private:
    // Hyperbolic lines of the residual space, greater than `last`, compatible
    // with every constraint; ambient canonical order. With constraints the
    // first pair (U, U^perp) already confines candidates to two slices of the
    // residual, which shrinks the pattern enumeration dramatically.
    std::vector<Subspace> candidates(const Subspace& residual, const Subspace* last) {
        std::vector<Subspace> out;
        if (residual.dim() < 2) return out;
        auto consider = [&](Subspace line) {
            if (space_.omega_raw(line.basis().row_vec(0), line.basis().row_vec(1)) == 0) return;
            if (last && !(*last < line)) return;
            for (const auto& [u, uperp] : constraints_)
                if (!u.contains(line) && !uperp.contains(line)) return;
            out.push_back(std::move(line));
        };
        const std::uint64_t remaining =
            budget_.limit() > budget_.used() ? budget_.limit() - budget_.used() : 0;
        if (constraints_.empty()) {
            const bool ambient = residual.dim() == space_.dim();
            enumerate_subspaces(residual.dim(), 2, space_.prime(), remaining,
                                [&](const Subspace& pattern) {
                                    consider(ambient ? pattern
                                                     : Subspace::row_space(pattern.basis() *
                                                                           residual.basis()));
                                    return true;
                                });
            // Patterns arrive in canonical order already when the residual is
            // the whole space.
            if (!ambient) std::sort(out.begin(), out.end());
            return out;
        }
        for (const Subspace* side : {&constraints_.front().first, &constraints_.front().second}) {
            Subspace slice = intersect(*side, residual);
            if (slice.dim() < 2) continue;
            enumerate_subspaces(slice.dim(), 2, space_.prime(), remaining,
                                [&](const Subspace& pattern) {
                                    consider(Subspace::row_space(pattern.basis() * slice.basis()));
                                    return true;
                                });
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Returns false when the visitor stopped the stream.
    bool descend(const Subspace& residual, const Subspace* last) {
        if (chosen_.size() == space_.n()) {
            budget_.charge();
            return visit_(BaseSubsetAccess::make_sorted(chosen_));
        }
        for (const Subspace& line : candidates(residual, last)) {
            budget_.charge();
            chosen_.push_back(line);
            Subspace next = space_.perp_within(residual, line);
            bool keep_going = descend(next, &chosen_.back());
            chosen_.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }

    const SymplecticSpace& space_;
    std::vector<std::pair<Subspace, Subspace>> constraints_;
    Budget budget_;
    const std::function<bool(const BaseSubsetH1&)>& visit_;
    std::vector<Subspace> chosen_;
};

}  // namespace

void enumerate_base_subsets(const SymplecticSpace& space, std::uint64_t budget,
                            const std::function<bool(const BaseSubsetH1&)>& visit) {
    std::uint64_t count = decomposition_count(space.n(), space.prime(), budget);
    if (count > budget)
        throw budget_error("enumerate_base_subsets refused: " + std::to_string(count) +
                               (count > budget ? "+" : "") + " decompositions exceed budget " +
                               std::to_string(budget),
                           count, budget);
    DecompositionSearch(space, {}, budget, visit).run();
}

void base_subsets_containing(const SymplecticSpace& space, const std::vector<Subspace>& x,
                             std::uint64_t budget,
                             const std::function<bool(const BaseSubsetH1&)>& visit) {
    std::vector<std::pair<Subspace, Subspace>> constraints;
    for (const Subspace& u : x) {
        if (u.ambient_dim() != space.dim() || !space.is_nondegenerate(u) || u.dim() % 2 != 0 ||
            u.dim() == 0)
            throw std::invalid_argument("base_subsets_containing: constraint subspace is not in H_k");
        constraints.emplace_back(u, space.perp(u));
    }
    DecompositionSearch(space, std::move(constraints), budget, visit).run();
}

std::uint64_t count_base_subsets_containing(const SymplecticSpace& space,
                                            const std::vector<Subspace>& x, std::uint64_t limit,
                                            std::uint64_t budget) {
    std::uint64_t count = 0;
    base_subsets_containing(space, x, budget, [&](const BaseSubsetH1&) {
        ++count;
        return count < limit;
    });
    return count;
}

bool is_base_subset_hk(const SymplecticSpace& space, const std::vector<Subspace>& members,
                       std::uint32_t k, std::uint64_t budget) {
    if (k == 1) return is_base_subset_h1(space, members);
    if (members.size() != binomial(space.n(), k)) return false;
    for (const Subspace& m : members)
        if (m.dim() != 2 * k || !space.is_nondegenerate(m)) return false;
    bool matches = false;
    base_subsets_containing(space, members, budget, [&](const BaseSubsetH1& d) {
        BaseSubsetHk expansion = BaseSubsetHk::expand(space, d, k);
        std::size_t hit = 0;
        for (const Subspace& m : members) hit += expansion.index_of(m) >= 0 ? 1 : 0;
        matches = hit == members.size() && members.size() == expansion.size();
        return false;  // one containing decomposition settles it
    });
    return matches;
}

BaseSubsetHk BaseSubsetHk::expand(const SymplecticSpace& space, const BaseSubsetH1& source,
                                  std::uint32_t k) {
    const std::uint32_t n = static_cast<std::uint32_t>(source.n());
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("BaseSubsetHk: k must satisfy 1 <= k <= n-1");
    BaseSubsetHk hk(space, source, k);
    hk.combos_ = combinations(n, k);
    for (const auto& combo : hk.combos_) {
        Subspace member = space.zero_space();
        for (int i : combo) member = sum(member, source.line(i));
        SYMPLECTA_CHECK(member.dim() == 2 * k, "expansion member has wrong dimension");
        hk.index_.emplace(member, static_cast<int>(hk.members_.size()));
        hk.members_.push_back(std::move(member));
    }
    return hk;
}

int BaseSubsetHk::index_of(const Subspace& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

int BaseSubsetHk::index_of_combo(const std::vector<int>& sorted_combo) const {
    for (std::size_t i = 0; i < combos_.size(); ++i)
        if (combos_[i] == sorted_combo) return static_cast<int>(i);
    return -1;
}

int BaseSubsetHk::complement_index(int i) const {
    SYMPLECTA_CHECK(n() == 2 * k_, "complement_index needs n = 2k");
    const auto& c = combos_.at(i);
    std::vector<int> comp;
    for (std::uint32_t j = 0; j < n(); ++j)
        if (std::find(c.begin(), c.end(), static_cast<int>(j)) == c.end())
            comp.push_back(static_cast<int>(j));
    int idx = index_of_combo(comp);
    SYMPLECTA_CHECK(idx >= 0, "complement combo missing from expansion");
    return idx;
}

std::optional<Subspace> u_i(const BaseSubsetHk& hk, const std::vector<int>& x, std::size_t i) {
    const Subspace& line = hk.source().line(i);
    std::optional<Subspace> acc;
    for (int idx : x) {
        const Subspace& member = hk.member(idx);
        if (!member.contains(line)) continue;
        acc = acc ? intersect(*acc, member) : member;
    }
    return acc;
}

std::vector<int> s_k_of_m(const BaseSubsetHk& hk, const Subspace& m, bool plus_only) {
    // M must be a sum of source lines (a member of some level of this source).
    std::vector<int> lines_inside;
    Subspace rebuilt = hk.space().zero_space();
    for (std::size_t i = 0; i < hk.source().n(); ++i)
        if (m.contains(hk.source().line(i))) {
            lines_inside.push_back(static_cast<int>(i));
            rebuilt = sum(rebuilt, hk.source().line(i));
        }
    if (rebuilt != m || m.dim() == 0)
        throw std::invalid_argument("s_k_of_m: M is not a member of this source's base subsets");
    Subspace mperp = hk.space().perp(m);
    auto incident = [](const Subspace& a, const Subspace& b) {
        return a.contains(b) || b.contains(a);
    };
    std::vector<int> out;
    for (std::size_t i = 0; i < hk.size(); ++i) {
        const Subspace& u = hk.member(i);
        if (incident(u, m) || (!plus_only && incident(u, mperp)))
            out.push_back(static_cast<int>(i));
    }
    return out;
}

bool is_exact(const BaseSubsetHk& hk, const std::vector<int>& x, std::uint64_t budget) {
    std::vector<Subspace> subs;
    for (int i : x) subs.push_back(hk.member(i));
    std::uint64_t found = count_base_subsets_containing(hk.space(), subs, 2, budget);
    SYMPLECTA_CHECK(found >= 1, "subset of an expansion not contained in its own source");
    return found == 1;
}

ExactnessVerdict exactness_verdict(const BaseSubsetHk& hk, const std::vector<int>& x,
                                   std::uint64_t budget) {
    std::vector<Subspace> subs;
    for (int i : x) subs.push_back(hk.member(i));
    ExactnessVerdict verdict{true, {}};
    base_subsets_containing(hk.space(), subs, budget, [&](const BaseSubsetH1& d) {
        verdict.witnesses.push_back(d);
        return verdict.witnesses.size() < 2;
    });
    SYMPLECTA_CHECK(!verdict.witnesses.empty(),
                    "subset of an expansion not contained in its own source");
    verdict.exact = verdict.witnesses.size() == 1;
    return verdict;
}

bool is_maximal_inexact(const BaseSubsetHk& hk, const std::vector<int>& x, std::uint64_t budget) {
    if (is_exact(hk, x, budget)) return false;
    std::vector<bool> in_x(hk.size(), false);
    for (int i : x) in_x.at(i) = true;
    for (std::size_t u = 0; u < hk.size(); ++u) {
        if (in_x[u]) continue;
        std::vector<int> bigger = x;
        bigger.push_back(static_cast<int>(u));
        if (!is_exact(hk, bigger, budget)) return false;
    }
    return true;
}

bool lemma3_check(const BaseSubsetHk& hk, const std::vector<int>& x, std::uint64_t budget) {
    std::size_t violations = 0;
    for (std::size_t i = 0; i < hk.source().n(); ++i) {
        auto ui = u_i(hk, x, i);
        if (!ui || *ui != hk.source().line(i)) ++violations;
    }
    if (violations > 1) return true;  // premise fails, implication vacuous
    return is_exact(hk, x, budget);
}

std::vector<std::vector<int>> maximal_inexact_subsets(const BaseSubsetHk& hk, std::uint64_t budget) {
    const std::size_t size = hk.size();
    if (size >= 63 || (std::uint64_t{1} << size) > budget)
        throw budget_error("maximal_inexact_subsets refused: 2^" + std::to_string(size) +
                               " subsets exceed budget " + std::to_string(budget),
                           size < 63 ? (std::uint64_t{1} << size) : UINT64_MAX, budget);
    const std::uint64_t total = std::uint64_t{1} << size;
    std::vector<char> exact(total, 0);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<int> x;
        for (std::size_t i = 0; i < size; ++i)
            if (mask >> i & 1) x.push_back(static_cast<int>(i));
        exact[mask] = is_exact(hk, x, budget) ? 1 : 0;
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

namespace {

std::vector<int> image_sorted(const std::vector<int>& perm, const std::vector<int>& set) {
    std::vector<int> out;
    out.reserve(set.size());
    for (int i : set) out.push_back(perm.at(i));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

IncidenceTables make_incidence_tables(const BaseSubsetHk& hk, std::uint64_t budget) {
    if (hk.k() < 2) throw std::invalid_argument("make_incidence_tables: needs k >= 2");
    IncidenceTables tables;
    for (auto& mi : maximal_inexact_subsets(hk, budget)) tables.maximal_inexact.insert(std::move(mi));
    BaseSubsetHk low = BaseSubsetHk::expand(hk.space(), hk.source(), hk.k() - 1);
    for (std::size_t j = 0; j < low.size(); ++j) {
        tables.low_sets.push_back(s_k_of_m(hk, low.member(j), false));
        tables.low_plus_sets.push_back(s_k_of_m(hk, low.member(j), true));
    }
    return tables;
}

MapCheckResult lemma5_check(const BaseSubsetHk& dom, const IncidenceTables& dom_tables,
                            const IncidenceTables& cod_tables, const std::vector<int>& h) {
    if (h.size() != dom.size())
        throw std::invalid_argument("lemma5_check: map size mismatch");

    std::vector<int> hinv(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) hinv.at(h[i]) = static_cast<int>(i);

    bool hypothesis = true;
    for (const auto& y : dom_tables.maximal_inexact)
        if (!cod_tables.maximal_inexact.count(image_sorted(h, y))) hypothesis = false;
    for (const auto& y : cod_tables.maximal_inexact)
        if (!dom_tables.maximal_inexact.count(image_sorted(hinv, y))) hypothesis = false;
    if (!hypothesis) return MapCheckResult{MapCheckStatus::inapplicable, "", 0};

    const bool plus_applies = dom.n() != 2 * dom.k();
    for (std::size_t i = 0; i < dom_tables.low_sets.size(); ++i) {
        std::vector<int> image = image_sorted(h, dom_tables.low_sets[i]);
        std::vector<int> plus_image = image_sorted(h, dom_tables.low_plus_sets[i]);
        bool found = false;
        for (std::size_t j = 0; j < cod_tables.low_sets.size() && !found; ++j) {
            if (cod_tables.low_sets[j] != image) continue;
            found = !plus_applies || cod_tables.low_plus_sets[j] == plus_image;
        }
        if (!found)
            return MapCheckResult{MapCheckStatus::fail,
                                  "incidence set of level-" + std::to_string(dom.k() - 1) +
                                      " member " + std::to_string(i) +
                                      " does not map onto any incidence set",
                                  1};
    }
    return MapCheckResult{MapCheckStatus::pass, "", 1};
}

MapCheckResult lemma5_check(const BaseSubsetHk& dom, const BaseSubsetHk& cod,
                            const std::vector<int>& h, std::uint64_t budget) {
    if (h.size() != dom.size() || dom.size() != cod.size())
        throw std::invalid_argument("lemma5_check: map size mismatch");
    return lemma5_check(dom, make_incidence_tables(dom, budget),
                        make_incidence_tables(cod, budget), h);
}

}  // namespace symplecta
