#include "symplecta/hyperbolic_grassmannian.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace symplecta {

HkFamily HkFamily::build(const SymplecticSpace& space, std::uint32_t k, std::uint64_t budget) {
    if (k < 1 || k > space.n() - 1)
        throw std::invalid_argument("HkFamily: k must satisfy 1 <= k <= n-1");
    HkFamily fam(space, k);
    enumerate_subspaces(space.dim(), 2 * k, space.prime(), budget, [&](const Subspace& s) {
        if (fam.space_.is_nondegenerate(s)) {
            fam.index_.emplace(s, static_cast<int>(fam.members_.size()));
            fam.members_.push_back(s);
        }
        return true;
    });
    return fam;
}

int HkFamily::index_of(const Subspace& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

int HkFamily::require_index(const Subspace& s) const {
    int i = index_of(s);
    SYMPLECTA_CHECK(i >= 0, "subspace expected in H_k family but not found");
    return i;
}

ExplicitMap ExplicitMap::identity(const HkFamily& fam) {
    ExplicitMap m{&fam, &fam, std::vector<int>(fam.size())};
    for (std::size_t i = 0; i < fam.size(); ++i) m.image[i] = static_cast<int>(i);
    return m;
}

const Subspace& ExplicitMap::apply(const Subspace& s) const {
    int i = domain->index_of(s);
    if (i < 0) throw std::invalid_argument("ExplicitMap: subspace is not in the domain family");
    return codomain->member(image[i]);
}

bool ExplicitMap::is_bijection() const {
    if (image.size() != domain->size() || domain->size() != codomain->size()) return false;
    std::vector<bool> hit(image.size(), false);
    for (int v : image) {
        if (v < 0 || v >= static_cast<int>(image.size()) || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

bool ExplicitMap::is_identity() const {
    if (domain != codomain) return false;
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] != static_cast<int>(i)) return false;
    return true;
}

ExplicitMap ExplicitMap::inverse() const {
    SYMPLECTA_CHECK(is_bijection(), "inverse of a non-bijective ExplicitMap");
    ExplicitMap inv{codomain, domain, std::vector<int>(image.size())};
    for (std::size_t i = 0; i < image.size(); ++i) inv.image[image[i]] = static_cast<int>(i);
    return inv;
}

ExplicitMap compose(const ExplicitMap& g, const ExplicitMap& f) {
    if (f.codomain != g.domain)
        throw std::invalid_argument("compose: middle families do not match");
    ExplicitMap out{f.domain, g.codomain, std::vector<int>(f.image.size())};
    for (std::size_t i = 0; i < f.image.size(); ++i) out.image[i] = g.image[f.image[i]];
    return out;
}

ExplicitMap p_k_map(const HkFamily& from, const HkFamily& to) {
    const SymplecticSpace& space = from.space();
    if (to.k() != space.n() - from.k())
        throw std::invalid_argument("p_k_map: codomain family must sit at level n-k");
    ExplicitMap m{&from, &to, std::vector<int>(from.size())};
    for (std::size_t i = 0; i < from.size(); ++i)
        m.image[i] = to.require_index(space.perp(from.member(i)));
    return m;
}

ExplicitMap induced_map(const HkFamily& fam, const GroupElement& l) {
    ExplicitMap m{&fam, &fam, std::vector<int>(fam.size())};
    for (std::size_t i = 0; i < fam.size(); ++i)
        m.image[i] = fam.require_index(l.apply(fam.member(i)));
    return m;
}

std::vector<int> incidence_set(const HkFamily& fam, const Subspace& t, bool plus_only) {
    if (!fam.space().is_nondegenerate(t))
        throw std::domain_error("incidence_set: T is degenerate");
    Subspace tp = fam.space().perp(t);
    auto incident = [](const Subspace& a, const Subspace& b) {
        return a.contains(b) || b.contains(a);
    };
    std::vector<int> out;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const Subspace& u = fam.member(i);
        if (incident(u, t) || (!plus_only && incident(u, tp)))
            out.push_back(static_cast<int>(i));
    }
    return out;
}

ExplicitMap flip_map(const HkFamily& fam, const std::vector<int>& x) {
    const SymplecticSpace& space = fam.space();
    if (space.n() != 2 * fam.k())
        throw std::domain_error("flip_map: requires n = 2k");
    std::vector<bool> in_x(fam.size(), false);
    for (int i : x) in_x.at(i) = true;
    ExplicitMap m = ExplicitMap::identity(fam);
    for (int i : x) {
        int j = fam.require_index(space.perp(fam.member(i)));
        if (!in_x[j])
            throw std::invalid_argument("flip_map: index set is not closed under perp");
        m.image[i] = j;
    }
    return m;
}

PairFamilyBar PairFamilyBar::build(const HkFamily& fam) {
    const SymplecticSpace& space = fam.space();
    if (space.n() != 2 * fam.k())
        throw std::domain_error("PairFamilyBar: requires n = 2k");
    PairFamilyBar bar;
    bar.family_ = &fam;
    bar.member_pair_.assign(fam.size(), -1);
    for (std::size_t i = 0; i < fam.size(); ++i) {
        if (bar.member_pair_[i] >= 0) continue;
        int j = fam.require_index(space.perp(fam.member(i)));
        // U = U^perp would need U degenerate, impossible here.
        SYMPLECTA_CHECK(j != static_cast<int>(i), "self-paired member in PairFamilyBar");
        int idx = static_cast<int>(bar.pairs_.size());
        bar.pairs_.emplace_back(static_cast<int>(i), j);
        bar.member_pair_[i] = idx;
        bar.member_pair_[j] = idx;
    }
    return bar;
}

std::vector<int> bar_quotient(const PairFamilyBar& bar, const ExplicitMap& f) {
    if (f.domain != &bar.family() || f.codomain != &bar.family())
        throw std::invalid_argument("bar_quotient: map does not act on the quotient's family");
    std::vector<int> out(bar.size(), -1);
    for (std::size_t i = 0; i < bar.size(); ++i) {
        auto [a, b] = bar.pair(i);
        int fa = bar.pair_index_of_member(f.apply_index(a));
        int fb = bar.pair_index_of_member(f.apply_index(b));
        if (fa != fb)
            throw std::invalid_argument("bar_quotient: map does not descend to perp-pairs");
        out[i] = fa;
    }
    return out;
}

std::vector<int> induced_bar_map(const PairFamilyBar& bar, const GroupElement& l) {
    return bar_quotient(bar, induced_map(bar.family(), l));
}

}  // namespace symplecta
