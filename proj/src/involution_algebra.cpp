#include "symplecta/involution_algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace symplecta {

namespace {

void require_odd(const SymplecticSpace& space, const char* what) {
    if (!space.prime().is_odd())
        throw characteristic_error(std::string(what) +
                                   ": involutions need characteristic different from 2");
}

}  // namespace

Involution Involution::from_matrix(const SymplecticSpace& space, const Matrix& m) {
    require_odd(space, "Involution::from_matrix");
    if (m.rows() != space.dim() || m.cols() != space.dim())
        throw std::invalid_argument("Involution: matrix is not 2n x 2n");
    if (!(m * m).is_identity())
        throw std::domain_error("Involution: matrix does not square to the identity");
    auto cls = classify_group_element(space, m);
    if (!cls || cls->kind != GroupKind::symplectic)
        throw std::domain_error("Involution: matrix does not preserve the form");

    Matrix id = Matrix::identity(space.dim(), space.prime());
    Subspace plus = kernel(m + (-id));   // fixed vectors
    Subspace minus = kernel(m + id);     // negated vectors
    SYMPLECTA_CHECK(plus.dim() + minus.dim() == space.dim(),
                    "involution eigenspaces do not fill V");
    SYMPLECTA_CHECK(minus == space.perp(plus), "S_- is not the perp of S_+");
    SYMPLECTA_CHECK(space.is_nondegenerate(plus) && space.is_nondegenerate(minus),
                    "involution eigenspace is degenerate");
    SYMPLECTA_CHECK(plus.dim() % 2 == 0, "S_+ has odd dimension");
    return Involution(m, std::move(plus), std::move(minus),
                      static_cast<std::uint32_t>(plus.dim() / 2));
}

Involution involution_from_subspace(const SymplecticSpace& space, const Subspace& s) {
    require_odd(space, "involution_from_subspace");
    if (s.ambient_dim() != space.dim())
        throw std::invalid_argument("involution_from_subspace: ambient dimension mismatch");
    if (s.dim() % 2 != 0 || !space.is_nondegenerate(s))
        throw std::domain_error("involution_from_subspace: subspace must be non-degenerate");

    Subspace sp = space.perp(s);
    // Columns of P list a basis of S then of S^perp; u = P D P^{-1} with
    // D = diag(+1 on S, -1 on S^perp).
    const std::size_t d = space.dim();
    Matrix pt(d, d, space.prime());
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t c = 0; c < d; ++c) pt.set(r, c, s.basis().at(r, c));
    for (std::size_t r = 0; r < sp.dim(); ++r)
        for (std::size_t c = 0; c < d; ++c) pt.set(s.dim() + r, c, sp.basis().at(r, c));
    Matrix p = pt.transpose();
    Matrix diag(d, d, space.prime());
    const std::uint32_t minus_one = space.modulus() - 1;
    for (std::size_t i = 0; i < d; ++i) diag.set(i, i, i < s.dim() ? 1 : minus_one);
    Matrix u = p * diag * p.inverse();
    Involution result = Involution::from_matrix(space, u);
    SYMPLECTA_CHECK(result.s_plus() == s, "constructed involution has wrong fixed space");
    return result;
}

Involution negate(const SymplecticSpace& space, const Involution& u) {
    return Involution::from_matrix(space, -u.matrix());
}

bool commutes(const Involution& u, const Involution& v) {
    if (u.matrix().modulus() != v.matrix().modulus() || u.matrix().rows() != v.matrix().rows())
        throw std::invalid_argument("commutes: involutions live on different spaces");
    return u.matrix() * v.matrix() == v.matrix() * u.matrix();
}

std::vector<Involution> all_involutions(const SymplecticSpace& space, std::uint32_t k,
                                        std::uint64_t budget) {
    require_odd(space, "all_involutions");
    HkFamily fam = HkFamily::build(space, k, budget);
    std::vector<Involution> out;
    out.reserve(fam.size());
    for (const Subspace& s : fam.members()) out.push_back(involution_from_subspace(space, s));
    return out;
}

bool is_mc_subset(const std::vector<Involution>& x, const std::vector<Involution>& universe) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (!commutes(x[i], x[j])) return false;
    for (const Involution& u : universe) {
        bool inside = false;
        for (const Involution& v : x) inside |= u == v;
        if (inside) continue;
        bool commutes_with_all = true;
        for (const Involution& v : x) commutes_with_all &= commutes(u, v);
        if (commutes_with_all) return false;  // X extends, so not maximal
    }
    return true;
}

namespace {

// Bron-Kerbosch with pivoting over the commutation graph; deterministic
// because candidate sets are processed in index order.
void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<int>& r,
                   std::vector<int> p, std::vector<int> x, Budget& budget,
                   std::vector<std::vector<int>>& out) {
    budget.charge();
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    int pivot = p.empty() ? x.front() : p.front();
    std::vector<int> branch;
    for (int v : p)
        if (!adj[pivot][v]) branch.push_back(v);
    for (int v : branch) {
        std::vector<int> p2, x2;
        for (int w : p)
            if (adj[v][w]) p2.push_back(w);
        for (int w : x)
            if (adj[v][w]) x2.push_back(w);
        r.push_back(v);
        bron_kerbosch(adj, r, std::move(p2), std::move(x2), budget, out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

}  // namespace

std::vector<std::vector<int>> maximal_commuting_sets(const std::vector<Involution>& universe,
                                                     std::uint64_t budget_limit) {
    const std::size_t n = universe.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            adj[i][j] = adj[j][i] = commutes(universe[i], universe[j]);
    Budget budget(budget_limit);
    std::vector<int> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
    std::vector<int> r;
    std::vector<std::vector<int>> out;
    bron_kerbosch(adj, r, std::move(all), {}, budget, out);
    for (auto& clique : out) std::sort(clique.begin(), clique.end());
    std::sort(out.begin(), out.end());
    return out;
}

Involution conjugate(const SymplecticSpace& space, const GroupElement& l, const Involution& u) {
    Matrix m = l.matrix * u.matrix() * l.matrix.inverse();
    Involution result = Involution::from_matrix(space, m);
    SYMPLECTA_CHECK(result.s_plus() == l.apply(u.s_plus()),
                    "conjugation moved the fixed space incorrectly");
    return result;
}

}  // namespace symplecta
