#include "symplecta/symplectic_core.hpp"

#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace symplecta {

SymplecticSpace::SymplecticSpace(std::uint32_t n, Prime p) : n_(n), gram_(2 * n, 2 * n, p) {
    if (n < 1) throw std::invalid_argument("SymplecticSpace: n must be at least 1");
    const std::uint32_t minus_one = p.value() - 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        gram_.set(2 * i, 2 * i + 1, 1);
        gram_.set(2 * i + 1, 2 * i, minus_one);
    }
}

std::uint32_t SymplecticSpace::omega_raw(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim())
        throw std::invalid_argument("omega: vector length mismatch");
    const std::uint32_t p = modulus();
    std::uint64_t plus = 0, minus = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        plus += static_cast<std::uint64_t>(x[2 * i]) * y[2 * i + 1];
        minus += static_cast<std::uint64_t>(x[2 * i + 1]) * y[2 * i];
    }
    return sub_mod(static_cast<std::uint32_t>(plus % p), static_cast<std::uint32_t>(minus % p), p);
}

Scalar SymplecticSpace::omega(const Vec& x, const Vec& y) const {
    return Scalar(omega_raw(x, y), prime());
}

Subspace SymplecticSpace::perp(const Subspace& s) const {
    if (s.ambient_dim() != dim())
        throw std::invalid_argument("perp: ambient dimension mismatch");
    if (s.dim() == 0) return full_space();
    return kernel(s.basis() * gram_);
}

Matrix SymplecticSpace::restricted_gram(const Subspace& s) const {
    return s.basis() * gram_ * s.basis().transpose();
}

bool SymplecticSpace::is_nondegenerate(const Subspace& s) const {
    if (s.ambient_dim() != dim())
        throw std::invalid_argument("is_nondegenerate: ambient dimension mismatch");
    if (s.dim() == 0) return true;
    auto [red, rank] = rref(restricted_gram(s));
    (void)red;
    if (rank != s.dim()) return false;
    SYMPLECTA_CHECK(s.dim() % 2 == 0, "non-degenerate subspace with odd dimension");
    return true;
}

SymplecticSpace::LineKind SymplecticSpace::line_kind(const Subspace& line) const {
    if (line.dim() != 2)
        throw std::invalid_argument("line_kind: expected a 2-dimensional subspace, got dimension " +
                                    std::to_string(line.dim()));
    // For a plane span{a, b} non-degeneracy is a single form evaluation.
    return omega_raw(line.basis().row_vec(0), line.basis().row_vec(1)) != 0
               ? LineKind::hyperbolic
               : LineKind::isotropic;
}

Subspace SymplecticSpace::perp_within(const Subspace& inside, const Subspace& s) const {
    Subspace ann = kernel(inside.basis());
    Matrix constraints(ann.dim() + s.dim(), dim(), prime());
    for (std::size_t r = 0; r < ann.dim(); ++r)
        for (std::size_t c = 0; c < dim(); ++c) constraints.set(r, c, ann.basis().at(r, c));
    Matrix sg = s.basis() * gram_;
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t c = 0; c < dim(); ++c) constraints.set(ann.dim() + r, c, sg.at(r, c));
    return kernel(constraints);
}

Subspace GroupElement::apply(const Subspace& s) const {
    return Subspace::row_space(s.basis() * matrix.transpose());
}

GroupElement GroupElement::after(const GroupElement& first) const {
    GroupElement out{matrix * first.matrix,
                     (kind == GroupKind::symplectic && first.kind == GroupKind::symplectic)
                         ? GroupKind::symplectic
                         : GroupKind::similitude,
                     lambda * first.lambda};
    if (out.lambda == Scalar::one(matrix.prime())) out.kind = GroupKind::symplectic;
    return out;
}

GroupElement GroupElement::inverse() const {
    return GroupElement{matrix.inverse(), kind, lambda.inv()};
}

std::optional<GroupElement> classify_group_element(const SymplecticSpace& space, const Matrix& m) {
    if (m.rows() != space.dim() || m.cols() != space.dim())
        throw std::invalid_argument("classify_group_element: matrix is not 2n x 2n");
    Matrix g = m.transpose() * space.gram() * m;
    std::uint32_t lambda = g.at(0, 1);
    if (lambda == 0) return std::nullopt;
    if (g != space.gram().scaled(lambda)) return std::nullopt;
    GroupKind kind = lambda == 1 ? GroupKind::symplectic : GroupKind::similitude;
    return GroupElement{m, kind, Scalar(lambda, space.prime())};
}

GroupElement symplectic_transvection(const SymplecticSpace& space, const Vec& v, Scalar lambda) {
    if (v.size() != space.dim())
        throw std::invalid_argument("symplectic_transvection: vector length mismatch");
    bool zero = true;
    for (auto e : v) zero &= e == 0;
    if (zero) throw std::invalid_argument("symplectic_transvection: direction vector is zero");
    const std::uint32_t p = space.modulus();
    Vec w = space.gram().apply(v);  // w_j = Omega(e_j, v)
    Matrix t = Matrix::identity(space.dim(), space.prime());
    for (std::size_t i = 0; i < space.dim(); ++i) {
        std::uint32_t f = mul_mod(lambda.value(), v[i], p);
        if (f == 0) continue;
        for (std::size_t j = 0; j < space.dim(); ++j)
            t.set(i, j, add_mod(t.at(i, j), mul_mod(f, w[j], p), p));
    }
    return GroupElement{std::move(t), GroupKind::symplectic, Scalar::one(space.prime())};
}

std::uint64_t sp_order(std::uint32_t n, Prime prime, std::uint64_t cap) {
    const std::uint64_t p = prime.value();
    auto sat_mul = [cap](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        if (a == 0 || b == 0) return 0;
        if (a > cap / b) return cap == UINT64_MAX ? UINT64_MAX : cap + 1;
        return a * b;
    };
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < n * n; ++i) order = sat_mul(order, p);
    for (std::uint32_t i = 1; i <= n; ++i) {
        std::uint64_t q = 1;
        for (std::uint32_t j = 0; j < 2 * i; ++j) q = sat_mul(q, p);
        if (q > cap) return cap + 1;
        order = sat_mul(order, q - 1);
    }
    return order;
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t e : v) {
            h ^= e;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// All nonzero vectors with first nonzero coordinate 1, lexicographic.
std::vector<Vec> projective_representatives(std::size_t dim, std::uint32_t p) {
    std::vector<Vec> out;
    Vec v(dim, 0);
    while (true) {
        std::size_t i = dim;
        while (i > 0 && v[i - 1] == p - 1) v[--i] = 0;
        if (i == 0) break;
        ++v[i - 1];
        std::size_t first = 0;
        while (first < dim && v[first] == 0) ++first;
        if (first < dim && v[first] == 1) out.push_back(v);
    }
    return out;
}

}  // namespace

void enumerate_sp(const SymplecticSpace& space, std::uint64_t budget,
                  const std::function<bool(const GroupElement&)>& visit) {
    const std::uint64_t order = sp_order(space.n(), space.prime(), budget);
    if (order > budget)
        throw budget_error("enumerate_sp refused: |Sp(" + std::to_string(space.dim()) + "," +
                               std::to_string(space.modulus()) + ")| = " + std::to_string(order) +
                               (order > budget ? "+" : "") + " exceeds budget " + std::to_string(budget),
                           order, budget);

    std::vector<GroupElement> generators;
    const std::uint32_t p = space.modulus();
    for (const Vec& v : projective_representatives(space.dim(), p))
        for (std::uint32_t lam = 1; lam < p; ++lam)
            generators.push_back(symplectic_transvection(space, v, Scalar(lam, space.prime())));

    std::unordered_set<std::vector<std::uint32_t>, VecHash> seen;
    std::deque<Matrix> queue;
    Matrix id = Matrix::identity(space.dim(), space.prime());
    seen.insert(id.entries());
    queue.push_back(id);
    std::uint64_t yielded = 0;
    while (!queue.empty()) {
        Matrix m = std::move(queue.front());
        queue.pop_front();
        auto cls = classify_group_element(space, m);
        SYMPLECTA_CHECK(cls && cls->kind == GroupKind::symplectic,
                        "transvection closure left the symplectic group");
        ++yielded;
        if (!visit(*cls)) return;
        for (const GroupElement& g : generators) {
            Matrix next = g.matrix * m;
            if (seen.insert(next.entries()).second) queue.push_back(std::move(next));
        }
    }
    SYMPLECTA_CHECK(yielded == order, "transvection closure has unexpected size");
}

GroupElement standard_similitude(const SymplecticSpace& space, Scalar c) {
    if (c.is_zero()) throw std::invalid_argument("standard_similitude: multiplier must be nonzero");
    Matrix m(space.dim(), space.dim(), space.prime());
    for (std::uint32_t i = 0; i < space.n(); ++i) {
        m.set(2 * i, 2 * i, c.value());
        m.set(2 * i + 1, 2 * i + 1, 1);
    }
    auto cls = classify_group_element(space, m);
    SYMPLECTA_CHECK(cls.has_value(), "standard similitude failed classification");
    return *cls;
}

namespace {

Vec combine(const Subspace& r, const Vec& coeffs) {
    const std::uint32_t p = r.modulus();
    Vec v(r.ambient_dim(), 0);
    for (std::size_t i = 0; i < r.dim(); ++i) {
        if (coeffs[i] == 0) continue;
        const std::uint32_t* row = r.basis().row(i);
        for (std::size_t j = 0; j < r.ambient_dim(); ++j)
            v[j] = add_mod(v[j], mul_mod(coeffs[i], row[j], p), p);
    }
    return v;
}

Vec random_nonzero_in(const Subspace& r, Rng& rng) {
    const std::uint32_t p = r.modulus();
    while (true) {
        Vec coeffs(r.dim());
        bool zero = true;
        for (auto& c : coeffs) {
            c = static_cast<std::uint32_t>(rng.below(p));
            zero &= c == 0;
        }
        if (!zero) return combine(r, coeffs);
    }
}

// Shared pair-extraction loop. pick_v/pick_w choose vectors inside the
// residual space; the residual then shrinks by the pair's perp.
template <typename PickV, typename PickW>
std::vector<std::pair<Vec, Vec>> extract_pairs(const SymplecticSpace& space, Subspace residual,
                                               PickV&& pick_v, PickW&& pick_w) {
    std::vector<std::pair<Vec, Vec>> pairs;
    while (residual.dim() > 0) {
        SYMPLECTA_CHECK(residual.dim() % 2 == 0, "residual of pair extraction has odd dimension");
        Vec v = pick_v(residual);
        Vec w = pick_w(residual, v);
        std::uint32_t om = space.omega_raw(v, w);
        SYMPLECTA_CHECK(om != 0, "pair extraction picked an orthogonal partner");
        if (om != 1) {
            const std::uint32_t f = inv_mod(om, space.modulus());
            for (auto& e : w) e = mul_mod(e, f, space.modulus());
        }
        Subspace line = Subspace::span(space.dim(), space.prime(), {v, w});
        SYMPLECTA_CHECK(line.dim() == 2, "pair extraction picked a dependent pair");
        pairs.emplace_back(std::move(v), std::move(w));
        residual = space.perp_within(residual, line);
    }
    return pairs;
}

}  // namespace

std::vector<std::pair<Vec, Vec>> random_symplectic_basis(const SymplecticSpace& space, Rng& rng) {
    auto pick_v = [&rng](const Subspace& r) { return random_nonzero_in(r, rng); };
    auto pick_w = [&space, &rng](const Subspace& r, const Vec& v) {
        while (true) {
            Vec w = random_nonzero_in(r, rng);
            if (space.omega_raw(v, w) != 0) return w;
        }
    };
    return extract_pairs(space, space.full_space(), pick_v, pick_w);
}

std::vector<std::pair<Vec, Vec>> symplectic_basis_of(const SymplecticSpace& space, const Subspace& u) {
    if (!space.is_nondegenerate(u))
        throw std::domain_error("symplectic_basis_of: subspace is degenerate");
    // First basis vector, then the first partner in coefficient order.
    auto pick_v = [](const Subspace& r) { return r.basis().row_vec(0); };
    auto pick_w = [&space](const Subspace& r, const Vec& v) {
        const std::uint32_t p = r.modulus();
        Vec coeffs(r.dim(), 0);
        while (true) {
            std::size_t i = coeffs.size();
            while (i > 0 && coeffs[i - 1] == p - 1) coeffs[--i] = 0;
            SYMPLECTA_CHECK(i > 0, "no hyperbolic partner found in non-degenerate residual");
            ++coeffs[i - 1];
            Vec w = combine(r, coeffs);
            if (space.omega_raw(v, w) != 0) return w;
        }
    };
    return extract_pairs(space, u, pick_v, pick_w);
}

std::vector<Subspace> hyperbolic_decomposition(const SymplecticSpace& space, const Subspace& u) {
    std::vector<Subspace> lines;
    for (const auto& [v, w] : symplectic_basis_of(space, u))
        lines.push_back(Subspace::span(space.dim(), space.prime(), {v, w}));
    return lines;
}

GroupElement random_sp(const SymplecticSpace& space, Rng& rng) {
    auto pairs = random_symplectic_basis(space, rng);
    Matrix m(space.dim(), space.dim(), space.prime());
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        for (std::size_t i = 0; i < space.dim(); ++i) {
            m.set(i, 2 * t, pairs[t].first[i]);
            m.set(i, 2 * t + 1, pairs[t].second[i]);
        }
    }
    auto cls = classify_group_element(space, m);
    SYMPLECTA_CHECK(cls && cls->kind == GroupKind::symplectic,
                    "random symplectic basis produced a non-symplectic matrix");
    return *cls;
}

GroupElement random_sp(const SymplecticSpace& space, std::uint64_t seed) {
    Rng rng(seed);
    return random_sp(space, rng);
}

}  // namespace symplecta
