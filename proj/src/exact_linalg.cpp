#include "symplecta/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace symplecta {

Matrix Matrix::identity(std::size_t n, Prime p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(Prime p, const std::vector<Vec>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("Matrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

void Matrix::match(const Matrix& o, const char* op) const {
    if (p_ != o.p_)
        throw std::invalid_argument(std::string("matrix ") + op + ": mixed moduli");
}

Matrix Matrix::operator*(const Matrix& o) const {
    match(o, "mul");
    if (cols_ != o.rows_) throw std::invalid_argument("matrix mul: shape mismatch");
    Matrix out(rows_, o.cols_, prime());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t t = 0; t < cols_; ++t) {
            std::uint32_t a = at(i, t);
            if (a == 0) continue;
            const std::uint32_t* orow = o.row(t);
            std::uint32_t* dst = out.row(i);
            for (std::size_t j = 0; j < o.cols_; ++j)
                dst[j] = add_mod(dst[j], mul_mod(a, orow[j], p_), p_);
        }
    }
    return out;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix apply: length mismatch");
    Vec out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        const std::uint32_t* r = row(i);
        for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<std::uint64_t>(r[j]) * x[j];
        out[i] = static_cast<std::uint32_t>(acc % p_);
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_, prime());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

Matrix Matrix::scaled(std::uint32_t c) const {
    Matrix out = *this;
    c %= p_;
    for (auto& e : out.v_) e = mul_mod(e, c, p_);
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    match(o, "add");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < v_.size(); ++i) out.v_[i] = add_mod(v_[i], o.v_[i], p_);
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& e : out.v_) e = neg_mod(e, p_);
    return out;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

bool Matrix::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](std::uint32_t e) { return e == 0; });
}

namespace {

// In-place Gauss-Jordan; returns pivot columns in order.
std::vector<std::size_t> rref_in_place(Matrix& m) {
    const std::uint32_t p = m.modulus();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m.at(sel, c) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols; ++j) {
                std::uint32_t t = m.at(r, j);
                m.set(r, j, m.at(sel, j));
                m.set(sel, j, t);
            }
        std::uint32_t inv = inv_mod(m.at(r, c), p);
        if (inv != 1)
            for (std::size_t j = c; j < cols; ++j) m.set(r, j, mul_mod(m.at(r, j), inv, p));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::uint32_t f = m.at(i, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                m.set(i, j, sub_mod(m.at(i, j), mul_mod(f, m.at(r, j), p), p));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::pair<Matrix, std::size_t> rref(const Matrix& m) {
    Matrix out = m;
    auto pivots = rref_in_place(out);
    return {std::move(out), pivots.size()};
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
    Matrix aug(rows_, 2 * cols_, prime());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
        aug.set(i, cols_ + i, 1);
    }
    auto pivots = rref_in_place(aug);
    if (pivots.size() != rows_ || (rows_ > 0 && pivots.back() >= cols_))
        throw std::domain_error("inverse: matrix is singular");
    Matrix out(rows_, cols_, prime());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, aug.at(i, cols_ + j));
    return out;
}

Subspace Subspace::span(std::size_t ambient, Prime p, const std::vector<Vec>& vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambient)
            throw std::invalid_argument("span: vector length " + std::to_string(v.size()) +
                                        " does not match ambient dimension " + std::to_string(ambient));
    if (vectors.empty()) return zero(ambient, p);
    return row_space(Matrix::from_rows(p, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
    Matrix red = m;
    auto pivots = rref_in_place(red);
    Matrix basis(pivots.size(), m.cols(), m.prime());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) basis.set(r, c, red.at(r, c));
    return Subspace(m.cols(), std::move(basis));
}

Subspace Subspace::zero(std::size_t ambient, Prime p) {
    return Subspace(ambient, Matrix(0, ambient, p));
}

Subspace Subspace::full(std::size_t ambient, Prime p) {
    return Subspace(ambient, Matrix::identity(ambient, p));
}

bool Subspace::contains_vector(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("contains_vector: length mismatch");
    const std::uint32_t p = basis_.modulus();
    Vec w = v;
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t c = 0;
        while (c < ambient_ && basis_.at(r, c) == 0) ++c;
        if (c == ambient_) continue;
        std::uint32_t f = w[c];
        if (f == 0) continue;
        const std::uint32_t* br = basis_.row(r);
        for (std::size_t j = c; j < ambient_; ++j) w[j] = sub_mod(w[j], mul_mod(f, br[j], p), p);
    }
    return std::all_of(w.begin(), w.end(), [](std::uint32_t e) { return e == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_)
        throw std::invalid_argument("contains: ambient dimension mismatch");
    if (basis_.modulus() != other.basis_.modulus())
        throw std::invalid_argument("contains: mixed moduli");
    if (other.dim() > dim()) return false;
    for (std::size_t r = 0; r < other.basis_.rows(); ++r)
        if (!contains_vector(other.basis_.row_vec(r))) return false;
    return true;
}

std::vector<std::size_t> Subspace::pivots() const {
    std::vector<std::size_t> out;
    out.reserve(basis_.rows());
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t c = 0;
        while (c < ambient_ && basis_.at(r, c) == 0) ++c;
        out.push_back(c);
    }
    return out;
}

int Subspace::cmp(const Subspace& o) const {
    if (ambient_ != o.ambient_)
        throw std::invalid_argument("cmp: ambient dimension mismatch");
    if (dim() != o.dim()) return dim() < o.dim() ? -1 : 1;
    auto pa = pivots(), pb = o.pivots();
    if (pa != pb) return pa < pb ? -1 : 1;
    const auto& ea = basis_.entries();
    const auto& eb = o.basis_.entries();
    if (ea != eb) return ea < eb ? -1 : 1;
    return 0;
}

std::size_t Subspace::Hash::operator()(const Subspace& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(s.ambient_);
    mix(s.dim());
    for (std::uint32_t e : s.basis_.entries()) mix(e);
    return h;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("sum: ambient dimension mismatch");
    if (a.modulus() != b.modulus()) throw std::invalid_argument("sum: mixed moduli");
    Matrix stacked(a.dim() + b.dim(), a.ambient_dim(), a.prime());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.ambient_dim(); ++c) stacked.set(r, c, a.basis().at(r, c));
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < b.ambient_dim(); ++c) stacked.set(a.dim() + r, c, b.basis().at(r, c));
    return Subspace::row_space(stacked);
}

// Zassenhaus: rows [A|A] and [B|0]; after elimination the rows whose left
// half vanished have right halves spanning the intersection.
Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    if (a.modulus() != b.modulus()) throw std::invalid_argument("intersect: mixed moduli");
    const std::size_t m = a.ambient_dim();
    Matrix z(a.dim() + b.dim(), 2 * m, a.prime());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < m; ++c) {
            z.set(r, c, a.basis().at(r, c));
            z.set(r, m + c, a.basis().at(r, c));
        }
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < m; ++c) z.set(a.dim() + r, c, b.basis().at(r, c));
    Matrix red = z;
    rref_in_place(red);
    std::vector<Vec> inter_rows;
    for (std::size_t r = 0; r < red.rows(); ++r) {
        bool left_zero = true;
        for (std::size_t c = 0; c < m && left_zero; ++c) left_zero = red.at(r, c) == 0;
        if (!left_zero) continue;
        Vec right(m);
        bool nonzero = false;
        for (std::size_t c = 0; c < m; ++c) {
            right[c] = red.at(r, m + c);
            nonzero |= right[c] != 0;
        }
        if (nonzero) inter_rows.push_back(std::move(right));
    }
    Subspace result = Subspace::span(m, a.prime(), inter_rows);
    SYMPLECTA_CHECK(a.dim() + b.dim() == sum(a, b).dim() + result.dim(),
                    "modular law violated in intersect");
    return result;
}

Subspace kernel(const Matrix& m) {
    Matrix red = m;
    auto pivots = rref_in_place(red);
    const std::size_t n = m.cols();
    const std::uint32_t p = m.modulus();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> rows;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec x(n, 0);
        x[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = neg_mod(red.at(r, f), p);
        rows.push_back(std::move(x));
    }
    return Subspace::span(n, m.prime(), rows);
}

std::uint64_t gaussian_binomial(std::size_t m, std::size_t d, Prime prime, std::uint64_t cap) {
    if (d > m) return 0;
    d = std::min(d, m - d);
    const std::uint64_t p = prime.value();
    // G(m, d) via G(a, b) = G(a-1, b-1) + p^b * G(a-1, b), saturating.
    std::vector<std::uint64_t> row(d + 1, 0);
    row[0] = 1;
    auto sat_mul = [cap](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        if (a == 0 || b == 0) return 0;
        if (a > cap / b) return cap == UINT64_MAX ? UINT64_MAX : cap + 1;
        return a * b;
    };
    auto sat_add = [cap](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        if (a > cap || b > cap || a + b < a) return cap == UINT64_MAX ? UINT64_MAX : cap + 1;
        return a + b;
    };
    for (std::size_t a = 1; a <= m; ++a) {
        std::uint64_t pk = 1;
        for (std::size_t b = std::min(a, d); b >= 1; --b) {
            // p^b, saturating
            pk = 1;
            for (std::size_t i = 0; i < b; ++i) pk = sat_mul(pk, p);
            row[b] = sat_add(row[b - 1], sat_mul(pk, row[b]));
        }
    }
    return row[d];
}

void enumerate_subspaces(std::size_t m, std::size_t d, Prime p, std::uint64_t budget,
                         const std::function<bool(const Subspace&)>& visit) {
    if (d > m) throw std::invalid_argument("enumerate_subspaces: dimension exceeds ambient");
    std::uint64_t count = gaussian_binomial(m, d, p, budget);
    if (count > budget)
        throw budget_error("enumerate_subspaces refused: [" + std::to_string(m) + " choose " +
                               std::to_string(d) + "]_" + std::to_string(p.value()) +
                               " = " + std::to_string(count) + (count > budget ? "+" : "") +
                               " subspaces exceeds budget " + std::to_string(budget),
                           count, budget);
    if (d == 0) {
        visit(Subspace::zero(m, p));
        return;
    }

    // Pivot columns in lexicographic order.
    std::vector<std::size_t> piv(d);
    for (std::size_t i = 0; i < d; ++i) piv[i] = i;
    const std::uint32_t q = p.value();

    while (true) {
        // Free positions: (r, c) with c > piv[r], c not a pivot column.
        std::vector<bool> is_pivot(m, false);
        for (std::size_t c : piv) is_pivot[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = piv[r] + 1; c < m; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(r, c);

        std::vector<std::uint32_t> vals(free_pos.size(), 0);
        while (true) {
            Matrix basis(d, m, p);
            for (std::size_t r = 0; r < d; ++r) basis.set(r, piv[r], 1);
            for (std::size_t i = 0; i < free_pos.size(); ++i)
                basis.set(free_pos[i].first, free_pos[i].second, vals[i]);
            Subspace s = Subspace::row_space(basis);
            SYMPLECTA_CHECK(s.dim() == d, "enumerate_subspaces produced wrong dimension");
            if (!visit(s)) return;
            // Next free-entry assignment (last position varies fastest).
            std::size_t i = vals.size();
            while (i > 0 && vals[i - 1] == q - 1) vals[--i] = 0;
            if (i == 0) break;
            ++vals[i - 1];
        }

        // Next pivot pattern.
        std::size_t i = d;
        while (i > 0 && piv[i - 1] == m - d + i - 1) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (std::size_t j = i; j < d; ++j) piv[j] = piv[j - 1] + 1;
    }
}

std::vector<Subspace> all_subspaces(std::size_t m, std::size_t d, Prime p, std::uint64_t budget) {
    std::vector<Subspace> out;
    enumerate_subspaces(m, d, p, budget, [&](const Subspace& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace symplecta
