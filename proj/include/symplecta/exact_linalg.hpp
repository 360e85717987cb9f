#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "symplecta/prime_field.hpp"

namespace symplecta {

using Vec = std::vector<std::uint32_t>;  // coordinate vector with reduced entries

// Dense matrix over GF(p). Entries are stored row-major as reduced residues;
// the modulus is carried once per matrix, so every entry shares it.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Prime p)
        : rows_(rows), cols_(cols), p_(p.value()), v_(rows * cols, 0) {}

    static Matrix identity(std::size_t n, Prime p);
    static Matrix from_rows(Prime p, const std::vector<Vec>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t modulus() const noexcept { return p_; }
    Prime prime() const { return Prime(p_); }

    std::uint32_t at(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t value) { v_[r * cols_ + c] = value % p_; }
    Scalar scalar_at(std::size_t r, std::size_t c) const { return Scalar(at(r, c), prime()); }

    const std::uint32_t* row(std::size_t r) const { return v_.data() + r * cols_; }
    std::uint32_t* row(std::size_t r) { return v_.data() + r * cols_; }
    Vec row_vec(std::size_t r) const { return Vec(row(r), row(r) + cols_); }
    const std::vector<std::uint32_t>& entries() const noexcept { return v_; }

    Matrix operator*(const Matrix& o) const;
    Vec apply(const Vec& x) const;  // column convention: returns M*x
    Matrix transpose() const;
    Matrix scaled(std::uint32_t c) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-() const;
    Matrix inverse() const;  // domain_error when singular
    bool is_identity() const;
    bool is_zero() const;

    bool operator==(const Matrix& o) const noexcept {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && v_ == o.v_;
    }
    bool operator!=(const Matrix& o) const noexcept { return !(*this == o); }

private:
    void match(const Matrix& o, const char* op) const;

    std::size_t rows_, cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> v_;
};

// Reduced row echelon form and rank; deterministic.
std::pair<Matrix, std::size_t> rref(const Matrix& m);

// Row space of the right-nullspace { x : m * x^T = 0 }, canonicalized.
class Subspace;
Subspace kernel(const Matrix& m);

// A linear subspace of GF(p)^ambient in canonical form: the basis matrix is
// the unique RREF with no zero rows, so two Subspace values describe the same
// subspace exactly when they compare equal entry-wise.
class Subspace {
public:
    static Subspace span(std::size_t ambient, Prime p, const std::vector<Vec>& vectors);
    static Subspace row_space(const Matrix& m);
    static Subspace zero(std::size_t ambient, Prime p);
    static Subspace full(std::size_t ambient, Prime p);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    std::uint32_t modulus() const noexcept { return basis_.modulus(); }
    Prime prime() const { return basis_.prime(); }

    bool contains_vector(const Vec& v) const;
    bool contains(const Subspace& other) const;  // other is inside this

    // Canonical order: dimension, then pivot-column pattern, then entries.
    // Matches the order enumerate_subspaces yields for fixed dimension.
    int cmp(const Subspace& o) const;
    bool operator==(const Subspace& o) const noexcept {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const noexcept { return !(*this == o); }
    bool operator<(const Subspace& o) const { return cmp(o) < 0; }

    std::vector<std::size_t> pivots() const;

    struct Hash {
        std::size_t operator()(const Subspace& s) const noexcept;
    };

private:
    Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

    std::size_t ambient_;
    Matrix basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
inline bool contains(const Subspace& a, const Subspace& b) { return a.contains(b); }
inline bool equal(const Subspace& a, const Subspace& b) { return a == b; }

// Number of d-dimensional subspaces of GF(p)^m, saturating at `cap`.
std::uint64_t gaussian_binomial(std::size_t m, std::size_t d, Prime p,
                                std::uint64_t cap = UINT64_MAX);

// Yields every d-dimensional subspace of GF(p)^m exactly once, ordered by
// pivot-column pattern (lexicographic) and then by free entries. The total
// count is checked against the budget up front; exceeding it refuses with
// the count in the message. The callback returns false to stop early.
void enumerate_subspaces(std::size_t m, std::size_t d, Prime p, std::uint64_t budget,
                         const std::function<bool(const Subspace&)>& visit);

std::vector<Subspace> all_subspaces(std::size_t m, std::size_t d, Prime p, std::uint64_t budget);

}  // namespace symplecta
