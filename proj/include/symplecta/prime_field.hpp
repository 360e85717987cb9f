#pragma once

#include <cstdint>
#include <stdexcept>

#include "symplecta/common.hpp"

namespace symplecta {

// A prime modulus, validated by trial division at construction. Desk-scale
// work uses p in {2,3,5,7}; anything below 2^31 is accepted.
class Prime {
public:
    explicit Prime(std::uint32_t p);

    std::uint32_t value() const noexcept { return p_; }
    bool is_odd() const noexcept { return p_ != 2; }

    bool operator==(const Prime& o) const noexcept { return p_ == o.p_; }
    bool operator!=(const Prime& o) const noexcept { return p_ != o.p_; }

private:
    std::uint32_t p_;
};

inline bool is_odd_characteristic(Prime p) { return p.is_odd(); }

// An element of GF(p). The value is kept reduced; operations on scalars with
// different moduli are hard errors, never coercions.
class Scalar {
public:
    Scalar(std::uint64_t value, Prime p) : p_(p.value()), v_(static_cast<std::uint32_t>(value % p.value())) {}

    static Scalar zero(Prime p) { return Scalar(0, p); }
    static Scalar one(Prime p) { return Scalar(1, p); }

    // Reduces an arbitrary signed integer.
    static Scalar from_int(std::int64_t value, Prime p) {
        std::int64_t m = static_cast<std::int64_t>(p.value());
        std::int64_t r = value % m;
        if (r < 0) r += m;
        return Scalar(static_cast<std::uint64_t>(r), p);
    }

    std::uint32_t value() const noexcept { return v_; }
    std::uint32_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    friend Scalar operator+(Scalar a, Scalar b) {
        a.match(b, "add");
        std::uint64_t s = static_cast<std::uint64_t>(a.v_) + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Scalar(s, a.p_, unchecked{});
    }
    friend Scalar operator-(Scalar a, Scalar b) {
        a.match(b, "sub");
        std::uint32_t r = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (a.p_ - b.v_);
        return Scalar(r, a.p_, unchecked{});
    }
    friend Scalar operator*(Scalar a, Scalar b) {
        a.match(b, "mul");
        std::uint64_t m = static_cast<std::uint64_t>(a.v_) * b.v_;
        return Scalar(static_cast<std::uint32_t>(m % a.p_), a.p_, unchecked{});
    }
    Scalar operator-() const {
        return Scalar(v_ == 0 ? 0 : p_ - v_, p_, unchecked{});
    }

    // Multiplicative inverse; inv(0) is a domain error.
    Scalar inv() const;

    bool operator==(const Scalar& o) const noexcept { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Scalar& o) const noexcept { return !(*this == o); }

private:
    struct unchecked {};
    Scalar(std::uint64_t v, std::uint32_t p, unchecked) : p_(p), v_(static_cast<std::uint32_t>(v)) {}

    void match(const Scalar& o, const char* op) const {
        if (p_ != o.p_)
            throw std::invalid_argument(std::string("scalar ") + op + ": mixed moduli " +
                                        std::to_string(p_) + " and " + std::to_string(o.p_));
    }

    std::uint32_t p_;
    std::uint32_t v_;
};

// Raw modular helpers shared by the exact linear algebra kernels, which keep
// one modulus per matrix rather than one per entry.
inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + (p - b);
}
inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}
inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

}  // namespace symplecta
