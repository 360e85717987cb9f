#include "symplecta/prime_field.hpp"

#include <cstdlib>

namespace symplecta {

Prime::Prime(std::uint32_t p) : p_(p) {
    if (p < 2) throw std::invalid_argument("Prime: " + std::to_string(p) + " is smaller than 2");
    if (p > 0x7fffffffu) throw std::invalid_argument("Prime: " + std::to_string(p) + " exceeds 2^31 - 1");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("Prime: " + std::to_string(p) + " is composite (divisor " +
                                        std::to_string(d) + ")");
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(p) + ")");
    // Extended Euclid on (a, p).
    std::int64_t r0 = a, r1 = p, s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    std::int64_t s = s0 % static_cast<std::int64_t>(p);
    if (s < 0) s += p;
    return static_cast<std::uint32_t>(s);
}

Scalar Scalar::inv() const {
    return Scalar(inv_mod(v_, p_), p_, unchecked{});
}

std::uint64_t default_budget() {
    static const std::uint64_t value = [] {
        if (const char* env = std::getenv("SYMPLECTA_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return static_cast<std::uint64_t>(10'000'000);
    }();
    return value;
}

}  // namespace symplecta
