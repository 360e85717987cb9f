#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace symplecta {

// Thrown when an enumeration would exceed its node/count budget. This is a
// refusal, not a computational failure: callers that produce reports map it
// to a "refused" status instead of "fail".
class budget_error : public std::runtime_error {
public:
    budget_error(std::string what, std::uint64_t required, std::uint64_t budget)
        : std::runtime_error(std::move(what)), required_(required), budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

// Involutions only exist as +1/-1 eigenspace splittings away from
// characteristic 2; requests at p = 2 get this instead of a generic
// domain_error so callers can tell the two apart.
class characteristic_error : public std::domain_error {
public:
    explicit characteristic_error(const std::string& what) : std::domain_error(what) {}
};

// Node budget for the default desk-scale runs. Overridable through the
// SYMPLECTA_BUDGET environment variable.
std::uint64_t default_budget();

// Counts work units during a search and refuses once the limit is crossed.
class Budget {
public:
    explicit Budget(std::uint64_t limit) : limit_(limit) {}

    void charge(std::uint64_t amount = 1) {
        used_ += amount;
        if (used_ > limit_)
            throw budget_error("search budget exceeded after " + std::to_string(used_) +
                                   " nodes (budget " + std::to_string(limit_) + ")",
                               used_, limit_);
    }

    std::uint64_t used() const noexcept { return used_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

// Deterministic 64-bit generator. mt19937_64 output is pinned by the
// standard, and the bounded draw below avoids std::uniform_int_distribution,
// whose sequence is implementation-defined. Seeds are always recorded in
// reports so runs can be reproduced exactly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform draw from [0, n) via rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: empty range");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 eng_;
};

// Internal invariant check; always on.
#define SYMPLECTA_CHECK(cond, msg)                                     \
    do {                                                               \
        if (!(cond)) throw std::logic_error(std::string("internal: ") + (msg)); \
    } while (0)

}  // namespace symplecta
