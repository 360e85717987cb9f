#include <doctest.h>

#include "symplecta/prime_field.hpp"

using namespace symplecta;

TEST_CASE("prime validation") {
    CHECK(Prime(2).value() == 2);
    CHECK(Prime(7).is_odd());
    CHECK_FALSE(Prime(2).is_odd());
    CHECK_THROWS_AS(Prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Prime(9), std::invalid_argument);
    CHECK_THROWS_AS(Prime(91), std::invalid_argument);  // 7 * 13
}

TEST_CASE("odd characteristic predicate") {
    CHECK_FALSE(is_odd_characteristic(Prime(2)));
    CHECK(is_odd_characteristic(Prime(3)));
    CHECK(is_odd_characteristic(Prime(7)));
}

TEST_CASE("scalar arithmetic examples") {
    Prime p3(3), p2(2), p7(7);
    CHECK(Scalar(2, p3).inv() == Scalar(2, p3));      // 2*2 = 4 = 1 mod 3
    CHECK(-Scalar(1, p2) == Scalar(1, p2));           // -1 = 1 in char 2
    CHECK(Scalar(3, p7) * Scalar(5, p7) == Scalar(1, p7));  // 15 = 1 mod 7
    CHECK(Scalar(5, p3).value() == 2);                // constructor reduces
    CHECK(Scalar::from_int(-1, p7).value() == 6);
}

TEST_CASE("mixed moduli and zero inverse are errors") {
    Prime p3(3), p5(5);
    CHECK_THROWS_AS(Scalar(1, p3) + Scalar(1, p5), std::invalid_argument);
    CHECK_THROWS_AS(Scalar(2, p3) * Scalar(2, p5), std::invalid_argument);
    CHECK_THROWS_AS(Scalar(0, p3).inv(), std::domain_error);
    CHECK_THROWS_AS(inv_mod(0, 7), std::domain_error);
}

TEST_CASE("field axioms over random triples") {
    for (std::uint32_t pv : {2u, 3u, 5u, 7u}) {
        Prime p(pv);
        Rng rng(1234 + pv);
        for (int trial = 0; trial < 200; ++trial) {
            Scalar a(rng.below(pv), p), b(rng.below(pv), p), c(rng.below(pv), p);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar::zero(p));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK(a * a.inv() == Scalar::one(p));
                CHECK(a.inv().inv() == a);
            }
        }
    }
}
