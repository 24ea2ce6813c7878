#include <doctest.h>

#include "helpers.hpp"

using namespace cubicff;
using cubicff::test::ctx;

TEST_CASE("prime field arithmetic") {
    auto F7 = ctx(7);
    CHECK(F7->add(3, 5) == 1);
    CHECK(F7->mul(3, 5) == 1);
    CHECK(F7->inv(3) == 5);
    CHECK(F7->neg(2) == 5);
    CHECK(F7->from_int(-9) == 5);
}

TEST_CASE("extension field F_4 and F_9") {
    auto F4 = ctx(4);
    CHECK(F4->p() == 2);
    CHECK(F4->n() == 2);
    // t^2 = -(modulus lower part); whatever the modulus, Frobenius is a bijection
    for (Fq a = 0; a < 4; ++a) CHECK(F4->frobenius_inv(F4->frobenius(a)) == a);
    auto F9 = ctx(9);
    CHECK(F9->q() == 9);
    Fq t = 3; // the generator element
    Fq t2 = F9->mul(t, t);
    CHECK(F9->add(t2, F9->one()) != 0); // t^2 != -1 only if modulus != t^2+1; just sanity: nonzero product
    CHECK(F9->mul(t, F9->inv(t)) == 1);
}

TEST_CASE("const_nth_root examples") {
    auto F7 = ctx(7);
    CHECK(const_nth_root(*F7, F7->from_int(6), 3) == 3); // 3^3 = 27 = 6, least of {3,5,6}
    CHECK_FALSE(const_nth_root(*F7, F7->from_int(2), 3).has_value());
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 13}) {
        auto F = ctx(q);
        CHECK(const_nth_root(*F, F->one(), 3) == F->one()); // cube root of 1 is 1 (canonical least)
    }
}

TEST_CASE("Frobenius bijectivity: const_nth_root(c, p) exists and is unique") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        auto F = ctx(q);
        for (Fq c = 0; c < F->q(); ++c) {
            auto r = const_nth_root(*F, c, F->p());
            REQUIRE(r.has_value());
            // uniqueness: count all roots
            int count = 0;
            for (Fq z = 0; z < F->q(); ++z)
                if (F->pow(z, F->p()) == c) ++count;
            CHECK(count == 1);
        }
    }
}

TEST_CASE("solve_const_artin_schreier examples") {
    auto F5 = ctx(5);
    CHECK(solve_const_artin_schreier(*F5, 0) == 0);
    auto F2 = ctx(2);
    CHECK_FALSE(solve_const_artin_schreier(*F2, 1).has_value());
    auto F4 = ctx(4);
    auto z = solve_const_artin_schreier(*F4, 1);
    REQUIRE(z.has_value());
    CHECK(*z == 2); // omega = t, the least solution
    CHECK(F4->sub(F4->pow(*z, 2), *z) == 1);
}

TEST_CASE("default moduli are reproducible") {
    auto a = ctx(9);
    auto b = ctx(9);
    CHECK(a->modulus() == b->modulus());
    // overridable
    auto c = FieldCtx::make(3, 2, {1, 0, 1}); // t^2 + 1, irreducible over F_3
    CHECK(c->q() == 9);
    CHECK_THROWS_AS(FieldCtx::make(3, 2, {2, 0, 1}), error); // t^2 + 2 = (t-1)(t+1)
}
