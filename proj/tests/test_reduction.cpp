#include <doctest.h>

#include "helpers.hpp"

using namespace cubicff;
using cubicff::test::ctx;
using cubicff::test::rf;

TEST_CASE("as_reduce examples") {
    auto F2 = ctx(2);
    ASReduced r1 = as_reduce(rf(*F2, "1/x^3"), 2, 1);
    CHECK(r1.b == rf(*F2, "1/x^3")); // v = -3 already odd
    CHECK(r1.eta.is_zero());

    ASReduced r2 = as_reduce(rf(*F2, "1/x^2"), 2, 1);
    CHECK(r2.b == rf(*F2, "1/x"));
    CHECK((r2.eta == rf(*F2, "1/x"))); // char 2: sign immaterial

    ASReduced r3 = as_reduce(rf(*F2, "x^2 + 1/x"), 2, 1);
    CHECK(r3.b == rf(*F2, "x + 1/x"));
    CHECK(r3.eta == rf(*F2, "x"));
}

TEST_CASE("as_reduce resubstitution identity and contracts") {
    for (std::uint64_t q : {2, 4, 8, 3, 9}) {
        auto F = ctx(q);
        std::uint32_t r = F->p();
        if (r > 3) continue;
        Rng rng(q * 31 + 7);
        for (int i = 0; i < 150; ++i) {
            RatFn a = random_ratfn(*F, 4, 4, rng);
            if (a.is_zero()) continue;
            ASReduced red = as_reduce(a, r, rng.next());
            CHECK(red.b == a + pow(red.eta, static_cast<int>(r)) - red.eta);
            CHECK(finite_poles_prime_to(red.b, r, rng.next()));
            CHECK(infinity_standard(red.b, r));
        }
    }
}

TEST_CASE("gas_reduce worked examples") {
    auto F3 = ctx(3);
    GasReduced r1 = gas_reduce(rf(*F3, "1/x"), 1);
    CHECK(r1.b == rf(*F3, "1/x"));
    CHECK(r1.fully_standard);

    GasReduced r2 = gas_reduce(rf(*F3, "1/x^3"), 1);
    CHECK(r2.b == rf(*F3, "1/x"));
    CHECK(r2.fully_standard);
    // generator: z = u(y - w) with u = 2x, w = 2/x^2
    CHECK(r2.gen_scale == rf(*F3, "2*x"));

    GasReduced r3 = gas_reduce(rf(*F3, "x^3"), 1);
    CHECK(!(r3.b.degree() > 0 && r3.b.degree() % 3 == 0));
    CHECK(r3.b == rf(*F3, "x"));
}

TEST_CASE("gas_reduce handles the parity-obstructed instance") {
    auto F3 = ctx(3);
    // a = x(x^2+x+1): no parameter is simultaneously standard at the finite
    // places and at infinity (valuations are preserved mod 2), but the
    // infinity-local datum must still come out as v = -1 (fully ramified).
    RatFn a = rf(*F3, "x^3 + x^2 + x");
    GasReduced red = gas_reduce(a, 1);
    CHECK(finite_poles_prime_to(red.b, 3, 1));
    CHECK(red.inf_val == -1);
}

TEST_CASE("gas_reduce contracts and genus invariance on random inputs") {
    for (std::uint64_t q : {3, 9}) {
        auto F = ctx(q);
        Rng rng(q * 101);
        int done = 0;
        while (done < 60) {
            RatFn a = random_char3_instance(*F, rng);
            GasReduced red = gas_reduce(a, rng.next());
            CHECK(finite_poles_prime_to(red.b, 3, rng.next()));
            if (red.fully_standard) CHECK(infinity_standard(red.b, 3));
            // valuation growth note: the reduced parameter is never worse at
            // any finite pole of a
            // genus invariance: a and b define the same extension
            GenusReport ga = ram_char3(a, 7);
            GenusReport gb = ram_char3(red.b, 7);
            CHECK(ga.genus == gb.genus);
            ++done;
        }
    }
}
