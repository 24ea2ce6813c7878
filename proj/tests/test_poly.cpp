#include <doctest.h>

#include "helpers.hpp"

using namespace cubicff;
using cubicff::test::ctx;
using cubicff::test::pol;

TEST_CASE("poly_factor examples") {
    auto F7 = ctx(7);
    Factorization f = poly_factor(pol(*F7, "x^2 - 1"), 1);
    CHECK(f.unit == 1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == pol(*F7, "x + 1"));
    CHECK(f.factors[0].second == 1);
    CHECK(f.factors[1].first == pol(*F7, "x + 6"));
    CHECK(f.factors[1].second == 1);

    auto F3 = ctx(3);
    Factorization g = poly_factor(pol(*F3, "x"), 1);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].first == pol(*F3, "x"));

    Factorization h = poly_factor(pol(*F3, "x^2 + 1"), 1);
    REQUIRE(h.factors.size() == 1);
    CHECK(h.factors[0].first == pol(*F3, "x^2 + 1"));
    CHECK(h.factors[0].second == 1);
}

TEST_CASE("poly_is_irreducible examples") {
    auto F3 = ctx(3);
    CHECK(poly_is_irreducible(pol(*F3, "x^3 - x - 1")));
    auto F5 = ctx(5);
    CHECK_FALSE(poly_is_irreducible(pol(*F5, "x^3 - x")));
    CHECK_FALSE(poly_is_irreducible(pol(*F5, "x^2 + 1"))); // 2^2 = -1 mod 5
}

TEST_CASE("factorization product round-trip on random inputs") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
        auto F = ctx(q);
        Rng rng(q * 77 + 1);
        for (int i = 0; i < 1000; ++i) {
            Poly f(*F);
            int d = 1 + static_cast<int>(rng.below(7));
            f.c.resize(static_cast<std::size_t>(d) + 1);
            for (auto& c : f.c) c = static_cast<Fq>(rng.below(F->q()));
            f.trim();
            if (f.is_zero()) continue;
            Factorization fac = poly_factor(f, rng.next());
            CHECK(factorization_product(*F, fac) == f);
            for (const auto& [g, e] : fac.factors) {
                CHECK(poly_is_irreducible(g));
                CHECK(g.lc() == 1);
            }
        }
    }
}

TEST_CASE("poly_crt examples and properties") {
    auto F3 = ctx(3);
    Poly r = poly_crt({{pol(*F3, "0"), pol(*F3, "x")}, {pol(*F3, "1"), pol(*F3, "x + 1")}});
    CHECK(r == pol(*F3, "2*x"));
    CHECK(poly_crt({{pol(*F3, "x^2 + 1"), pol(*F3, "x^2")}}) == pol(*F3, "1"));
    CHECK(poly_crt({{pol(*F3, "1"), pol(*F3, "x")}, {pol(*F3, "1"), pol(*F3, "x + 1")}}) ==
          pol(*F3, "1"));
    CHECK_THROWS_AS(poly_crt({{pol(*F3, "1"), pol(*F3, "x")}, {pol(*F3, "2"), pol(*F3, "x^2")}}),
                    non_coprime_moduli);
    // property: congruences and degree bound
    auto F5 = ctx(5);
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        Poly m1 = pol(*F5, "x^2 + 2"); // irreducible over F_5? 2 is a QR? x^2+2: -2=3 non-square -> irr
        Poly m2 = pol(*F5, "x + 3");
        Poly r1(*F5), r2(*F5);
        r1.c = {static_cast<Fq>(rng.below(5)), static_cast<Fq>(rng.below(5))};
        r1.trim();
        r2.c = {static_cast<Fq>(rng.below(5))};
        r2.trim();
        Poly sol = poly_crt({{r1, m1}, {r2, m2}});
        CHECK((sol - r1) % m1 == Poly::zero(*F5));
        CHECK((sol - r2) % m2 == Poly::zero(*F5));
        CHECK(sol.deg() < m1.deg() + m2.deg());
    }
}

TEST_CASE("residue_root examples") {
    auto F3 = ctx(3);
    Poly m = residue_root(pol(*F3, "x"), pol(*F3, "1"), 3, -1);
    CHECK(m == pol(*F3, "2")); // 2^3 = 8 = -1 mod 3

    auto F2 = ctx(2);
    CHECK(residue_root(pol(*F2, "x"), pol(*F2, "1"), 2, +1) == pol(*F2, "1"));

    Poly pi = pol(*F3, "x^2 + 1");
    Poly r = residue_root(pi, pol(*F3, "x"), 3, +1);
    CHECK(r == pol(*F3, "2*x")); // (2x)^3 = 2x^3 = 2x*x^2 = -2x = x mod x^2+1
    CHECK(pow_mod(r, 3, pi) == pol(*F3, "x") % pi);
}

TEST_CASE("residue_root postcondition on random inputs") {
    for (std::uint64_t q : {2, 3, 9}) {
        auto F = ctx(q);
        Rng rng(q + 5);
        for (int i = 0; i < 100; ++i) {
            // random irreducible pi of degree 1..3
            Poly pi(*F);
            do {
                int d = 1 + static_cast<int>(rng.below(3));
                pi.c.assign(static_cast<std::size_t>(d) + 1, 0);
                for (int j = 0; j < d; ++j) pi.c[static_cast<std::size_t>(j)] = static_cast<Fq>(rng.below(F->q()));
                pi.c.back() = 1;
            } while (!poly_is_irreducible(pi));
            Poly t(*F);
            do {
                t.c.assign(static_cast<std::size_t>(pi.deg()), 0);
                for (auto& c : t.c) c = static_cast<Fq>(rng.below(F->q()));
                t.trim();
            } while (t.is_zero() || !gcd(t, pi).is_constant());
            int sign = rng.below(2) ? 1 : -1;
            Poly m = residue_root(pi, t, F->p(), sign);
            Poly want = sign < 0 ? (-t) % pi : t % pi;
            CHECK(pow_mod(m, F->p(), pi) == want);
        }
    }
}

TEST_CASE("residue_root for k prime to the characteristic") {
    auto F7 = ctx(7); // k = 3 with q = 7: 3 | 7 - 1
    Poly pi = pol(*F7, "x + 1");
    // 6 = -1 has cube roots mod 7: {3,5,6}; any valid root is accepted
    Poly m = residue_root(pi, pol(*F7, "6"), 3, +1);
    CHECK(pow_mod(m, 3, pi) == pol(*F7, "6") % pi);
    CHECK_THROWS_AS(residue_root(pi, pol(*F7, "2"), 3, +1), no_root); // 2 is a non-cube mod 7
}

TEST_CASE("monic divisors") {
    auto F5 = ctx(5);
    Factorization fac = poly_factor(pol(*F5, "x^2*(x+1)"), 1);
    auto divs = monic_divisors(*F5, fac);
    CHECK(divs.size() == 6); // x^0,1,2 times (x+1)^0,1
}
