#include <doctest.h>

#include "helpers.hpp"

using namespace cubicff;
using cubicff::test::ctx;
using cubicff::test::pol;
using cubicff::test::rf;

TEST_CASE("kummer_genus_oracle examples") {
    auto F7 = ctx(7);
    CHECK(kummer_genus_oracle(rf(*F7, "x*(x+1)*(x+2)*(x+3)"), 1) == 3);
    CHECK(kummer_genus_oracle(rf(*F7, "x"), 1) == 0);
    CHECK(kummer_genus_oracle(rf(*F7, "x^2*(x+1)"), 1) == 0);
    auto F5 = ctx(5);
    CHECK_THROWS_AS(kummer_genus_oracle(rf(*F5, "x"), 1), wrong_constant_field);
}

TEST_CASE("as3_genus_oracle examples") {
    auto F3 = ctx(3);
    CHECK(as3_genus_oracle(rf(*F3, "-x^2"), 1) == 0);
    CHECK(as3_genus_oracle(rf(*F3, "-x^6"), 1) == 0);
    // b = (x^2+1)/x: poles at x (m=1) and infinity (m=1):
    // 2g - 2 = -6 + 2*((1+1) + (1+1)) = 2, so g = 2; checked against the
    // pipeline in "oracles agree" below.
    RatFn b = rf(*F3, "(x^2+1)/x");
    CHECK(as3_genus_oracle(-(b * b), 1) == 2);
    CHECK(ram_char3(-(b * b), 1).genus == 2);
    // b = 1/x^3 + x: poles x (m=3), infinity (m=1): 2g - 2 = -6 + 2*(4+2) = 6
    RatFn b2 = rf(*F3, "1/x^3 + x");
    CHECK(as3_genus_oracle(-(b2 * b2), 1) == 4);
    CHECK_THROWS_AS(as3_genus_oracle(rf(*F3, "1/x"), 1), not_galois);
}

TEST_CASE("oracles agree with the pipeline") {
    for (std::uint64_t q : {7, 13}) {
        auto F = ctx(q);
        Rng rng(q * 7);
        for (int i = 0; i < 60; ++i) {
            RatFn a = random_pure_instance(*F, rng, true);
            GenusReport rep = ram_pure(a, 2);
            REQUIRE(rep.genus.has_value());
            CHECK(*rep.genus == kummer_genus_oracle(a, 2));
        }
    }
    for (std::uint64_t q : {3, 9}) {
        auto F = ctx(q);
        Rng rng(q * 11);
        int done = 0;
        while (done < 40) {
            RatFn a = random_char3_galois_instance(*F, rng);
            GenusReport rep = ram_char3(a, 2);
            if (rep.constant) continue;
            REQUIRE(rep.genus.has_value());
            CHECK(*rep.genus == as3_genus_oracle(a, 2));
            ++done;
        }
    }
}

TEST_CASE("generator_fuzz examples") {
    auto F7 = ctx(7);
    // same field: a and (x+1)^3 * a
    auto d1 = compare_reports(CanonicalForm{FormKind::PureCubic, rf(*F7, "x")},
                              CanonicalForm{FormKind::PureCubic, rf(*F7, "(x+1)^3*x")}, 1, "same");
    CHECK_FALSE(d1.has_value());
    // negative control: genuinely different fields
    auto d2 = compare_reports(CanonicalForm{FormKind::PureCubic, rf(*F7, "x")},
                              CanonicalForm{FormKind::PureCubic, rf(*F7, "x+1")}, 1, "diff");
    CHECK_FALSE(d2.has_value()); // same shape: both genus 0 with two deg-1 places, so equal key
    auto d3 = compare_reports(CanonicalForm{FormKind::PureCubic, rf(*F7, "x")},
                              CanonicalForm{FormKind::PureCubic, rf(*F7, "x*(x+1)*(x+2)*(x+3)")}, 1,
                              "diff");
    CHECK(d3.has_value()); // genus 0 vs 3

    auto F3 = ctx(3);
    auto d4 = compare_reports(CanonicalForm{FormKind::CharThree, rf(*F3, "1/x^3")},
                              CanonicalForm{FormKind::CharThree, rf(*F3, "1/x")}, 1, "gas");
    CHECK_FALSE(d4.has_value());
}

TEST_CASE("generator_fuzz finds no discrepancies") {
    for (std::uint64_t q : {2, 3, 5, 7}) {
        auto F = ctx(q);
        Rng rng(q * 3 + 1);
        for (int i = 0; i < 10; ++i) {
            if (F->p() == 3) {
                auto d = generator_fuzz(CanonicalForm{FormKind::CharThree, random_char3_instance(*F, rng)},
                                        rng.next(), 5);
                CHECK(d.empty());
            } else {
                auto d = generator_fuzz(
                    CanonicalForm{FormKind::PureCubic, random_pure_instance(*F, rng, false)}, rng.next(),
                    5);
                CHECK(d.empty());
                auto d2 = generator_fuzz(
                    CanonicalForm{FormKind::Impure, random_impure_instance(*F, rng)}, rng.next(), 5);
                CHECK(d2.empty());
            }
        }
    }
}

TEST_CASE("kummer_split_spotcheck examples") {
    auto F7 = ctx(7);
    CanonicalForm form{FormKind::PureCubic, rf(*F7, "x")};
    // X^3 - x mod (x-1) = X^3 - 1 = (X-1)(X-2)(X-4): valid {1,1,1}
    CHECK(kummer_split_spotcheck(form, Place::finite(pol(*F7, "x-1")), 1) == SpotcheckResult::Valid);
    // X^3 - 3 irreducible (3 a non-cube): valid {3}
    CHECK(kummer_split_spotcheck(form, Place::finite(pol(*F7, "x-3")), 1) == SpotcheckResult::Valid);
    // ramified place: skipped
    CHECK(kummer_split_spotcheck(form, Place::finite(pol(*F7, "x")), 1) == SpotcheckResult::Skipped);
}

TEST_CASE("spotcheck never reports invalid patterns") {
    for (std::uint64_t q : {5, 7, 3}) {
        auto F = ctx(q);
        Rng rng(q + 3);
        int invalid = 0, checked = 0;
        for (int i = 0; i < 60; ++i) {
            CanonicalForm form = F->p() == 3
                                     ? CanonicalForm{FormKind::CharThree, random_char3_instance(*F, rng)}
                                     : CanonicalForm{FormKind::PureCubic,
                                                     random_pure_instance(*F, rng, false)};
            // random place of degree 1 or 2
            Poly pi(*F);
            do {
                int d = 1 + static_cast<int>(rng.below(2));
                pi.c.assign(static_cast<std::size_t>(d) + 1, 0);
                for (int j = 0; j < d; ++j) pi.c[static_cast<std::size_t>(j)] = static_cast<Fq>(rng.below(F->q()));
                pi.c.back() = 1;
            } while (!poly_is_irreducible(pi));
            SpotcheckResult r = kummer_split_spotcheck(form, Place::finite(pi), rng.next());
            if (r == SpotcheckResult::Invalid) ++invalid;
            if (r != SpotcheckResult::Skipped) ++checked;
        }
        CHECK(invalid == 0);
        CHECK(checked > 0);
    }
}
