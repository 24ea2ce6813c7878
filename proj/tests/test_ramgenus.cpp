#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace cubicff;
using cubicff::test::ctx;
using cubicff::test::pol;
using cubicff::test::rf;

namespace {

bool has_triple(const GenusReport& rep, const Place& pl, int e, int d) {
    for (const auto& t : rep.triples)
        if (t.place == pl && t.e == e && t.d == d) return true;
    return false;
}

} // namespace

TEST_CASE("genus_from_triples examples") {
    auto F7 = ctx(7);
    Place px = Place::finite(pol(*F7, "x"));
    Place inf = Place::at_infinity();
    CHECK(genus_from_triples({{px, 3, 2}, {inf, 3, 2}}) == 0);
    std::vector<RamTriple> five;
    for (const char* s : {"x", "x+1", "x+2", "x+3"})
        five.push_back({Place::finite(pol(*F7, s)), 3, 2});
    five.push_back({inf, 3, 2});
    CHECK(genus_from_triples(five) == 3);
    CHECK_THROWS_AS(genus_from_triples({{px, 3, 1}}), internal_inconsistency);
}

TEST_CASE("ram_pure examples") {
    auto F7 = ctx(7);
    GenusReport r1 = ram_pure(rf(*F7, "x"), 1);
    CHECK(r1.genus == 0);
    CHECK(r1.triples.size() == 2);
    CHECK(has_triple(r1, Place::finite(pol(*F7, "x")), 3, 2));
    CHECK(has_triple(r1, Place::at_infinity(), 3, 2));

    GenusReport r2 = ram_pure(rf(*F7, "x^2*(x+1)"), 1);
    CHECK(r2.genus == 0);
    CHECK(r2.triples.size() == 2);
    CHECK_FALSE(has_triple(r2, Place::at_infinity(), 3, 2)); // v_inf = -3

    GenusReport r3 = ram_pure(rf(*F7, "x*(x+1)*(x+2)*(x+3)"), 1);
    CHECK(r3.genus == 3);
    CHECK(r3.triples.size() == 5);

    GenusReport rc = ram_pure(rf(*F7, "2*x^3"), 1);
    CHECK(rc.constant);
    CHECK_FALSE(rc.genus.has_value());
    CHECK(rc.triples.empty());
}

TEST_CASE("ram_impure examples") {
    auto F5 = ctx(5);
    GenusReport r1 = ram_impure(rf(*F5, "x"), 1);
    CHECK(r1.genus == 0);
    CHECK(r1.triples.size() == 3);
    CHECK(has_triple(r1, Place::at_infinity(), 3, 2));
    CHECK(has_triple(r1, Place::finite(pol(*F5, "x+2")), 2, 1));
    CHECK(has_triple(r1, Place::finite(pol(*F5, "x+3")), 2, 1)); // x - 2 = x + 3

    // purely cubic in disguise: matches ram_pure of the Kummer parameter
    GenusReport r2 = ram_impure(rf(*F5, "x + 1/x"), 1);
    auto purity = purity_test(CanonicalForm{FormKind::Impure, rf(*F5, "x + 1/x")}, 1);
    REQUIRE(purity.has_value());
    GenusReport r2p = ram_pure(purity->first, 1);
    CHECK(r2.genus == r2p.genus);
    CHECK(r2.triples.size() == r2p.triples.size());

    // Galois instance: no partial triples
    GenusReport r3 = ram_impure(rf(*F5, "(2*x^2+2*x-1)/(x^2+x+1)"), 1);
    CHECK(r3.galois);
    for (const auto& t : r3.triples) CHECK(t.e == 3);
    long dd = 0;
    for (const auto& t : r3.triples) dd += static_cast<long>(t.d) * t.place.degree();
    CHECK(dd % 2 == 0);
}

TEST_CASE("ram_impure in characteristic 2") {
    auto F2 = ctx(2);
    // a = x: v_inf(a) = -1 fully ramified; partial places from 1 + 1/x
    GenusReport r = ram_impure(rf(*F2, "x"), 1);
    CHECK(has_triple(r, Place::at_infinity(), 3, 2));
    CHECK(has_triple(r, Place::finite(pol(*F2, "x")), 2, 2)); // v(1+1/x) = -1 at x, d = 2
    CHECK(r.genus == 0);
    for (const auto& t : r.triples)
        if (t.e == 2) CHECK(t.d % 2 == 0);
}

TEST_CASE("ram_char3 examples") {
    auto F3 = ctx(3);
    GenusReport r1 = ram_char3(rf(*F3, "1/x"), 1);
    CHECK(r1.genus == 0);
    CHECK(r1.triples.size() == 2);
    CHECK(has_triple(r1, Place::finite(pol(*F3, "x")), 3, 3));
    CHECK(has_triple(r1, Place::at_infinity(), 2, 1));

    // Galois a = -x^2: single wild place at infinity, d = 4, genus 0
    GenusReport r2 = ram_char3(rf(*F3, "-x^2"), 1);
    CHECK(r2.galois);
    CHECK(r2.genus == 0);
    REQUIRE(r2.triples.size() == 1);
    CHECK(r2.triples[0].place.infinite);
    CHECK(r2.triples[0].e == 3);
    CHECK(r2.triples[0].d == 4);
    CHECK(r2.genus == as3_genus_oracle(rf(*F3, "-x^2"), 1));

    GenusReport r3 = ram_char3(rf(*F3, "1/x^3"), 1);
    CHECK(r3.genus == 0);
    CHECK(has_triple(r3, Place::finite(pol(*F3, "x")), 3, 3));
    CHECK(has_triple(r3, Place::at_infinity(), 2, 1));
}

TEST_CASE("ram_char3 on the parity-obstructed instance") {
    auto F3 = ctx(3);
    GenusReport r = ram_char3(rf(*F3, "x^3 + x^2 + x"), 1);
    CHECK(has_triple(r, Place::at_infinity(), 3, 3));
    CHECK(has_triple(r, Place::finite(pol(*F3, "x")), 2, 1));
    CHECK(has_triple(r, Place::finite(pol(*F3, "x^2+x+1")), 2, 1));
    CHECK(r.genus == 1);
}

TEST_CASE("triple invariants on random instances") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 13}) {
        auto F = ctx(q);
        Rng rng(q * 997);
        for (int i = 0; i < 50; ++i) {
            GenusReport rep;
            if (F->p() == 3) {
                rep = ram_char3(random_char3_instance(*F, rng), rng.next());
            } else if (i % 2 == 0) {
                rep = ram_pure(random_pure_instance(*F, rng, false), rng.next());
            } else {
                rep = ram_impure(random_impure_instance(*F, rng), rng.next());
            }
            long dd = 0;
            for (const auto& t : rep.triples) {
                dd += static_cast<long>(t.d) * t.place.degree();
                if (t.e == 3 && F->p() != 3) CHECK(t.d == 2);
                if (t.e == 3 && F->p() == 3) {
                    CHECK(t.d >= 3);
                    CHECK((t.d - 2) % 3 != 0);
                }
                if (t.e == 2 && F->p() != 2) CHECK(t.d == 1);
                if (t.e == 2 && F->p() == 2) CHECK(t.d % 2 == 0);
            }
            CHECK(dd % 2 == 0);
            CHECK(rep.constant == rep.triples.empty());
            if (rep.genus) CHECK(*rep.genus >= 0);
            if (rep.galois)
                for (const auto& t : rep.triples) CHECK(t.e != 2);
        }
    }
}

TEST_CASE("batch evaluation is deterministic and order-preserving") {
    auto F7 = ctx(7);
    std::vector<CanonicalForm> forms;
    for (const char* s : {"x", "x^2*(x+1)", "x*(x+1)*(x+2)*(x+3)", "2*x^3"})
        forms.push_back(CanonicalForm{FormKind::PureCubic, rf(*F7, s)});
    auto seq = ram_batch(forms, 5, 1);
    auto par = ram_batch(forms, 5, 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].genus == par[i].genus);
        CHECK(seq[i].triples.size() == par[i].triples.size());
    }
}
