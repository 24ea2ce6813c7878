#include <doctest.h>

#include "helpers.hpp"

using namespace cubicff;
using cubicff::test::ctx;
using cubicff::test::pol;
using cubicff::test::rf;

TEST_CASE("basis_pure examples") {
    auto F7 = ctx(7);
    IntegralBasis b1 = basis_pure(rf(*F7, "x^2*(x+1)"), 1);
    CHECK(b1.elems[1].den.is_one());
    CHECK(b1.elems[1].c1 == rf(*F7, "1"));
    CHECK(b1.elems[2].den == pol(*F7, "x")); // y^2/x
    CHECK(b1.elems[2].c2 == rf(*F7, "1"));

    IntegralBasis b2 = basis_pure(rf(*F7, "x*(x+1)"), 1);
    CHECK(b2.elems[1].den.is_one());
    CHECK(b2.elems[2].den.is_one()); // {1, y, y^2}

    // a = x^4: same module as {1, y', y'^2} for y' = y/x
    IntegralBasis b3 = basis_pure(rf(*F7, "x^4"), 1);
    CHECK(b3.elems[1].den == pol(*F7, "x"));
    CHECK(b3.elems[2].den == pol(*F7, "x^2"));

    // denominator exponents: a = 1/x gives {1, x*y, x*y^2}
    IntegralBasis b4 = basis_pure(rf(*F7, "1/x"), 1);
    CHECK(b4.elems[1].c1 == rf(*F7, "x"));
    CHECK(b4.elems[2].c2 == rf(*F7, "x"));
}

TEST_CASE("basis_pure verifies against ram_pure") {
    auto F7 = ctx(7);
    for (const char* s : {"x^2*(x+1)", "x*(x+1)", "x^4", "1/x", "x*(x+1)*(x+2)*(x+3)"}) {
        RatFn a = rf(*F7, s);
        IntegralBasis basis = basis_pure(a, 1);
        GenusReport rep = ram_pure(a, 1);
        BasisCheck chk = verify_basis(basis, rep, 1);
        INFO("a = " << s);
        for (const auto& m : chk.mismatches) INFO(m);
        CHECK(chk.ok);
    }
}

TEST_CASE("tampered basis is rejected") {
    auto F7 = ctx(7);
    RatFn a = rf(*F7, "x^2*(x+1)");
    IntegralBasis basis = basis_pure(a, 1);
    basis.elems[2].den = Poly::constant(*F7, 1); // claim {1, y, y^2} is maximal
    GenusReport rep = ram_pure(a, 1);
    BasisCheck chk = verify_basis(basis, rep, 1);
    CHECK_FALSE(chk.ok);
}

TEST_CASE("basis_impure: a = x over F_5 is monogenic") {
    auto F5 = ctx(5);
    IntegralBasis basis = basis_impure(rf(*F5, "x"), 1);
    CHECK(basis.provenance == "impure:crt");
    CHECK(basis.elems[2].den.is_one());
    GenusReport rep = ram_impure(rf(*F5, "x"), 1);
    BasisCheck chk = verify_basis(basis, rep, 1);
    for (const auto& m : chk.mismatches) INFO(m);
    CHECK(chk.ok);
}

TEST_CASE("basis_impure: Galois p=2 instance") {
    auto F2 = ctx(2);
    RatFn a = rf(*F2, "1/(x^2+x+1)");
    CHECK(is_galois(CanonicalForm{FormKind::Impure, a}, 1));
    IntegralBasis basis = basis_impure(a, 1);
    GenusReport rep = ram_impure(a, 1);
    BasisCheck chk = verify_basis(basis, rep, 1);
    for (const auto& m : chk.mismatches) INFO(m);
    CHECK(chk.ok);
}

TEST_CASE("basis_impure routes purely cubic fields through basis_pure") {
    auto F5 = ctx(5);
    IntegralBasis basis = basis_impure(rf(*F5, "x + 1/x"), 1);
    CHECK(basis.provenance == "impure:pure-route");
    CHECK(basis.transformed);
    GenusReport rep = ram_impure(rf(*F5, "x + 1/x"), 1);
    BasisCheck chk = verify_basis(basis, rep, 1);
    for (const auto& m : chk.mismatches) INFO(m);
    CHECK(chk.ok);
}

TEST_CASE("basis_char3 examples") {
    auto F3 = ctx(3);
    IntegralBasis b1 = basis_char3(rf(*F3, "1/x"), 1);
    // {x^2 z^2, x z, 1} up to ordering; stored as {1, xz, x^2 z^2}
    CHECK(b1.elems[1].c1 == rf(*F3, "x"));
    CHECK(b1.elems[1].den.is_one());
    CHECK(b1.elems[2].c2 == rf(*F3, "x^2"));
    CHECK(b1.elems[2].den.is_one());
    CHECK(b1.elems[1].to_string("z") == "x*z");
    CHECK(b1.elems[2].to_string("z") == "x^2*z^2");

    IntegralBasis b2 = basis_char3(rf(*F3, "1/x^3"), 1);
    CHECK(b2.elems[1].c1 == rf(*F3, "x"));
    CHECK(b2.elems[2].c2 == rf(*F3, "x^2"));
    CHECK(b2.transformed); // reduced generator differs

    IntegralBasis b3 = basis_char3(rf(*F3, "x"), 1);
    GenusReport rep3 = ram_char3(rf(*F3, "x"), 1);
    BasisCheck chk3 = verify_basis(b3, rep3, 1);
    for (const auto& m : chk3.mismatches) INFO(m);
    CHECK(chk3.ok);
}

TEST_CASE("basis_char3 verifies against ram_char3") {
    auto F3 = ctx(3);
    for (const char* s : {"1/x", "1/x^3", "x", "-x^2", "x^3 + x^2 + x"}) {
        RatFn a = rf(*F3, s);
        GasReduced red = gas_reduce(a, 1);
        IntegralBasis basis = basis_char3_from(red, 1);
        GenusReport rep = ram_char3_from(red, a, 1);
        BasisCheck chk = verify_basis(basis, rep, 1);
        INFO("a = " << s);
        for (const auto& m : chk.mismatches) INFO(m);
        CHECK(chk.ok);
    }
}

TEST_CASE("random pipeline bases verify per form") {
    struct Case {
        std::uint64_t q;
        FormKind kind;
    };
    for (Case c : {Case{5, FormKind::PureCubic}, Case{7, FormKind::PureCubic},
                   Case{2, FormKind::Impure}, Case{5, FormKind::Impure},
                   Case{3, FormKind::CharThree}, Case{9, FormKind::CharThree}}) {
        auto F = ctx(c.q);
        Rng rng(c.q * 131 + static_cast<int>(c.kind));
        int done = 0;
        while (done < 25) {
            RatFn a = c.kind == FormKind::PureCubic ? random_pure_instance(*F, rng, true)
                      : c.kind == FormKind::Impure  ? random_impure_instance(*F, rng)
                                                    : random_char3_instance(*F, rng);
            CanonicalForm form{c.kind, a};
            GenusReport rep = ram_for(form, 3);
            if (rep.constant) continue;
            IntegralBasis basis = basis_for(form, 3);
            BasisCheck chk = verify_basis(basis, rep, 3);
            INFO("q = " << c.q << " a = " << a.to_string());
            for (const auto& m : chk.mismatches) INFO(m);
            CHECK(chk.ok);
            ++done;
        }
    }
}
