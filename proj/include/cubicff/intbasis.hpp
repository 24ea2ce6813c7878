#ifndef CUBICFF_INTBASIS_HPP
#define CUBICFF_INTBASIS_HPP

#include <array>
#include <string>
#include <vector>

#include "cubicff/ramgenus.hpp"

namespace cubicff {

/// (c2 y^2 + c1 y + c0) / den, an element of the cubic extension written in
/// the basis generator. Integral over F_q[x] by construction; the verifier
/// re-checks this symbolically.
struct BasisElement {
    RatFn c2, c1, c0;
    Poly den;

    static BasisElement one(const FieldCtx& F) {
        return {RatFn(F), RatFn(F), RatFn::constant(F, 1), Poly::constant(F, 1)};
    }
    std::string to_string(const std::string& gen) const;
};

/// Module basis of the integral closure of F_q[x] in L. Elements are written
/// in terms of a basis generator whose minimal polynomial is gen_form;
/// gen_map expresses that generator in terms of the canonical-form generator.
struct IntegralBasis {
    std::array<BasisElement, 3> elems; // elems[0] = 1
    CanonicalForm gen_form;
    GeneratorMap gen_map;
    bool transformed = false; // basis generator differs from the canonical one
    std::string provenance;
};

IntegralBasis basis_pure(const RatFn& a, std::uint64_t seed);
IntegralBasis basis_impure(const RatFn& a, std::uint64_t seed);
IntegralBasis basis_char3(const RatFn& a, std::uint64_t seed);
/// char-3 basis reusing an existing reduction.
IntegralBasis basis_char3_from(const GasReduced& red, std::uint64_t seed);
IntegralBasis basis_for(const CanonicalForm& form, std::uint64_t seed);

struct BasisCheck {
    bool ok = true;
    std::vector<std::string> mismatches;
};

/// Conductor-discriminant verification: every element is integral and, at
/// every finite place, v(disc(basis)) equals the sum of the different
/// exponents of the triples at that place.
BasisCheck verify_basis(const IntegralBasis& basis, const GenusReport& report, std::uint64_t seed);

/// Characteristic polynomial X^3 + t2 X^2 + t1 X + t0 of an element.
void element_char_poly(const BasisElement& el, const CanonicalForm& gen_form, RatFn& t2, RatFn& t1,
                       RatFn& t0);

/// Discriminant of X^3 + c2 X^2 + c1 X + c0.
RatFn cubic_disc(const RatFn& c2, const RatFn& c1, const RatFn& c0);

} // namespace cubicff

#endif
