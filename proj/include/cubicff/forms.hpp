#ifndef CUBICFF_FORMS_HPP
#define CUBICFF_FORMS_HPP

#include <memory>
#include <optional>
#include <string>

#include "cubicff/ratfunc.hpp"

namespace cubicff {

/// Fractional linear map z = (u1*y + u0)/(w1*y + w0) expressing a new
/// generator in terms of the old one.
struct GeneratorMap {
    RatFn u1, u0, w1, w0;

    static GeneratorMap identity(const FieldCtx& F) {
        return {RatFn::constant(F, 1), RatFn(F), RatFn(F), RatFn::constant(F, 1)};
    }
    static GeneratorMap affine(const RatFn& scale, const RatFn& shift) {
        const FieldCtx& F = scale.ctx();
        return {scale, shift, RatFn(F), RatFn::constant(F, 1)};
    }
    bool is_identity() const;
    std::string to_string() const;
};

/// Composition: (m2 after m1)(y) = m2(m1(y)).
GeneratorMap compose(const GeneratorMap& m2, const GeneratorMap& m1);

/// Monic cubic Y^3 + e Y^2 + f Y + g over F_q(x), validated irreducible and
/// separable at construction.
struct CubicInput {
    std::shared_ptr<const FieldCtx> ctx;
    RatFn e, f, g;

    CubicInput(std::shared_ptr<const FieldCtx> c, RatFn e_, RatFn f_, RatFn g_, std::uint64_t seed);
};

/// Does Y^3 + e Y^2 + f Y + g have a root in F_q(x)? (A cubic is reducible
/// over a field iff it has a root.)
bool cubic_has_root(const RatFn& e, const RatFn& f, const RatFn& g, std::uint64_t seed);

enum class FormKind { PureCubic, Impure, CharThree };

/// One of the three canonical one-parameter forms:
///   PureCubic: X^3 - a  (p != 3)
///   Impure:    X^3 - 3X - a  (p != 3)
///   CharThree: X^3 + aX + a^2  (p = 3)
struct CanonicalForm {
    FormKind kind;
    RatFn a;

    /// Coefficients (c2, c1, c0) of the defining cubic X^3 + c2 X^2 + c1 X + c0.
    void minimal_poly(RatFn& c2, RatFn& c1, RatFn& c0) const;
    std::string kind_name() const;
};

std::pair<CanonicalForm, GeneratorMap> classify(const CubicInput& in, std::uint64_t seed);

/// For an Impure form: the purely cubic refinement, when the extension is in
/// fact purely cubic. Returns the Kummer parameter c (a root of X^2+aX+1)
/// and the map U = (cY-1)/(Y-c) with U^3 = c.
std::optional<std::pair<RatFn, GeneratorMap>> purity_test(const CanonicalForm& form, std::uint64_t seed);

bool is_galois(const CanonicalForm& form, std::uint64_t seed);

/// PureCubic only: is L/K a constant field extension (a = u * b^3)?
bool is_constant_pure(const CanonicalForm& form, std::uint64_t seed);

/// Exact soundness check: substituting the map into the canonical minimal
/// polynomial vanishes modulo the input cubic.
bool generator_map_sound(const CubicInput& in, const CanonicalForm& form, const GeneratorMap& map);

} // namespace cubicff

#endif
