#ifndef CUBICFF_RATFUNC_HPP
#define CUBICFF_RATFUNC_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubicff/poly.hpp"

namespace cubicff {

/// Rational function over F_q(x): num/den with den monic and gcd(num,den)=1.
/// Zero is 0/1.
struct RatFn {
    Poly num, den;

    RatFn() = default;
    explicit RatFn(const FieldCtx& F) : num(Poly::zero(F)), den(Poly::constant(F, 1)) {}
    RatFn(Poly n, Poly d);
    explicit RatFn(Poly n);

    static RatFn from_int(const FieldCtx& F, std::int64_t k) { return RatFn(Poly::from_int(F, k)); }
    static RatFn constant(const FieldCtx& F, Fq a) { return RatFn(Poly::constant(F, a)); }
    static RatFn x(const FieldCtx& F) { return RatFn(Poly::x(F)); }

    const FieldCtx& ctx() const { return *num.F; }
    bool is_zero() const { return num.is_zero(); }
    bool is_constant() const { return num.is_constant() && den.is_one(); }
    /// deg num - deg den (so v_infinity = -degree); -1 placeholder never used for zero.
    int degree() const { return num.deg() - den.deg(); }

    std::string to_string(const std::string& var = "x") const;
};

bool operator==(const RatFn& a, const RatFn& b);
inline bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }
RatFn operator+(const RatFn& a, const RatFn& b);
RatFn operator-(const RatFn& a, const RatFn& b);
RatFn operator-(const RatFn& a);
RatFn operator*(const RatFn& a, const RatFn& b);
RatFn operator/(const RatFn& a, const RatFn& b);
RatFn pow(const RatFn& a, int e);

/// Order by numerator (canonical poly order), ties by denominator. Used for
/// the "least root" conventions.
bool ratfn_less(const RatFn& a, const RatFn& b);

/// A place of F_q(x): a monic irreducible polynomial or the infinite place.
struct Place {
    bool infinite = false;
    Poly pi; // meaningful iff !infinite

    static Place at_infinity() {
        Place p;
        p.infinite = true;
        return p;
    }
    static Place finite(Poly prime) {
        Place p;
        p.pi = std::move(prime);
        return p;
    }
    int degree() const { return infinite ? 1 : pi.deg(); }
    std::string to_string() const { return infinite ? "infinity" : pi.to_string(); }
};

bool operator==(const Place& a, const Place& b);
/// (degree, lex) with infinity last.
bool place_less(const Place& a, const Place& b);

/// Exact valuation v_pl(a); throws zero_argument for a = 0.
int valuation(const RatFn& a, const Place& pl);

/// Image of a in the residue field k(pl); a polynomial of degree < deg pi for
/// finite places, a constant for the infinite place.
Poly residue_at(const RatFn& a, const Place& pl);

struct PartialFractions {
    Poly poly_part;
    // term t / pi^k with deg t < deg pi, k >= 1
    struct Term {
        Poly pi;
        int k;
        Poly t;
    };
    std::vector<Term> terms;
};

PartialFractions partial_fractions(const RatFn& a, std::uint64_t seed);
RatFn partial_fractions_sum(const FieldCtx& F, const PartialFractions& pf);

/// s with s^2 = a, when one exists; canonical sign choice.
std::optional<RatFn> sqrt_ratfn(const RatFn& a, std::uint64_t seed);

/// (u, b) with a = u * b^3, u a constant, when every valuation of a is
/// divisible by 3; b has monic numerator and denominator.
std::optional<std::pair<Fq, RatFn>> cube_unit_decompose(const RatFn& a, std::uint64_t seed);

/// A root of X^2 + a1 X + a0 in F_q(x), if any; canonical least root for
/// p != 2 (least numerator). Defined in quadratic.cpp.
std::optional<RatFn> solve_quadratic(const RatFn& a1, const RatFn& a0, std::uint64_t seed);

} // namespace cubicff

#endif
