#include "cubicff/ratfunc.hpp"
#include "cubicff/reduction.hpp"

namespace cubicff {

// Root of X^2 + a1 X + a0, if one exists in F_q(x).
// p != 2: via the discriminant. p = 2, a1 != 0: substitute X = a1 W to reach
// W^2 + W = a0/a1^2, reduce additively, and decide by the constant term.
std::optional<RatFn> solve_quadratic(const RatFn& a1, const RatFn& a0, std::uint64_t seed) {
    const FieldCtx& F = a1.ctx();
    if (F.p() != 2) {
        RatFn disc = a1 * a1 - RatFn::from_int(F, 4) * a0;
        RatFn half = RatFn::constant(F, F.inv(F.from_int(2)));
        if (disc.is_zero()) return -a1 * half;
        auto s = sqrt_ratfn(disc, seed);
        if (!s) return std::nullopt;
        RatFn r1 = (-a1 + *s) * half;
        RatFn r2 = (-a1 - *s) * half;
        return ratfn_less(r1, r2) ? r1 : r2;
    }
    if (a1.is_zero()) {
        if (a0.is_zero()) return RatFn(F);
        return sqrt_ratfn(a0, seed); // Frobenius preimage, unique if it exists
    }
    RatFn c0 = a0 / (a1 * a1);
    if (c0.is_zero()) {
        // roots 0 and a1; canonical least
        RatFn zero(F);
        return ratfn_less(zero, a1) ? zero : a1;
    }
    ASReduced red = as_reduce(c0, 2, seed);
    Fq kappa = 0;
    if (!red.b.is_zero()) {
        if (!red.b.is_constant()) return std::nullopt;
        kappa = red.b.num.coeff(0);
    }
    auto z0 = solve_const_artin_schreier(F, kappa);
    if (!z0) return std::nullopt;
    // b = c0 + eta^2 - eta, so W = z0 + eta solves W^2 + W = c0 (char 2)
    RatFn W = RatFn::constant(F, *z0) + red.eta;
    RatFn r1 = a1 * W;
    RatFn r2 = r1 + a1; // companion root
    return ratfn_less(r1, r2) ? r1 : r2;
}

} // namespace cubicff
