#ifndef CUBICFF_REDUCTION_HPP
#define CUBICFF_REDUCTION_HPP

#include <string>
#include <vector>

#include "cubicff/ratfunc.hpp"

namespace cubicff {

struct ReductionStep {
    Place place;
    RatFn shift; // the w used at this step
    int lambda;
    std::string describe() const;
};

/// Result of the additive Artin-Schreier reduction: b = a + eta^r - eta with
/// every finite pole order of b prime to r and deg(b) <= 0 or prime to r.
struct ASReduced {
    RatFn b;
    RatFn eta;
    std::vector<ReductionStep> history;
};

/// Artin-Schreier reduction for X^r - X - a, r = p (the wild case).
ASReduced as_reduce(const RatFn& a, std::uint32_t r, std::uint64_t seed);

/// Result of the generalized reduction for X^3 + aX + a^2 in characteristic 3.
/// b is in local standard form at every finite place (v >= 0 or gcd(v,3)=1)
/// and relates to a by b = a*u^2 for the accumulated multiplier; the reduced
/// generator is z = gen_scale*y + gen_shift.
///
/// A parameter in simultaneous standard form at the finite places and at
/// infinity does not always exist (the valuations of a and b agree mod 2 at
/// every place, which can force a pole somewhere). inf_val carries the local
/// standard valuation at infinity computed by a separate infinity-only
/// reduction: the intrinsic datum the ramification formulas consume. When a
/// globally standard parameter was found, fully_standard is true and
/// inf_val = -deg(b).
struct GasReduced {
    RatFn b;
    RatFn gen_scale, gen_shift;
    int inf_val = 0;
    bool fully_standard = false;
    std::vector<ReductionStep> history;
};

GasReduced gas_reduce(const RatFn& a, std::uint64_t seed);

/// Contract checks used by tests and the acceptance suite.
bool finite_poles_prime_to(const RatFn& b, std::uint32_t r, std::uint64_t seed);
bool infinity_standard(const RatFn& b, std::uint32_t r);

} // namespace cubicff

#endif
