#ifndef CUBICFF_POLY_HPP
#define CUBICFF_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cubicff/gf.hpp"

namespace cubicff {

/// Deterministic RNG used everywhere a random choice is made (splitmix64).
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

/// Dense univariate polynomial over F_q. Coefficients low-to-high, no
/// trailing zeros; the zero polynomial has an empty coefficient vector and
/// degree -1 (standing in for the -infinity marker).
struct Poly {
    const FieldCtx* F = nullptr;
    std::vector<Fq> c;

    Poly() = default;
    explicit Poly(const FieldCtx& ctx) : F(&ctx) {}
    Poly(const FieldCtx& ctx, std::vector<Fq> coeffs) : F(&ctx), c(std::move(coeffs)) { trim(); }

    static Poly zero(const FieldCtx& ctx) { return Poly(ctx); }
    static Poly constant(const FieldCtx& ctx, Fq a) {
        Poly r(ctx);
        if (a) r.c = {a};
        return r;
    }
    static Poly from_int(const FieldCtx& ctx, std::int64_t k) { return constant(ctx, ctx.from_int(k)); }
    /// c * x^k
    static Poly monomial(const FieldCtx& ctx, Fq a, std::size_t k);
    static Poly x(const FieldCtx& ctx) { return monomial(ctx, 1, 1); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    Fq lc() const { return c.empty() ? 0 : c.back(); }
    Fq coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    bool is_constant() const { return c.size() <= 1; }

    Fq eval(Fq x) const;
    std::string to_string(const std::string& var = "x") const;
};

bool operator==(const Poly& a, const Poly& b);
inline bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Fq a, const Poly& b);

/// Canonical order: by degree, then coefficients compared from the highest
/// power down in the element order. Used for factor lists and place sorting.
bool poly_less(const Poly& a, const Poly& b);

/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

Poly monic(const Poly& a);
Poly gcd(Poly a, Poly b); // monic
/// g = gcd(a,b) monic together with u,v such that u*a + v*b = g.
struct XgcdResult {
    Poly g, u, v;
};
XgcdResult xgcd(const Poly& a, const Poly& b);
Poly inv_mod(const Poly& a, const Poly& m);
Poly pow_mod(Poly base, std::uint64_t e, const Poly& m);
Poly derivative(const Poly& a);

/// Multiplicity of the irreducible pi in a (a nonzero).
int multiplicity(const Poly& pi, Poly a);

struct Factorization {
    Fq unit = 1;
    std::vector<std::pair<Poly, int>> factors; // monic irreducible, exponent; sorted
};

/// Full factorization over F_q; deterministic for a fixed seed.
Factorization poly_factor(const Poly& f, std::uint64_t seed);
bool poly_is_irreducible(const Poly& f);
Poly factorization_product(const FieldCtx& F, const Factorization& fac);

/// Unique r with deg r < deg(prod moduli) and r = residue mod each modulus.
Poly poly_crt(const std::vector<std::pair<Poly, Poly>>& pairs);

/// m with deg m < deg pi and m^k = sign*t mod pi. k in {1, p} always
/// succeeds (Frobenius); other prime k may throw no_root.
Poly residue_root(const Poly& pi, const Poly& t, std::uint32_t k, int sign);

/// All monic divisors of the factored polynomial (exponent combinations).
std::vector<Poly> monic_divisors(const FieldCtx& F, const Factorization& fac, std::size_t limit = 200000);

} // namespace cubicff

#endif
