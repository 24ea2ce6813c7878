#include "cubicff/ratfunc.hpp"

#include <algorithm>

namespace cubicff {

RatFn::RatFn(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    const FieldCtx& F = *num.F;
    if (den.is_zero()) throw error("RatFn: zero denominator");
    if (num.is_zero()) {
        den = Poly::constant(F, 1);
        return;
    }
    Poly g = gcd(num, den);
    if (!g.is_one()) {
        num = num / g;
        den = den / g;
    }
    if (den.lc() != 1) {
        Fq s = F.inv(den.lc());
        num = s * num;
        den = s * den;
    }
}

RatFn::RatFn(Poly n) : num(std::move(n)), den(Poly::constant(*num.F, 1)) {}

bool operator==(const RatFn& a, const RatFn& b) { return a.num == b.num && a.den == b.den; }

RatFn operator+(const RatFn& a, const RatFn& b) { return RatFn(a.num * b.den + b.num * a.den, a.den * b.den); }
RatFn operator-(const RatFn& a, const RatFn& b) { return RatFn(a.num * b.den - b.num * a.den, a.den * b.den); }
RatFn operator-(const RatFn& a) { return RatFn(-a.num, a.den); }
RatFn operator*(const RatFn& a, const RatFn& b) { return RatFn(a.num * b.num, a.den * b.den); }

RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw error("RatFn division by zero");
    return RatFn(a.num * b.den, a.den * b.num);
}

RatFn pow(const RatFn& a, int e) {
    const FieldCtx& F = a.ctx();
    if (e == 0) return RatFn::constant(F, 1);
    RatFn base = e < 0 ? RatFn::constant(F, 1) / a : a;
    int n = e < 0 ? -e : e;
    RatFn r = RatFn::constant(F, 1);
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool ratfn_less(const RatFn& a, const RatFn& b) {
    if (a.num != b.num) return poly_less(a.num, b.num);
    return poly_less(a.den, b.den);
}

bool operator==(const Place& a, const Place& b) {
    if (a.infinite != b.infinite) return false;
    return a.infinite || a.pi == b.pi;
}

bool place_less(const Place& a, const Place& b) {
    if (a.infinite != b.infinite) return !a.infinite; // infinity last
    if (a.infinite) return false;
    return poly_less(a.pi, b.pi);
}

int valuation(const RatFn& a, const Place& pl) {
    if (a.is_zero()) throw zero_argument();
    if (pl.infinite) return a.den.deg() - a.num.deg();
    return multiplicity(pl.pi, a.num) - multiplicity(pl.pi, a.den);
}

Poly residue_at(const RatFn& a, const Place& pl) {
    const FieldCtx& F = a.ctx();
    if (pl.infinite) {
        int d = a.num.deg() - a.den.deg();
        if (a.is_zero() || d < 0) return Poly::zero(F);
        if (d > 0) throw negative_valuation();
        return Poly::constant(F, F.div(a.num.lc(), a.den.lc()));
    }
    if (a.is_zero()) return Poly::zero(F);
    if (valuation(a, pl) < 0) throw negative_valuation();
    Poly d = a.den % pl.pi;
    return (a.num * inv_mod(d, pl.pi)) % pl.pi;
}

PartialFractions partial_fractions(const RatFn& a, std::uint64_t seed) {
    const FieldCtx& F = a.ctx();
    PartialFractions out;
    auto [q, r] = divrem(a.num, a.den);
    out.poly_part = q;
    if (r.is_zero()) return out;
    Factorization fac = poly_factor(a.den, seed);
    for (const auto& [pi, e] : fac.factors) {
        Poly pe = Poly::constant(F, 1);
        for (int i = 0; i < e; ++i) pe = pe * pi;
        Poly cof = a.den / pe;
        // B = r * cof^{-1} mod pi^e, then expand B in base pi
        Poly B = (r * inv_mod(cof, pe)) % pe;
        for (int j = 0; j < e && !B.is_zero(); ++j) {
            auto [q2, digit] = divrem(B, pi);
            if (!digit.is_zero()) out.terms.push_back({pi, e - j, digit});
            B = q2;
        }
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& x, const auto& y) {
        if (!(x.pi == y.pi)) return poly_less(x.pi, y.pi);
        return x.k > y.k;
    });
    return out;
}

RatFn partial_fractions_sum(const FieldCtx& F, const PartialFractions& pf) {
    RatFn s{RatFn(pf.poly_part)};
    for (const auto& t : pf.terms) {
        Poly pe = Poly::constant(F, 1);
        for (int i = 0; i < t.k; ++i) pe = pe * t.pi;
        s = s + RatFn(t.t, pe);
    }
    return s;
}

std::optional<RatFn> sqrt_ratfn(const RatFn& a, std::uint64_t seed) {
    if (a.is_zero()) throw zero_argument();
    const FieldCtx& F = a.ctx();
    Factorization fn = poly_factor(a.num, seed);
    Factorization fd = poly_factor(a.den, seed);
    Fq u = fn.unit;
    for (const auto& [pi, e] : fn.factors)
        if (e % 2) return std::nullopt;
    for (const auto& [pi, e] : fd.factors)
        if (e % 2) return std::nullopt;
    auto w = const_nth_root(F, u, 2);
    if (!w) return std::nullopt;
    Poly n = Poly::constant(F, *w);
    for (const auto& [pi, e] : fn.factors)
        for (int i = 0; i < e / 2; ++i) n = n * pi;
    Poly d = Poly::constant(F, 1);
    for (const auto& [pi, e] : fd.factors)
        for (int i = 0; i < e / 2; ++i) d = d * pi;
    return RatFn(n, d);
}

std::optional<std::pair<Fq, RatFn>> cube_unit_decompose(const RatFn& a, std::uint64_t seed) {
    if (a.is_zero()) throw zero_argument();
    const FieldCtx& F = a.ctx();
    Factorization fn = poly_factor(a.num, seed);
    Factorization fd = poly_factor(a.den, seed);
    for (const auto& [pi, e] : fn.factors)
        if (e % 3) return std::nullopt;
    for (const auto& [pi, e] : fd.factors)
        if (e % 3) return std::nullopt;
    Poly n = Poly::constant(F, 1);
    for (const auto& [pi, e] : fn.factors)
        for (int i = 0; i < e / 3; ++i) n = n * pi;
    Poly d = Poly::constant(F, 1);
    for (const auto& [pi, e] : fd.factors)
        for (int i = 0; i < e / 3; ++i) d = d * pi;
    return std::make_pair(fn.unit, RatFn(n, d));
}

std::string RatFn::to_string(const std::string& var) const {
    if (den.is_one()) return num.to_string(var);
    std::string n = num.to_string(var);
    std::string d = den.to_string(var);
    bool npar = num.deg() > 0 || n.find('+') != std::string::npos;
    bool dpar = den.deg() > 0 || d.find('+') != std::string::npos;
    return (npar ? "(" + n + ")" : n) + "/" + (dpar ? "(" + d + ")" : d);
}

} // namespace cubicff
