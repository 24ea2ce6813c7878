#include "cubicff/poly.hpp"

#include <algorithm>
#include <cassert>

namespace cubicff {

Poly Poly::monomial(const FieldCtx& ctx, Fq a, std::size_t k) {
    Poly r(ctx);
    if (a) {
        r.c.assign(k + 1, 0);
        r.c[k] = a;
    }
    return r;
}

Fq Poly::eval(Fq x) const {
    Fq r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = F->add(F->mul(r, x), c[i]);
    return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

Poly operator+(const Poly& a, const Poly& b) {
    const FieldCtx& F = *a.F;
    Poly r(F);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    const FieldCtx& F = *a.F;
    Poly r(F);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.sub(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = a.F->neg(x);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    const FieldCtx& F = *a.F;
    if (a.is_zero() || b.is_zero()) return Poly(F);
    Poly r(F);
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    r.trim();
    return r;
}

Poly operator*(Fq a, const Poly& b) {
    Poly r = b;
    for (auto& x : r.c) x = b.F->mul(a, x);
    r.trim();
    return r;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    const FieldCtx& F = *a.F;
    if (b.is_zero()) throw error("Poly division by zero");
    Poly q(F), r = a;
    if (r.deg() >= b.deg()) q.c.assign(r.c.size() - b.c.size() + 1, 0);
    Fq binv = F.inv(b.lc());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        std::size_t shift = r.c.size() - b.c.size();
        Fq qc = F.mul(r.lc(), binv);
        q.c[shift] = qc;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r.c[shift + i] = F.sub(r.c[shift + i], F.mul(qc, b.c[i]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }
bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly monic(const Poly& a) {
    if (a.is_zero() || a.lc() == 1) return a;
    return a.F->inv(a.lc()) * a;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

XgcdResult xgcd(const Poly& a, const Poly& b) {
    const FieldCtx& F = *a.F;
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(F, 1), s1 = Poly(F);
    Poly t0 = Poly(F), t1 = Poly::constant(F, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s);
        Poly t = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (!r0.is_zero() && r0.lc() != 1) {
        Fq inv = F.inv(r0.lc());
        r0 = inv * r0;
        s0 = inv * s0;
        t0 = inv * t0;
    }
    return {r0, s0, t0};
}

Poly inv_mod(const Poly& a, const Poly& m) {
    auto r = xgcd(a % m, m);
    if (r.g.deg() != 0) throw error("inv_mod: not invertible");
    return r.u % m;
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& m) {
    const FieldCtx& F = *base.F;
    Poly r = Poly::constant(F, 1) % m;
    base = base % m;
    while (e) {
        if (e & 1) r = (r * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

Poly derivative(const Poly& a) {
    const FieldCtx& F = *a.F;
    Poly r(F);
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), a.c[i]);
    r.trim();
    return r;
}

int multiplicity(const Poly& pi, Poly a) {
    int m = 0;
    for (;;) {
        auto [q, r] = divrem(a, pi);
        if (!r.is_zero()) return m;
        ++m;
        a = std::move(q);
        if (a.is_constant()) return m;
    }
}

namespace {

// f(x) = g(x^p) with g obtained by Frobenius-inverting the coefficients.
Poly pth_root(const Poly& f) {
    const FieldCtx& F = *f.F;
    const std::uint32_t p = F.p();
    Poly g(F);
    g.c.assign(f.c.size() / p + 1, 0);
    for (std::size_t i = 0; i < f.c.size(); i += p) g.c[i / p] = F.frobenius_inv(f.c[i]);
    g.trim();
    return g;
}

// squarefree part decomposition: list of (squarefree poly, multiplicity)
void squarefree_decompose(const Poly& f, int outer, std::vector<std::pair<Poly, int>>& out) {
    const FieldCtx& F = *f.F;
    const std::uint32_t p = F.p();
    if (f.is_constant()) return;
    Poly d = derivative(f);
    if (d.is_zero()) {
        // f is a p-th power
        squarefree_decompose(pth_root(f), outer * static_cast<int>(p), out);
        return;
    }
    Poly g = gcd(f, d);
    Poly w = f / g; // product of squarefree factors, each to the first power
    int i = 1;
    while (!w.is_constant()) {
        Poly y = gcd(w, g);
        Poly part = w / y;
        if (!part.is_constant()) out.emplace_back(monic(part), outer * i);
        g = g / y;
        w = std::move(y);
        ++i;
    }
    if (!g.is_constant()) squarefree_decompose(g, outer, out);
}

// distinct-degree: squarefree monic f -> list of (product of deg-d irreducibles, d)
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) {
    const FieldCtx& F = *f.F;
    std::vector<std::pair<Poly, int>> out;
    Poly rest = f;
    Poly x = Poly::x(F);
    Poly h = x % rest;
    int d = 0;
    while (rest.deg() > 2 * (d + 1) - 1 && !rest.is_constant()) {
        ++d;
        h = pow_mod(h, F.q(), rest);
        Poly g = gcd(rest, h - x);
        if (!g.is_constant()) {
            out.emplace_back(g, d);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (!rest.is_constant()) out.emplace_back(rest, rest.deg());
    return out;
}

// equal-degree splitting (Cantor-Zassenhaus), f squarefree product of deg-d irreducibles
void equal_degree(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
    const FieldCtx& F = *f.F;
    if (f.deg() == d) {
        out.push_back(monic(f));
        return;
    }
    const std::uint64_t q = F.q();
    Poly split(F);
    for (;;) {
        Poly r(F);
        r.c.resize(static_cast<std::size_t>(f.deg()), 0);
        for (auto& coef : r.c) coef = static_cast<Fq>(rng.below(q));
        r.trim();
        if (r.is_constant()) continue;
        Poly g = gcd(f, r);
        if (!g.is_constant() && g.deg() < f.deg()) {
            split = g;
            break;
        }
        if (F.p() == 2) {
            // trace map over F_2: T(r) = r + r^2 + r^4 + ... (n*d terms)
            std::uint32_t steps = F.n() * static_cast<std::uint32_t>(d);
            Poly t = r % f, acc = t;
            for (std::uint32_t i = 1; i < steps; ++i) {
                t = (t * t) % f;
                acc = acc + t;
            }
            g = gcd(f, acc);
        } else {
            std::uint64_t e = 1;
            for (int i = 0; i < d; ++i) e *= q;
            Poly t = pow_mod(r, (e - 1) / 2, f);
            g = gcd(f, t - Poly::constant(F, 1));
        }
        if (!g.is_constant() && g.deg() < f.deg()) {
            split = g;
            break;
        }
    }
    equal_degree(split, d, rng, out);
    equal_degree(f / split, d, rng, out);
}

} // namespace

Factorization poly_factor(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw zero_argument();
    const FieldCtx& F = *f.F;
    Factorization out;
    out.unit = f.lc();
    if (f.is_constant()) return out;
    Rng rng(seed ^ 0xc0ffee1234567ULL);
    std::vector<std::pair<Poly, int>> sqf;
    squarefree_decompose(monic(f), 1, sqf);
    for (const auto& [part, mult] : sqf) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<Poly> irr;
            equal_degree(prod, d, rng, irr);
            for (auto& g : irr) out.factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

bool poly_is_irreducible(const Poly& f) {
    const FieldCtx& F = *f.F;
    if (f.deg() < 1) return false;
    if (f.deg() == 1) return true;
    const std::uint32_t n = static_cast<std::uint32_t>(f.deg());
    Poly x = Poly::x(F);
    // x^(q^n) = x mod f, and gcd(x^(q^(n/l)) - x, f) = 1 for primes l | n
    Poly h = x % f;
    std::vector<Poly> frob(n + 1, Poly(F)); // frob[d] = x^(q^d) mod f, filled as needed
    frob[0] = h;
    for (std::uint32_t d = 1; d <= n; ++d) frob[d] = pow_mod(frob[d - 1], F.q(), f);
    if (frob[n] != h) return false;
    for (std::uint32_t l = 2; l <= n; ++l) {
        if (n % l) continue;
        bool lprime = true;
        for (std::uint32_t d = 2; d * d <= l; ++d)
            if (l % d == 0) lprime = false;
        if (!lprime) continue;
        if (!gcd(frob[n / l] - x, f).is_constant()) return false;
    }
    return true;
}

Poly factorization_product(const FieldCtx& F, const Factorization& fac) {
    Poly r = Poly::constant(F, fac.unit);
    for (const auto& [g, e] : fac.factors)
        for (int i = 0; i < e; ++i) r = r * g;
    return r;
}

Poly poly_crt(const std::vector<std::pair<Poly, Poly>>& pairs) {
    if (pairs.empty()) throw error("poly_crt: empty input");
    const FieldCtx& F = *pairs[0].first.F;
    Poly r = pairs[0].first % pairs[0].second;
    Poly m = pairs[0].second;
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        const Poly& ri = pairs[i].first;
        const Poly& mi = pairs[i].second;
        auto x = xgcd(m, mi);
        if (x.g.deg() != 0) throw non_coprime_moduli();
        // r_new = r + m * (u * (ri - r)) mod m*mi, with u*m = 1 mod mi
        Poly u = x.u; // u*m + v*mi = 1
        Poly delta = (u * (ri - r)) % mi;
        r = r + m * delta;
        m = m * mi;
        r = r % m;
    }
    return r;
}

Poly residue_root(const Poly& pi, const Poly& t, std::uint32_t k, int sign) {
    const FieldCtx& F = *pi.F;
    Poly c = t % pi;
    if (sign < 0) c = -c;
    if (!gcd(c, pi).is_constant()) throw error("residue_root: gcd(t, pi) != 1");
    if (k == 1) return c;
    const std::uint32_t N = static_cast<std::uint32_t>(pi.deg());
    if (k == F.p()) {
        // Frobenius on F_{q^N} is x -> x^p; invert by iterating it n*N - 1 times
        Poly m = c;
        for (std::uint32_t i = 0; i + 1 < F.n() * N; ++i) m = pow_mod(m, F.p(), pi);
        return m;
    }
    // general prime k in the cyclic group of order q^N - 1
    std::uint64_t Q = 1;
    for (std::uint32_t i = 0; i < N; ++i) Q *= F.q();
    std::uint64_t order = Q - 1;
    auto inv_mod_u64 = [](std::uint64_t a, std::uint64_t m) {
        std::int64_t r0 = static_cast<std::int64_t>(a % m), r1 = static_cast<std::int64_t>(m);
        std::int64_t x0 = 1, x1 = 0;
        while (r1) {
            std::int64_t qd = r0 / r1;
            std::int64_t tmp = r0 - qd * r1;
            r0 = r1;
            r1 = tmp;
            tmp = x0 - qd * x1;
            x0 = x1;
            x1 = tmp;
        }
        if (x0 < 0) x0 += static_cast<std::int64_t>(m);
        return static_cast<std::uint64_t>(x0);
    };
    if (order % k != 0) {
        // k invertible mod the group order: unique root
        return pow_mod(c, inv_mod_u64(k, order), pi);
    }
    if (pow_mod(c, order / k, pi) != (Poly::constant(F, 1) % pi)) throw no_root();
    // Adleman-Manders-Miller for prime k: write order = k^s * u with k \nmid u
    std::uint64_t u = order, s = 0;
    while (u % k == 0) {
        u /= k;
        ++s;
    }
    // find a k-th non-residue in canonical order
    Poly g(F);
    for (std::uint64_t idx = 1;; ++idx) {
        // enumerate nonzero residues deterministically: idx encodes coefficients
        Poly cand(F);
        std::uint64_t x = idx;
        std::size_t pos = 0;
        while (x) {
            Fq digit = static_cast<Fq>(x % F.q());
            if (digit) {
                if (cand.c.size() <= pos) cand.c.resize(pos + 1, 0);
                cand.c[pos] = digit;
            }
            x /= F.q();
            ++pos;
        }
        cand.trim();
        if (cand.is_zero() || cand.deg() >= pi.deg()) continue;
        if (pow_mod(cand, order / k, pi) != (Poly::constant(F, 1) % pi)) {
            g = cand;
            break;
        }
        if (idx > Q * 4) throw error("residue_root: no non-residue found");
    }
    std::uint64_t kinv_u = u == 1 ? 0 : inv_mod_u64(k, u);
    Poly h = pow_mod(g, u, pi); // generator of the k-Sylow subgroup
    Poly root = pow_mod(c, kinv_u, pi);
    Poly err = pow_mod(root, k, pi) * inv_mod(c, pi) % pi; // element of k-Sylow
    // brute-force the small Sylow subgroup (size k^s, tiny here)
    std::uint64_t sylow = 1;
    for (std::uint64_t i = 0; i < s; ++i) sylow *= k;
    Poly fix = Poly::constant(F, 1) % pi;
    Poly hp = h;
    for (std::uint64_t e2 = 0; e2 < sylow; ++e2) {
        if ((pow_mod(fix, k, pi) * err) % pi == (Poly::constant(F, 1) % pi)) {
            return (root * fix) % pi;
        }
        fix = (fix * h) % pi;
    }
    throw no_root();
}

std::vector<Poly> monic_divisors(const FieldCtx& F, const Factorization& fac, std::size_t limit) {
    std::vector<Poly> out{Poly::constant(F, 1)};
    for (const auto& [g, e] : fac.factors) {
        std::vector<Poly> next;
        next.reserve(out.size() * (e + 1));
        Poly pw = Poly::constant(F, 1);
        for (int i = 0; i <= e; ++i) {
            for (const auto& d : out) next.push_back(d * pw);
            if (i < e) pw = pw * g;
            if (next.size() > limit) throw error("monic_divisors: too many divisors");
        }
        out = std::move(next);
    }
    return out;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    const FieldCtx& F = *this->F;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        std::string cs = F.to_string(c[i]);
        bool composite = cs.find('+') != std::string::npos;
        if (i == 0) {
            s += composite ? "(" + cs + ")" : cs;
        } else {
            if (c[i] != 1) s += (composite ? "(" + cs + ")" : cs) + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace cubicff
