#include "cubicff/gf.hpp"

#include <algorithm>
#include <cassert>

namespace cubicff {

namespace {

bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Arithmetic on F_p coefficient vectors (dense, constant term first).
using Fp_vec = std::vector<std::uint32_t>;

void trim(Fp_vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

Fp_vec mod_fp(Fp_vec r, const Fp_vec& mod, std::uint32_t p) {
    const std::size_t m = mod.size() - 1;
    for (std::size_t i = r.size(); i-- > m;) {
        std::uint32_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < m; ++j) {
            std::uint64_t sub = (std::uint64_t(c) * mod[j]) % p;
            r[i - m + j] = static_cast<std::uint32_t>((r[i - m + j] + p - sub) % p);
        }
    }
    if (r.size() > m) r.resize(m);
    trim(r);
    return r;
}

Fp_vec gcd_fp(Fp_vec a, Fp_vec b, std::uint32_t p) {
    auto inv_p = [p](std::uint32_t x) {
        std::uint32_t r = 1;
        for (std::uint32_t e = p - 2; e; e >>= 1) {
            if (e & 1) r = static_cast<std::uint32_t>((std::uint64_t(r) * x) % p);
            x = static_cast<std::uint32_t>((std::uint64_t(x) * x) % p);
        }
        return r;
    };
    while (!b.empty()) {
        // a mod b via monic-scaled b
        std::uint32_t s = inv_p(b.back());
        Fp_vec bm = b;
        for (auto& c : bm) c = static_cast<std::uint32_t>((std::uint64_t(c) * s) % p);
        a = mod_fp(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

Fp_vec mulmod_fp(const Fp_vec& a, const Fp_vec& b, const Fp_vec& mod, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Fp_vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    // reduce by the monic modulus
    const std::size_t m = mod.size() - 1;
    for (std::size_t i = r.size(); i-- > m;) {
        std::uint32_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < m; ++j) {
            std::uint64_t sub = (std::uint64_t(c) * mod[j]) % p;
            r[i - m + j] = static_cast<std::uint32_t>((r[i - m + j] + p - sub) % p);
        }
    }
    r.resize(m);
    trim(r);
    return r;
}

} // namespace

FieldCtx::FieldCtx(std::uint32_t p) : p_(p), n_(1), q_(p) {
    if (!is_prime_u32(p)) throw error("FieldCtx: p must be prime");
    init_tables();
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
    if (!is_prime_u32(p)) throw error("FieldCtx: p must be prime");
    if (n == 0) throw error("FieldCtx: n must be positive");
    q_ = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        q_ *= p;
        if (q_ > (1u << 24)) throw error("FieldCtx: q too large");
    }
    if (n == 1) {
        modulus_.clear();
    } else {
        if (modulus_.size() != n + 1 || modulus_[n] != 1)
            throw error("FieldCtx: modulus must be monic of degree n");
        for (auto& c : modulus_) c %= p;
        modulus_[n] = 1;
    }
    if (n > 1) {
        // Rabin irreducibility test for the modulus over F_p
        auto frob_pow = [&](std::uint32_t d) {
            Fp_vec x{0, 1};
            for (std::uint32_t i = 0; i < d; ++i) {
                Fp_vec r = x;
                for (std::uint32_t e = 1; e < p; ++e) r = mulmod_fp(r, x, modulus_, p);
                x = std::move(r);
            }
            return x; // t^(p^d) mod modulus
        };
        Fp_vec t{0, 1};
        if (frob_pow(n) != t) throw error("FieldCtx: modulus is not irreducible");
        for (std::uint32_t l = 2; l <= n; ++l) {
            if (n % l) continue;
            bool lprime = true;
            for (std::uint32_t d = 2; d * d <= l; ++d)
                if (l % d == 0) lprime = false;
            if (!lprime) continue;
            Fp_vec x = frob_pow(n / l);
            // gcd(x - t, modulus) must be 1
            Fp_vec diff = x;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = (diff[1] + p - 1) % p;
            trim(diff);
            Fp_vec g = gcd_fp(diff, modulus_, p);
            if (g.size() != 1) throw error("FieldCtx: modulus is not irreducible");
        }
    }
    init_tables();
}

void FieldCtx::init_tables() {
    tabled_ = q_ <= 512;
    if (!tabled_) return;
    const std::size_t q = static_cast<std::size_t>(q_);
    add_table_.resize(q * q);
    mul_table_.resize(q * q);
    inv_table_.assign(q, 0);
    neg_table_.resize(q);
    // addition is digitwise mod p; multiplication via coefficient vectors
    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = a; b < q; ++b) {
            std::size_t x = a, y = b, s = 0, mul = 1;
            while (x || y) {
                s += ((x % p_) + (y % p_)) % p_ * mul;
                x /= p_;
                y /= p_;
                mul *= p_;
            }
            add_table_[a * q + b] = add_table_[b * q + a] = static_cast<Fq>(s);
        }
    }
    for (std::size_t a = 0; a < q; ++a) {
        std::size_t x = a, s = 0, mul = 1;
        while (x) {
            s += (p_ - (x % p_)) % p_ * mul;
            x /= p_;
            mul *= p_;
        }
        neg_table_[a] = static_cast<Fq>(s);
    }
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = a; b < q; ++b) {
            Fq r = mul_slow(static_cast<Fq>(a), static_cast<Fq>(b));
            mul_table_[a * q + b] = mul_table_[b * q + a] = r;
            if (r == 1) {
                inv_table_[a] = static_cast<Fq>(b);
                inv_table_[b] = static_cast<Fq>(a);
            }
        }
}

Fq FieldCtx::from_int(std::int64_t k) const {
    std::int64_t r = k % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Fq>(r);
}

std::vector<std::uint32_t> FieldCtx::coeffs(Fq a) const {
    std::vector<std::uint32_t> c(n_, 0);
    for (std::uint32_t i = 0; i < n_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Fq FieldCtx::add(Fq a, Fq b) const {
    if (tabled_) return add_table_[std::size_t(a) * q_ + b];
    Fq s = 0;
    std::uint64_t mul = 1;
    while (a || b) {
        s += static_cast<Fq>(((a % p_) + (b % p_)) % p_ * mul);
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return s;
}

Fq FieldCtx::neg(Fq a) const {
    if (tabled_) return neg_table_[a];
    Fq s = 0;
    std::uint64_t mul = 1;
    while (a) {
        s += static_cast<Fq>((p_ - (a % p_)) % p_ * mul);
        a /= p_;
        mul *= p_;
    }
    return s;
}

Fq FieldCtx::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FieldCtx::mul_slow(Fq a, Fq b) const {
    if (n_ == 1) return static_cast<Fq>((std::uint64_t(a) * b) % p_);
    Fp_vec va = coeffs(a), vb = coeffs(b);
    trim(va);
    trim(vb);
    Fp_vec r = mulmod_fp(va, vb, modulus_, p_);
    Fq s = 0;
    std::uint64_t mul = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (i < r.size()) s += static_cast<Fq>(r[i] * mul);
        mul *= p_;
    }
    return s;
}

Fq FieldCtx::mul(Fq a, Fq b) const {
    if (tabled_) return mul_table_[std::size_t(a) * q_ + b];
    return mul_slow(a, b);
}

Fq FieldCtx::pow(Fq a, std::uint64_t e) const {
    Fq r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Fq FieldCtx::inv(Fq a) const {
    if (a == 0) throw error("FieldCtx::inv of zero");
    if (tabled_) return inv_table_[a];
    return pow(a, q_ - 2);
}

Fq FieldCtx::frobenius_inv(Fq a) const {
    // x -> x^p iterated n-1 times inverts Frobenius on F_{p^n}
    Fq r = a;
    for (std::uint32_t i = 0; i + 1 < n_; ++i) r = pow(r, p_);
    return r;
}

std::string FieldCtx::to_string(Fq a) const {
    if (n_ == 1) return std::to_string(a);
    auto c = coeffs(a);
    std::string s;
    for (std::uint32_t i = n_; i-- > 0;) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c[i]);
        } else {
            if (c[i] != 1) s += std::to_string(c[i]) + "*";
            s += (i == 1) ? "t" : ("t^" + std::to_string(i));
        }
    }
    return s.empty() ? "0" : s;
}

std::shared_ptr<const FieldCtx> FieldCtx::make(std::uint32_t p, std::uint32_t n,
                                               std::vector<std::uint32_t> modulus) {
    return std::make_shared<const FieldCtx>(p, n, std::move(modulus));
}

std::shared_ptr<const FieldCtx> FieldCtx::make(std::uint32_t p, std::uint32_t n) {
    if (n == 1) return std::make_shared<const FieldCtx>(p);
    // least monic irreducible of degree n, searched in canonical order of the
    // lower coefficients (c0 + c1 p + ... encoding)
    std::uint64_t bound = 1;
    for (std::uint32_t i = 0; i < n; ++i) bound *= p;
    for (std::uint64_t lo = 0; lo < bound; ++lo) {
        std::vector<std::uint32_t> m(n + 1, 0);
        std::uint64_t x = lo;
        for (std::uint32_t i = 0; i < n; ++i) {
            m[i] = static_cast<std::uint32_t>(x % p);
            x /= p;
        }
        m[n] = 1;
        try {
            return std::make_shared<const FieldCtx>(p, n, m);
        } catch (const error&) {
            continue; // not irreducible
        }
    }
    throw error("FieldCtx::make: no irreducible modulus found");
}

std::shared_ptr<const FieldCtx> FieldCtx::make(std::uint64_t q) {
    for (std::uint32_t p = 2; p <= q; ++p) {
        if (!is_prime_u32(p)) continue;
        if (q % p) continue;
        std::uint64_t x = q;
        std::uint32_t n = 0;
        while (x % p == 0) {
            x /= p;
            ++n;
        }
        if (x != 1) throw error("FieldCtx::make: q is not a prime power");
        return make(p, n);
    }
    throw error("FieldCtx::make: q is not a prime power");
}

std::optional<Fq> const_nth_root(const FieldCtx& F, Fq c, std::uint64_t m) {
    for (Fq z = 0; z < F.q(); ++z)
        if (F.pow(z, m) == c) return z;
    return std::nullopt;
}

std::optional<Fq> solve_const_artin_schreier(const FieldCtx& F, Fq c) {
    for (Fq z = 0; z < F.q(); ++z)
        if (F.sub(F.pow(z, F.p()), z) == c) return z;
    return std::nullopt;
}

} // namespace cubicff
