#ifndef CUBICFF_GF_HPP
#define CUBICFF_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubicff/errors.hpp"

namespace cubicff {

/// An element of F_q, stored as its index in the canonical enumeration.
/// For q = p^n with modulus basis 1, t, ..., t^{n-1}, the element
/// c0 + c1 t + ... + c_{n-1} t^{n-1} has index c0 + c1 p + ... + c_{n-1} p^{n-1}.
/// Numeric index order is the canonical element order used for every
/// "choose the least root" step.
using Fq = std::uint32_t;

/// Arithmetic context for F_q = F_{p^n}. Immutable once constructed; all
/// operations are const, so one context may be shared across threads.
class FieldCtx {
  public:
    /// Prime field F_p.
    explicit FieldCtx(std::uint32_t p);
    /// Extension field F_{p^n} with an explicit monic irreducible modulus,
    /// given by its n+1 coefficients over F_p (constant term first).
    FieldCtx(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus);

    /// F_q for q = p^n with the default modulus: the least monic irreducible
    /// of degree n in the canonical order (reproducible across runs).
    static std::shared_ptr<const FieldCtx> make(std::uint64_t q);
    static std::shared_ptr<const FieldCtx> make(std::uint32_t p, std::uint32_t n);
    static std::shared_ptr<const FieldCtx> make(std::uint32_t p, std::uint32_t n,
                                                std::vector<std::uint32_t> modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t n() const { return n_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Fq zero() const { return 0; }
    Fq one() const { return 1; }
    /// Image of an integer under Z -> F_p -> F_q.
    Fq from_int(std::int64_t k) const;

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
    Fq pow(Fq a, std::uint64_t e) const;

    /// Frobenius x -> x^p and its inverse (both bijections of F_q).
    Fq frobenius(Fq a) const { return pow(a, p_); }
    Fq frobenius_inv(Fq a) const;

    /// Coefficient vector over F_p (length n, constant coordinate first).
    std::vector<std::uint32_t> coeffs(Fq a) const;

    std::string to_string(Fq a) const;

  private:
    void init_tables();
    Fq mul_slow(Fq a, Fq b) const;

    std::uint32_t p_ = 0;
    std::uint32_t n_ = 1;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_; // degree n, monic, over F_p; empty when n = 1
    bool tabled_ = false;
    std::vector<Fq> mul_table_;
    std::vector<Fq> add_table_;
    std::vector<Fq> inv_table_;
    std::vector<Fq> neg_table_;
};

/// z with z^m = c, canonical least in the element order, if any exists.
/// For m coprime to q-1 the root is unique.
std::optional<Fq> const_nth_root(const FieldCtx& F, Fq c, std::uint64_t m);

/// z with z^p - z = c, canonical least, if one exists.
std::optional<Fq> solve_const_artin_schreier(const FieldCtx& F, Fq c);

} // namespace cubicff

#endif
