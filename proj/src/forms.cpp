#include "cubicff/forms.hpp"

#include <algorithm>

namespace cubicff {

bool GeneratorMap::is_identity() const {
    return w1.is_zero() && u0.is_zero() && !w0.is_zero() && u1 == w0;
}

std::string GeneratorMap::to_string() const {
    const FieldCtx& F = u1.ctx();
    auto term = [&](const RatFn& c, bool with_y) -> std::string {
        if (c.is_zero()) return "";
        std::string s = c.to_string();
        bool par = s.find('+') != std::string::npos || s.find('/') != std::string::npos;
        if (!with_y) return s;
        if (c == RatFn::constant(F, 1)) return "y";
        return (par ? "(" + s + ")" : s) + "*y";
    };
    auto lin = [&](const RatFn& cy, const RatFn& cc) {
        std::string a = term(cy, true), b = term(cc, false);
        if (a.empty() && b.empty()) return std::string("0");
        if (a.empty()) return b;
        if (b.empty()) return a;
        return a + "+" + b;
    };
    std::string numl = lin(u1, u0);
    if (w1.is_zero() && w0 == RatFn::constant(F, 1)) return numl;
    return "(" + numl + ")/(" + lin(w1, w0) + ")";
}

GeneratorMap compose(const GeneratorMap& m2, const GeneratorMap& m1) {
    // 2x2 matrix product
    return {m2.u1 * m1.u1 + m2.u0 * m1.w1, m2.u1 * m1.u0 + m2.u0 * m1.w0,
            m2.w1 * m1.u1 + m2.w0 * m1.w1, m2.w1 * m1.u0 + m2.w0 * m1.w0};
}

bool cubic_has_root(const RatFn& e, const RatFn& f, const RatFn& g, std::uint64_t seed) {
    const FieldCtx& F = e.ctx();
    // clear denominators: Z^3 + (eD) Z^2 + (fD^2) Z + gD^3 with Z = D*Y
    Poly D = Poly::constant(F, 1);
    for (const RatFn* c : {&e, &f, &g}) {
        Poly gg = gcd(D, c->den);
        D = D * (c->den / gg);
    }
    RatFn Dr{RatFn(D)};
    Poly E = (e * Dr).num, Fc = (f * Dr * Dr).num, G = (g * Dr * Dr * Dr).num;
    if ((e * Dr).den.deg() != 0 || (f * Dr * Dr).den.deg() != 0 || (g * Dr * Dr * Dr).den.deg() != 0)
        throw internal_inconsistency("cubic_has_root: denominator clearing failed");
    if (G.is_zero()) return true; // root 0
    // any rational root of the monic cleared cubic is a polynomial dividing G
    Factorization fg = poly_factor(G, seed);
    std::vector<Poly> divs = monic_divisors(F, fg, 100000);
    for (const Poly& d : divs) {
        for (Fq u = 1; u < F.q(); ++u) {
            Poly n = u * d;
            // n^3 + E n^2 + F n + G == 0 ?
            Poly v = ((n + E) * n + Fc) * n + G;
            if (v.is_zero()) return true;
        }
    }
    return false;
}

CubicInput::CubicInput(std::shared_ptr<const FieldCtx> c, RatFn e_, RatFn f_, RatFn g_, std::uint64_t seed)
    : ctx(std::move(c)), e(std::move(e_)), f(std::move(f_)), g(std::move(g_)) {
    if (ctx->p() == 3 && e.is_zero() && f.is_zero()) throw inseparable_input();
    if (cubic_has_root(e, f, g, seed)) throw reducible_input();
}

void CanonicalForm::minimal_poly(RatFn& c2, RatFn& c1, RatFn& c0) const {
    const FieldCtx& F = a.ctx();
    c2 = RatFn(F);
    switch (kind) {
        case FormKind::PureCubic:
            c1 = RatFn(F);
            c0 = -a;
            break;
        case FormKind::Impure:
            c1 = RatFn::from_int(F, -3);
            c0 = -a;
            break;
        case FormKind::CharThree:
            c1 = a;
            c0 = a * a;
            break;
    }
}

std::string CanonicalForm::kind_name() const {
    switch (kind) {
        case FormKind::PureCubic: return "pure";
        case FormKind::Impure: return "impure";
        case FormKind::CharThree: return "char3";
    }
    return "?";
}

std::pair<CanonicalForm, GeneratorMap> classify(const CubicInput& in, std::uint64_t seed) {
    const FieldCtx& F = *in.ctx;
    const RatFn &e = in.e, &f = in.f, &g = in.g;
    auto cnst = [&](std::int64_t k) { return RatFn::from_int(F, k); };
    if (F.p() != 3) {
        RatFn A = cnst(3) * g * e - f * f;
        if (A.is_zero()) {
            // X^3 - a with a = 27 g^3 / (f^3 - 27 g^2), z = 3gy/(fy+3g)
            RatFn den = f * f * f - cnst(27) * g * g;
            if (den.is_zero()) throw internal_inconsistency("classify: reducible slipped through (pure branch)");
            RatFn a = cnst(27) * g * g * g / den;
            GeneratorMap map{cnst(3) * g, RatFn(F), f, cnst(3) * g};
            return {CanonicalForm{FormKind::PureCubic, a}, map};
        }
        RatFn t = cnst(27) * g * g - cnst(9) * e * f * g + cnst(2) * f * f * f;
        if (t.is_zero()) throw internal_inconsistency("classify: reducible slipped through (impure branch)");
        RatFn a = cnst(-2) - t * t / (A * A * A);
        // z = (-(6efg - f^3 - 27g^2) y + 3g(3eg - f^2)) / ((3eg - f^2)(fy + 3g))
        RatFn topy = -(cnst(6) * e * f * g - f * f * f - cnst(27) * g * g);
        GeneratorMap map{topy, cnst(3) * g * A, A * f, A * cnst(3) * g};
        return {CanonicalForm{FormKind::Impure, a}, map};
    }
    // p = 3
    if (e.is_zero()) {
        // f != 0 (inseparable rejected upstream): a = g^2/f^3, z = (g/f^2) y
        RatFn a = g * g / (f * f * f);
        GeneratorMap map = GeneratorMap::affine(g / (f * f), RatFn(F));
        return {CanonicalForm{FormKind::CharThree, a}, map};
    }
    if (f.is_zero()) {
        // a = g/e^3, z = g/(e^2 y)
        RatFn a = g / (e * e * e);
        GeneratorMap map{RatFn(F), g, e * e, RatFn(F)};
        return {CanonicalForm{FormKind::CharThree, a}, map};
    }
    RatFn N = -(f * f * e * e) + g * e * e * e + f * f * f;
    if (N.is_zero()) throw internal_inconsistency("classify: reducible slipped through (p=3 branch)");
    RatFn a = N / pow(e, 6);
    // z = N / (e^4 (e y - f))
    GeneratorMap map{RatFn(F), N, pow(e, 5), -(pow(e, 4) * f)};
    return {CanonicalForm{FormKind::CharThree, a}, map};
}

std::optional<std::pair<RatFn, GeneratorMap>> purity_test(const CanonicalForm& form, std::uint64_t seed) {
    if (form.kind != FormKind::Impure) throw error("purity_test: impure form expected");
    const FieldCtx& F = form.a.ctx();
    const RatFn& a = form.a;
    auto root = solve_quadratic(a, RatFn::constant(F, 1), seed);
    if (!root) return std::nullopt;
    RatFn c = *root;
    // U = (cY - 1)/(Y - c), U^3 = c
    GeneratorMap map{c, RatFn::from_int(F, -1), RatFn::constant(F, 1), -c};
    return std::make_pair(c, map);
}

bool is_galois(const CanonicalForm& form, std::uint64_t seed) {
    const FieldCtx& F = form.a.ctx();
    switch (form.kind) {
        case FormKind::PureCubic:
            return F.q() % 3 == 1;
        case FormKind::Impure: {
            const RatFn& a = form.a;
            if (F.p() == 2) {
                // quadratic resolvent X^2 + aX + (1 + a^2)
                return solve_quadratic(a, RatFn::constant(F, 1) + a * a, seed).has_value();
            }
            RatFn delta = RatFn::from_int(F, -27) * (a * a - RatFn::from_int(F, 4));
            return sqrt_ratfn(delta, seed).has_value();
        }
        case FormKind::CharThree:
            return sqrt_ratfn(-form.a, seed).has_value();
    }
    return false;
}

bool is_constant_pure(const CanonicalForm& form, std::uint64_t seed) {
    if (form.kind != FormKind::PureCubic) throw error("is_constant_pure: pure form expected");
    return cube_unit_decompose(form.a, seed).has_value();
}

bool generator_map_sound(const CubicInput& in, const CanonicalForm& form, const GeneratorMap& map) {
    const FieldCtx& F = *in.ctx;
    // P(z) with z = (u1 y + u0)/(w1 y + w0): clear (w1 y + w0)^3 and reduce
    // modulo the input cubic; the result must vanish identically.
    RatFn c2, c1, c0;
    form.minimal_poly(c2, c1, c0);
    // work with y-polynomials as coefficient vectors over K
    using YP = std::vector<RatFn>;
    auto zero = [&]() { return YP{}; };
    auto mul = [&](const YP& A, const YP& B) {
        if (A.empty() || B.empty()) return zero();
        YP R(A.size() + B.size() - 1, RatFn(F));
        for (std::size_t i = 0; i < A.size(); ++i)
            for (std::size_t j = 0; j < B.size(); ++j) R[i + j] = R[i + j] + A[i] * B[j];
        return R;
    };
    auto add = [&](YP A, const YP& B) {
        if (A.size() < B.size()) A.resize(B.size(), RatFn(F));
        for (std::size_t i = 0; i < B.size(); ++i) A[i] = A[i] + B[i];
        return A;
    };
    auto smul = [&](const RatFn& s, YP A) {
        for (auto& x : A) x = s * x;
        return A;
    };
    YP U{map.u0, map.u1}, W{map.w0, map.w1};
    YP U2 = mul(U, U), U3 = mul(U2, U);
    YP W2 = mul(W, W), W3 = mul(W2, W);
    // N = U^3 + c2 U^2 W + c1 U W^2 + c0 W^3
    YP N = add(add(add(U3, smul(c2, mul(U2, W))), smul(c1, mul(U, W2))), smul(c0, W3));
    // reduce mod y^3 + e y^2 + f y + g
    auto reduce = [&](YP A) {
        while (A.size() > 3) {
            RatFn top = A.back();
            std::size_t d = A.size() - 1;
            A.pop_back();
            if (top.is_zero()) continue;
            // y^d = y^{d-3} * (-(e y^2 + f y + g))
            A[d - 1] = A[d - 1] - top * in.e;
            A[d - 2] = A[d - 2] - top * in.f;
            A[d - 3] = A[d - 3] - top * in.g;
        }
        return A;
    };
    N = reduce(std::move(N));
    for (const auto& coef : N)
        if (!coef.is_zero()) return false;
    return true;
}

} // namespace cubicff
