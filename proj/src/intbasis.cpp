#include "cubicff/intbasis.hpp"

#include <algorithm>

namespace cubicff {

namespace {

Poly poly_pow(const Poly& p, int e) {
    Poly r = Poly::constant(*p.F, 1);
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

// floor division v = 3*lambda + r with r in {0,1,2}
void split3(int v, int& lambda, int& r) {
    lambda = v >= 0 ? v / 3 : -((-v + 2) / 3);
    r = v - 3 * lambda;
}

} // namespace

std::string BasisElement::to_string(const std::string& gen) const {
    const FieldCtx& F = c0.ctx();
    auto coef = [&](const RatFn& c, int degy) -> std::string {
        std::string s;
        std::string ys = degy == 0 ? "" : (degy == 1 ? gen : gen + "^2");
        if (degy == 0) return c.to_string();
        if (c == RatFn::constant(F, 1)) return ys;
        std::string cs = c.to_string();
        bool par = cs.find('+') != std::string::npos || cs.find('/') != std::string::npos;
        return (par ? "(" + cs + ")" : cs) + "*" + ys;
    };
    std::string num;
    for (int d = 2; d >= 0; --d) {
        const RatFn& c = d == 2 ? c2 : (d == 1 ? c1 : c0);
        if (c.is_zero()) continue;
        if (!num.empty()) num += "+";
        num += coef(c, d);
    }
    if (num.empty()) num = "0";
    if (den.is_one()) return num;
    bool par = num.find('+') != std::string::npos || num.find('*') != std::string::npos;
    return (par ? "(" + num + ")" : num) + "/" +
           (den.deg() > 0 ? "(" + den.to_string() + ")" : den.to_string());
}

IntegralBasis basis_pure(const RatFn& a, std::uint64_t seed) {
    const FieldCtx& F = a.ctx();
    // theta_j = y^j / prod pl^{s_j}, s_j = floor(j*r/3) + j*lambda for
    // v = 3 lambda + r at each finite place of a
    Poly den1 = Poly::constant(F, 1), den2 = Poly::constant(F, 1);
    RatFn num1 = RatFn::constant(F, 1), num2 = RatFn::constant(F, 1);
    auto handle = [&](const Poly& pi, int v) {
        int lambda, r;
        split3(v, lambda, r);
        int s1 = (1 * r) / 3 + 1 * lambda;
        int s2 = (2 * r) / 3 + 2 * lambda;
        if (s1 > 0) den1 = den1 * poly_pow(pi, s1);
        if (s1 < 0) num1 = num1 * RatFn(poly_pow(pi, -s1));
        if (s2 > 0) den2 = den2 * poly_pow(pi, s2);
        if (s2 < 0) num2 = num2 * RatFn(poly_pow(pi, -s2));
    };
    for (const auto& [pi, e] : poly_factor(a.num, seed).factors) handle(pi, e);
    for (const auto& [pi, e] : poly_factor(a.den, seed).factors) handle(pi, -e);
    IntegralBasis out;
    out.elems[0] = BasisElement::one(F);
    out.elems[1] = {RatFn(F), num1, RatFn(F), den1};
    out.elems[2] = {num2, RatFn(F), RatFn(F), den2};
    out.gen_form = CanonicalForm{FormKind::PureCubic, a};
    out.gen_map = GeneratorMap::identity(F);
    out.provenance = "pure";
    return out;
}

IntegralBasis basis_impure(const RatFn& a, std::uint64_t seed) {
    const FieldCtx& F = a.ctx();
    CanonicalForm form{FormKind::Impure, a};
    if (auto purity = purity_test(form, seed)) {
        // the extension is purely cubic: route through the pure construction
        // in the Kummer generator U with U^3 = c
        IntegralBasis out = basis_pure(purity->first, seed);
        out.gen_map = purity->second;
        out.transformed = true;
        out.provenance = "impure:pure-route";
        return out;
    }
    // a = alpha / (gamma^3 beta1 beta2^2), beta cube-free part split
    Poly alpha = a.num;
    Poly gamma = Poly::constant(F, 1), beta1 = Poly::constant(F, 1), beta2 = Poly::constant(F, 1);
    for (const auto& [pi, e] : poly_factor(a.den, seed).factors) {
        gamma = gamma * poly_pow(pi, e / 3);
        if (e % 3 == 1) beta1 = beta1 * pi;
        if (e % 3 == 2) beta2 = beta2 * pi;
    }
    Poly G = gamma * beta1 * beta2; // omega = G*y is integral
    Poly T = Poly::zero(F);
    Poly I = Poly::constant(F, 1);
    if (F.p() != 2) {
        // eta1 * eta2^2 = 4 gamma^6 beta^2 - alpha^2, eta1 squarefree
        Poly beta = beta1 * beta2 * beta2;
        Poly big = Poly::from_int(F, 4) * poly_pow(gamma, 6) * beta * beta - alpha * alpha;
        Poly eta2 = Poly::constant(F, 1);
        for (const auto& [pi, e] : poly_factor(big, seed).factors) eta2 = eta2 * poly_pow(pi, e / 2);
        I = beta1 * eta2;
        std::vector<std::pair<Poly, Poly>> congs;
        if (eta2.deg() > 0) {
            Poly mod = eta2 * eta2;
            Poly rhs = (-(alpha)*inv_mod(Poly::from_int(F, 2) * gamma * gamma * beta2 % mod, mod)) % mod;
            congs.emplace_back(rhs, mod);
        }
        if (beta1.deg() > 0) congs.emplace_back(Poly::zero(F), beta1 * beta1);
        if (!congs.empty()) T = poly_crt(congs);
    } else {
        // wild resolvent: pole orders of the reduced parameter of 1 + 1/a at
        // the zeros of a control the local indices.
        // I = beta1 * prod alpha_i^{s_i - (t_i+1)/2 at ramified alpha_i, s_i otherwise}
        I = beta1;
        RatFn c0 = RatFn::constant(F, 1) + RatFn::constant(F, 1) / a;
        ASReduced red = as_reduce(c0, 2, seed);
        for (const auto& [pi, s] : poly_factor(alpha, seed).factors) {
            int t = 0;
            if (!red.b.is_zero()) {
                int v = multiplicity(pi, red.b.den) - multiplicity(pi, red.b.num);
                if (v > 0) t = v; // odd by the reduction contract
            }
            int ex = t ? s - (t + 1) / 2 : s;
            if (ex < 0) throw internal_inconsistency("basis_impure: negative index exponent");
            I = I * poly_pow(pi, ex);
        }
    }
    RatFn Gr{RatFn(G)};
    Poly V = (T * T - Poly::from_int(F, 3) * G * G) % I;
    IntegralBasis out;
    out.elems[0] = BasisElement::one(F);
    out.elems[1] = {RatFn(F), Gr, RatFn(F), Poly::constant(F, 1)};
    out.elems[2] = {Gr * Gr, RatFn(T) * Gr, RatFn(V), I};
    out.gen_form = form;
    out.gen_map = GeneratorMap::identity(F);
    out.provenance = F.p() == 2 ? "impure:wild" : "impure:crt";
    return out;
}

IntegralBasis basis_char3_from(const GasReduced& red, std::uint64_t seed) {
    const RatFn& b = red.b;
    const FieldCtx& F = b.ctx();
    // numerator split xi1 * xi2^2 with xi1 squarefree; P_k from the reduced
    // pole orders: P_k = prod p^{1 + floor(2 k alpha / 3)}
    Poly xi1 = Poly::constant(F, 1), xi2 = Poly::constant(F, 1);
    for (const auto& [pi, e] : poly_factor(b.num, seed).factors) {
        if (e % 2) xi1 = xi1 * pi;
        xi2 = xi2 * poly_pow(pi, e / 2);
    }
    Poly P1 = Poly::constant(F, 1), P2 = Poly::constant(F, 1);
    for (const auto& [pi, alpha] : poly_factor(b.den, seed).factors) {
        P1 = P1 * poly_pow(pi, 1 + (2 * alpha) / 3);
        P2 = P2 * poly_pow(pi, 1 + (4 * alpha) / 3);
    }
    IntegralBasis out;
    out.elems[0] = BasisElement::one(F);
    out.elems[1] = {RatFn(F), RatFn(P1), RatFn(F), xi2};
    out.elems[2] = {RatFn(P2), RatFn(F), RatFn(F), xi1 * xi2 * xi2};
    out.gen_form = CanonicalForm{FormKind::CharThree, b};
    out.gen_map = GeneratorMap::affine(red.gen_scale, red.gen_shift);
    out.transformed = !out.gen_map.is_identity();
    out.provenance = "char3";
    return out;
}

IntegralBasis basis_char3(const RatFn& a, std::uint64_t seed) {
    GasReduced red = gas_reduce(a, seed);
    return basis_char3_from(red, seed);
}

IntegralBasis basis_for(const CanonicalForm& form, std::uint64_t seed) {
    switch (form.kind) {
        case FormKind::PureCubic: return basis_pure(form.a, seed);
        case FormKind::Impure: return basis_impure(form.a, seed);
        case FormKind::CharThree: return basis_char3(form.a, seed);
    }
    throw error("basis_for: bad form");
}

RatFn cubic_disc(const RatFn& c2, const RatFn& c1, const RatFn& c0) {
    const FieldCtx& F = c2.ctx();
    auto k = [&](std::int64_t v) { return RatFn::from_int(F, v); };
    return k(18) * c2 * c1 * c0 - k(4) * c2 * c2 * c2 * c0 + c2 * c2 * c1 * c1 - k(4) * c1 * c1 * c1 -
           k(27) * c0 * c0;
}

void element_char_poly(const BasisElement& el, const CanonicalForm& gen_form, RatFn& t2, RatFn& t1,
                       RatFn& t0) {
    const FieldCtx& F = el.c0.ctx();
    RatFn m2, m1, m0;
    gen_form.minimal_poly(m2, m1, m0);
    // multiplication matrix of N = c2 y^2 + c1 y + c0 on basis {1, y, y^2}
    auto mul_y = [&](std::array<RatFn, 3> v) {
        // y * (v0 + v1 y + v2 y^2), with y^3 = -(m2 y^2 + m1 y + m0)
        std::array<RatFn, 3> r{-(v[2] * m0), v[0] - v[2] * m1, v[1] - v[2] * m2};
        return r;
    };
    std::array<RatFn, 3> col0{el.c0, el.c1, el.c2};
    std::array<RatFn, 3> col1 = mul_y(col0);
    std::array<RatFn, 3> col2 = mul_y(col1);
    // columns are N*1, N*y, N*y^2
    auto& A = col0;
    auto& B = col1;
    auto& C = col2;
    RatFn tr = A[0] + B[1] + C[2];
    RatFn minors = B[1] * C[2] - C[1] * B[2] + A[0] * C[2] - C[0] * A[2] + A[0] * B[1] - B[0] * A[1];
    RatFn det = A[0] * (B[1] * C[2] - C[1] * B[2]) - B[0] * (A[1] * C[2] - C[1] * A[2]) +
                C[0] * (A[1] * B[2] - B[1] * A[2]);
    RatFn D{RatFn(el.den)};
    t2 = -(tr / D);
    t1 = minors / (D * D);
    t0 = -(det / (D * D * D));
}

BasisCheck verify_basis(const IntegralBasis& basis, const GenusReport& report, std::uint64_t seed) {
    const FieldCtx& F = basis.elems[0].c0.ctx();
    BasisCheck out;
    if (!(basis.elems[0].c2.is_zero() && basis.elems[0].c1.is_zero() &&
          basis.elems[0].c0 == RatFn::constant(F, 1) && basis.elems[0].den.is_one())) {
        out.ok = false;
        out.mismatches.push_back("first element is not 1");
    }
    for (int i = 0; i < 3; ++i) {
        RatFn t2, t1, t0;
        element_char_poly(basis.elems[i], basis.gen_form, t2, t1, t0);
        if (!t2.den.is_one() || !t1.den.is_one() || !t0.den.is_one()) {
            out.ok = false;
            out.mismatches.push_back("element " + std::to_string(i) + " is not integral");
        }
    }
    RatFn m2, m1, m0;
    basis.gen_form.minimal_poly(m2, m1, m0);
    RatFn poly_disc = cubic_disc(m2, m1, m0);
    // det of the coefficient matrix over {1, y, y^2}
    std::array<std::array<RatFn, 3>, 3> M;
    for (int i = 0; i < 3; ++i) {
        RatFn D{RatFn(basis.elems[i].den)};
        M[i] = {basis.elems[i].c0 / D, basis.elems[i].c1 / D, basis.elems[i].c2 / D};
    }
    RatFn det = M[0][0] * (M[1][1] * M[2][2] - M[2][1] * M[1][2]) -
                M[1][0] * (M[0][1] * M[2][2] - M[2][1] * M[0][2]) +
                M[2][0] * (M[0][1] * M[1][2] - M[1][1] * M[0][2]);
    if (det.is_zero()) {
        out.ok = false;
        out.mismatches.push_back("basis is singular");
        return out;
    }
    RatFn disc = det * det * poly_disc;
    // compare valuations with the triple sums at every relevant finite place
    std::vector<Poly> places;
    for (const auto& [pi, e] : poly_factor(disc.num, seed).factors) places.push_back(pi);
    for (const auto& [pi, e] : poly_factor(disc.den, seed).factors) places.push_back(pi);
    for (const auto& t : report.triples)
        if (!t.place.infinite) places.push_back(t.place.pi);
    std::sort(places.begin(), places.end(), poly_less);
    places.erase(std::unique(places.begin(), places.end(),
                             [](const Poly& x, const Poly& y) { return x == y; }),
                 places.end());
    for (const auto& pi : places) {
        int v = valuation(disc, Place::finite(pi));
        int want = 0;
        for (const auto& t : report.triples)
            if (!t.place.infinite && t.place.pi == pi) want += t.d;
        if (v != want) {
            out.ok = false;
            out.mismatches.push_back("v_{" + pi.to_string() + "}(disc) = " + std::to_string(v) +
                                     ", triples predict " + std::to_string(want));
        }
    }
    return out;
}

} // namespace cubicff
