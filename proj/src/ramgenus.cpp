#include "cubicff/ramgenus.hpp"

#include <algorithm>
#include <thread>

namespace cubicff {

bool operator==(const RamTriple& a, const RamTriple& b) {
    return a.place == b.place && a.e == b.e && a.d == b.d;
}

namespace {

void sort_triples(std::vector<RamTriple>& ts) {
    std::sort(ts.begin(), ts.end(), [](const RamTriple& x, const RamTriple& y) {
        return place_less(x.place, y.place);
    });
}

void finish(GenusReport& rep) {
    sort_triples(rep.triples);
    rep.constant = rep.triples.empty();
    rep.genus = rep.constant ? std::nullopt : std::make_optional(genus_from_triples(rep.triples));
}

// valuations of a at the places of its divisor, finite places only
std::vector<std::pair<Poly, int>> finite_valuations(const RatFn& a, std::uint64_t seed) {
    std::vector<std::pair<Poly, int>> out;
    for (const auto& [pi, e] : poly_factor(a.num, seed).factors) out.emplace_back(pi, e);
    for (const auto& [pi, e] : poly_factor(a.den, seed).factors) out.emplace_back(pi, -e);
    return out;
}

} // namespace

int genus_from_triples(const std::vector<RamTriple>& triples) {
    long sum = 0;
    for (const auto& t : triples) sum += static_cast<long>(t.d) * t.place.degree();
    if (sum % 2) throw internal_inconsistency("genus_from_triples: odd different degree");
    long g = -2 + sum / 2;
    if (g < 0) throw internal_inconsistency("genus_from_triples: negative genus");
    return static_cast<int>(g);
}

GenusReport ram_pure(const RatFn& a, std::uint64_t seed) {
    GenusReport rep;
    rep.galois = a.ctx().q() % 3 == 1;
    for (const auto& [pi, v] : finite_valuations(a, seed))
        if (v % 3) rep.triples.push_back({Place::finite(pi), 3, 2});
    int vinf = -a.degree();
    if (vinf % 3) rep.triples.push_back({Place::at_infinity(), 3, 2});
    finish(rep);
    return rep;
}

GenusReport ram_impure(const RatFn& a, std::uint64_t seed) {
    const FieldCtx& F = a.ctx();
    GenusReport rep;
    rep.galois = is_galois(CanonicalForm{FormKind::Impure, a}, seed);
    // fully ramified: v(a) < 0 with gcd(v,3) = 1, uniformly over all places
    for (const auto& [pi, v] : finite_valuations(a, seed))
        if (v < 0 && v % 3) rep.triples.push_back({Place::finite(pi), 3, 2});
    int vinf = -a.degree();
    if (vinf < 0 && vinf % 3) rep.triples.push_back({Place::at_infinity(), 3, 2});
    if (F.p() != 2) {
        // partially ramified: odd valuation of a^2 - 4 (implies a = +-2 there)
        RatFn disc = a * a - RatFn::from_int(F, 4);
        for (const auto& [pi, v] : finite_valuations(disc, seed))
            if (v > 0 && v % 2) rep.triples.push_back({Place::finite(pi), 2, 1});
        int vd = -disc.degree();
        if (vd > 0 && vd % 2) rep.triples.push_back({Place::at_infinity(), 2, 1});
    } else {
        // p = 2: wild quadratic resolvent; reduce 1 + 1/a and read pole orders
        RatFn c0 = RatFn::constant(F, 1) + RatFn::constant(F, 1) / a;
        if (!c0.is_zero()) {
            ASReduced red = as_reduce(c0, 2, seed);
            if (!red.b.is_zero()) {
                for (const auto& [pi, v] : finite_valuations(red.b, seed))
                    if (v < 0) rep.triples.push_back({Place::finite(pi), 2, -v + 1});
                int vb = -red.b.degree();
                if (vb < 0) rep.triples.push_back({Place::at_infinity(), 2, -vb + 1});
            }
        }
    }
    finish(rep);
    return rep;
}

GenusReport ram_char3_from(const GasReduced& red, const RatFn& a, std::uint64_t seed) {
    GenusReport rep;
    rep.galois = is_galois(CanonicalForm{FormKind::CharThree, a}, seed);
    std::vector<std::pair<Poly, int>> vals = finite_valuations(red.b, seed);
    for (const auto& [pi, v] : vals) {
        if (v < 0) {
            // finite standard form: gcd(v,3)=1, fully ramified, d = -v + 2
            rep.triples.push_back({Place::finite(pi), 3, -v + 2});
        } else if (v % 2) {
            // v(b) = v(a) mod 2 at every place; odd value means e = 2 (tame)
            rep.triples.push_back({Place::finite(pi), 2, 1});
        }
    }
    if (red.inf_val < 0) {
        rep.triples.push_back({Place::at_infinity(), 3, -red.inf_val + 2});
    } else if (red.inf_val % 2) {
        rep.triples.push_back({Place::at_infinity(), 2, 1});
    }
    finish(rep);
    return rep;
}

GenusReport ram_char3(const RatFn& a, std::uint64_t seed) {
    GasReduced red = gas_reduce(a, seed);
    return ram_char3_from(red, a, seed);
}

GenusReport ram_for(const CanonicalForm& form, std::uint64_t seed) {
    switch (form.kind) {
        case FormKind::PureCubic: return ram_pure(form.a, seed);
        case FormKind::Impure: return ram_impure(form.a, seed);
        case FormKind::CharThree: return ram_char3(form.a, seed);
    }
    throw error("ram_for: bad form");
}

std::vector<GenusReport> ram_batch(const std::vector<CanonicalForm>& forms, std::uint64_t seed,
                                   std::size_t workers) {
    std::vector<GenusReport> out(forms.size());
    if (workers <= 1 || forms.size() < 2) {
        for (std::size_t i = 0; i < forms.size(); ++i) out[i] = ram_for(forms[i], seed);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= forms.size()) return;
            out[i] = ram_for(forms[i], seed);
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < std::min(workers, forms.size()); ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return out;
}

} // namespace cubicff
