#include "cubicff/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>
#include <atomic>

#include <json.hpp>

namespace cubicff {

FieldReport run_pipeline(const CubicInput& in, std::uint64_t seed) {
    FieldReport rep;
    rep.ctx = in.ctx;
    auto [form, map] = classify(in, seed);
    rep.form = form;
    rep.map_to_canonical = map;
    rep.map_to_basis = map;
    switch (form.kind) {
        case FormKind::PureCubic: {
            rep.ram = ram_pure(form.a, seed);
            if (rep.ram.constant != is_constant_pure(form, seed))
                throw internal_inconsistency("pipeline: constant flag disagrees with a = u*b^3 test");
            if (!rep.ram.constant) rep.basis = basis_pure(form.a, seed);
            break;
        }
        case FormKind::Impure: {
            rep.ram = ram_impure(form.a, seed);
            if (!rep.ram.constant) rep.basis = basis_impure(form.a, seed);
            break;
        }
        case FormKind::CharThree: {
            GasReduced red = gas_reduce(form.a, seed);
            rep.trace = red.history;
            rep.ram = ram_char3_from(red, form.a, seed);
            if (!rep.ram.constant) rep.basis = basis_char3_from(red, seed);
            break;
        }
    }
    if (rep.basis) {
        rep.map_to_basis = compose(rep.basis->gen_map, rep.map_to_canonical);
        BasisCheck check = verify_basis(*rep.basis, rep.ram, seed);
        if (!check.ok) {
            std::string msg = "pipeline: basis verification failed:";
            for (const auto& m : check.mismatches) msg += " " + m + ";";
            throw internal_inconsistency(msg);
        }
    }
    return rep;
}

namespace {

nlohmann::ordered_json report_json_object(const FieldReport& rep, const std::string& sub, bool trace) {
    const FieldCtx& F = *rep.ctx;
    nlohmann::ordered_json j;
    j["q"] = F.q();
    j["p"] = F.p();
    j["n"] = F.n();
    j["form"] = rep.form.kind_name();
    j["a"] = rep.form.a.to_string();
    j["generator_map"] = rep.basis ? rep.map_to_basis.to_string() : rep.map_to_canonical.to_string();
    j["galois"] = rep.ram.galois;
    j["constant"] = rep.ram.constant;
    bool want_places = sub == "genus" || sub == "all";
    bool want_basis = sub == "basis" || sub == "all";
    if (want_places) {
        nlohmann::ordered_json places = nlohmann::ordered_json::array();
        for (const auto& t : rep.ram.triples) {
            nlohmann::ordered_json pj;
            pj["place"] = t.place.to_string();
            pj["degree"] = t.place.degree();
            pj["e"] = t.e;
            pj["d"] = t.d;
            places.push_back(pj);
        }
        j["places"] = places;
        if (rep.ram.genus)
            j["genus"] = *rep.ram.genus;
        else
            j["genus"] = nullptr;
    }
    if (want_basis) {
        if (rep.basis) {
            std::string gen = rep.basis->transformed ? "z" : "y";
            if (rep.form.kind == FormKind::CharThree) gen = "z";
            nlohmann::ordered_json b = nlohmann::ordered_json::array();
            for (const auto& el : rep.basis->elems) b.push_back(el.to_string(gen));
            j["basis"] = b;
            j["basis_provenance"] = rep.basis->provenance;
        } else {
            j["basis"] = nullptr;
        }
    }
    if (trace) {
        nlohmann::ordered_json tr = nlohmann::ordered_json::array();
        for (const auto& st : rep.trace) tr.push_back(st.describe());
        j["trace"] = tr;
    }
    return j;
}

} // namespace

std::string report_to_json(const FieldReport& rep, const std::string& sub, bool trace) {
    return report_json_object(rep, sub, trace).dump();
}

std::string report_to_text(const FieldReport& rep, const std::string& sub, bool trace) {
    const FieldCtx& F = *rep.ctx;
    std::ostringstream os;
    os << "field: q=" << F.q() << " (p=" << F.p() << ", n=" << F.n() << ")\n";
    os << "form: " << rep.form.kind_name() << "  a = " << rep.form.a.to_string() << "\n";
    os << "generator: z = "
       << (rep.basis ? rep.map_to_basis.to_string() : rep.map_to_canonical.to_string()) << "\n";
    os << "galois: " << (rep.ram.galois ? "yes" : "no") << "  constant: "
       << (rep.ram.constant ? "yes" : "no") << "\n";
    if (sub == "genus" || sub == "all") {
        os << "ramified places:";
        if (rep.ram.triples.empty()) os << " none";
        for (const auto& t : rep.ram.triples)
            os << " (" << t.place.to_string() << ", e=" << t.e << ", d=" << t.d << ")";
        os << "\n";
        os << "genus: " << (rep.ram.genus ? std::to_string(*rep.ram.genus) : std::string("n/a (constant)"))
           << "\n";
    }
    if (sub == "basis" || sub == "all") {
        if (rep.basis) {
            std::string gen = rep.basis->transformed || rep.form.kind == FormKind::CharThree ? "z" : "y";
            os << "integral basis:";
            for (const auto& el : rep.basis->elems) os << " " << el.to_string(gen);
            os << "  [" << rep.basis->provenance << "]\n";
        } else {
            os << "integral basis: n/a (constant)\n";
        }
    }
    if (trace && !rep.trace.empty()) {
        os << "reduction trace:\n";
        for (const auto& st : rep.trace) os << "  " << st.describe() << "\n";
    }
    return os.str();
}

namespace {

std::shared_ptr<const FieldCtx> make_ctx(const Request& req) {
    if (req.modulus_text) {
        auto base = FieldCtx::make(req.p, 1);
        std::string text = *req.modulus_text; // written in t or x interchangeably
        for (auto& ch : text)
            if (ch == 't') ch = 'x';
        RatFn m = parse_ratfn(text, *base);
        if (!m.den.is_one()) throw error("modulus must be a polynomial");
        std::vector<std::uint32_t> coeffs;
        for (std::size_t i = 0; i < m.num.c.size(); ++i) coeffs.push_back(m.num.c[i]);
        return FieldCtx::make(req.p, req.n, coeffs);
    }
    return FieldCtx::make(req.p, req.n);
}

void decompose_q(std::uint64_t q, std::uint32_t& p, std::uint32_t& n) {
    for (std::uint32_t cand = 2; cand <= q; ++cand) {
        bool prime = cand >= 2;
        for (std::uint32_t d = 2; d * static_cast<std::uint64_t>(d) <= cand; ++d)
            if (cand % d == 0) prime = false;
        if (!prime || q % cand) continue;
        std::uint64_t x = q;
        std::uint32_t e = 0;
        while (x % cand == 0) {
            x /= cand;
            ++e;
        }
        if (x != 1) throw error("q is not a prime power");
        p = cand;
        n = e;
        return;
    }
    throw error("q is not a prime power");
}

int error_exit_code(const std::exception& e) {
    if (dynamic_cast<const internal_inconsistency*>(&e)) return 1;
    return 2;
}

std::string error_line(const std::exception& e, bool json) {
    if (!json) return std::string("error: ") + e.what() + "\n";
    nlohmann::ordered_json j;
    j["error"] = e.what();
    return j.dump() + "\n";
}

struct BatchLine {
    std::uint64_t q;
    std::string cubic;
};

std::vector<BatchLine> parse_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open batch file: " + path);
    std::vector<BatchLine> out;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        std::size_t eq = line.find("q=");
        std::size_t sc = line.find(';');
        if (eq == std::string::npos || sc == std::string::npos || sc < eq)
            throw error("batch line must look like 'q=<p^n>; <cubic>': " + line);
        std::string qs = line.substr(eq + 2, sc - eq - 2);
        std::uint64_t q = 0;
        std::size_t car = qs.find('^');
        if (car != std::string::npos) {
            std::uint64_t base = std::stoull(qs.substr(0, car));
            std::uint64_t ex = std::stoull(qs.substr(car + 1));
            q = 1;
            for (std::uint64_t i = 0; i < ex; ++i) q *= base;
        } else {
            q = std::stoull(qs);
        }
        out.push_back({q, line.substr(sc + 1)});
    }
    return out;
}

std::string run_verify_suites(const Request& req, int& exit_code);

} // namespace

RunResult run(const Request& req) {
    RunResult res;
    if (req.subcommand == "verify") {
        res.output = run_verify_suites(req, res.exit_code);
        return res;
    }
    auto render_one = [&](std::shared_ptr<const FieldCtx> ctx, const std::string& text,
                          int& code) -> std::string {
        try {
            CubicInput in = parse_cubic(text, ctx, req.seed);
            FieldReport rep = run_pipeline(in, req.seed);
            if (rep.ram.constant && !req.allow_constant) throw constant_extension();
            return req.json ? report_to_json(rep, req.subcommand, req.trace) + "\n"
                            : report_to_text(rep, req.subcommand, req.trace);
        } catch (const std::exception& e) {
            code = std::max(code, error_exit_code(e));
            return error_line(e, req.json);
        }
    };
    if (req.batch_file) {
        std::vector<BatchLine> lines;
        try {
            lines = parse_batch(*req.batch_file);
        } catch (const std::exception& e) {
            res.exit_code = 2;
            res.output = error_line(e, req.json);
            return res;
        }
        std::vector<std::string> outs(lines.size());
        std::vector<int> codes(lines.size(), 0);
        auto work_line = [&](std::size_t i) {
            try {
                std::uint32_t p = 0, n = 1;
                decompose_q(lines[i].q, p, n);
                auto ctx = FieldCtx::make(p, n);
                outs[i] = render_one(ctx, lines[i].cubic, codes[i]);
            } catch (const std::exception& e) {
                codes[i] = error_exit_code(e);
                outs[i] = error_line(e, req.json);
            }
        };
        if (req.jobs > 1 && lines.size() > 1) {
            std::atomic<std::size_t> next{0};
            auto worker = [&]() {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= lines.size()) return;
                    work_line(i);
                }
            };
            std::vector<std::thread> pool;
            for (std::size_t t = 0; t < std::min(req.jobs, lines.size()); ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        } else {
            for (std::size_t i = 0; i < lines.size(); ++i) work_line(i);
        }
        for (std::size_t i = 0; i < lines.size(); ++i) {
            res.output += outs[i];
            res.exit_code = std::max(res.exit_code, codes[i]);
        }
        return res;
    }
    try {
        auto ctx = make_ctx(req);
        res.output = render_one(ctx, req.cubic_text, res.exit_code);
    } catch (const std::exception& e) {
        res.exit_code = error_exit_code(e);
        res.output = error_line(e, req.json);
    }
    return res;
}

namespace {

std::string run_verify_suites(const Request& req, int& exit_code) {
    std::ostringstream os;
    bool ok = true;
    std::vector<std::uint64_t> fields = req.verify_fields;
    if (fields.empty()) fields = {2, 3, 4, 5, 7, 8, 9, 13};
    const std::size_t trials = req.trials;
    // oracle agreement
    for (std::uint64_t q : fields) {
        auto ctx = FieldCtx::make(q);
        Rng rng(req.seed ^ (q * 0x9e37u));
        if (ctx->q() % 3 == 1 && ctx->p() != 3) {
            std::size_t bad = 0;
            for (std::size_t i = 0; i < trials; ++i) {
                RatFn a = random_pure_instance(*ctx, rng, true);
                GenusReport rep = ram_pure(a, req.seed);
                if (!rep.genus || *rep.genus != kummer_genus_oracle(a, req.seed)) ++bad;
            }
            os << "kummer-oracle q=" << q << ": " << (bad ? "FAIL" : "ok") << " (" << trials
               << " trials)\n";
            ok = ok && bad == 0;
        }
        if (ctx->p() == 3) {
            std::size_t bad = 0, done = 0;
            for (std::size_t i = 0; i < trials; ++i) {
                RatFn a = random_char3_galois_instance(*ctx, rng);
                GenusReport rep = ram_char3(a, req.seed);
                if (rep.constant) continue;
                ++done;
                if (!rep.genus || *rep.genus != as3_genus_oracle(a, req.seed)) ++bad;
            }
            os << "artin-schreier-oracle q=" << q << ": " << (bad ? "FAIL" : "ok") << " (" << done
               << " geometric trials)\n";
            ok = ok && bad == 0;
        }
        // fuzz each applicable form
        std::size_t disc = 0;
        for (std::size_t i = 0; i < std::max<std::size_t>(trials / 10, 5); ++i) {
            if (ctx->p() == 3) {
                RatFn a = random_char3_instance(*ctx, rng);
                disc += generator_fuzz(CanonicalForm{FormKind::CharThree, a}, req.seed, 3).size();
            } else {
                RatFn a = random_pure_instance(*ctx, rng, false);
                disc += generator_fuzz(CanonicalForm{FormKind::PureCubic, a}, req.seed, 3).size();
                RatFn b = random_impure_instance(*ctx, rng);
                disc += generator_fuzz(CanonicalForm{FormKind::Impure, b}, req.seed, 3).size();
            }
        }
        os << "generator-fuzz q=" << q << ": " << (disc ? "FAIL" : "ok") << "\n";
        ok = ok && disc == 0;
    }
    os << (ok ? "verify: all suites passed\n" : "verify: FAILURES detected\n");
    exit_code = ok ? 0 : 1;
    return os.str();
}

} // namespace

} // namespace cubicff
