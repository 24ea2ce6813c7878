#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "cubicff/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"cubicff - ramification, genus and integral bases of cubic extensions of F_q(x)"};
    app.require_subcommand(1);

    cubicff::Request req;
    std::uint64_t q_value = 0;
    std::string modulus;
    std::string seed_env;
    if (const char* env = std::getenv("CUBICFF_SEED")) seed_env = env;
    req.seed = seed_env.empty() ? 0 : std::strtoull(seed_env.c_str(), nullptr, 10);

    auto add_common = [&](CLI::App* sub, bool needs_cubic) {
        sub->add_option("--q", q_value, "field size q = p^n");
        sub->add_option("--p", req.p, "field characteristic");
        sub->add_option("--n", req.n, "extension degree over F_p");
        sub->add_option("--modulus", modulus, "defining modulus for F_{p^n} (polynomial in t)");
        sub->add_flag("--json", req.json, "emit JSON");
        sub->add_option("--seed", req.seed, "deterministic seed (default: $CUBICFF_SEED or 0)");
        sub->add_flag("--trace", req.trace, "include the reduction history");
        sub->add_flag("--allow-constant", req.allow_constant,
                      "report constant extensions instead of rejecting them");
        sub->add_option("--jobs", req.jobs, "worker threads for batch mode");
        if (needs_cubic) {
            sub->add_option("cubic", req.cubic_text, "cubic in y, e.g. \"y^3 - 3*y - x\"");
            sub->add_option("--batch", req.batch_file,
                            "file with one cubic per line: q=<p^n>; <cubic>");
        }
    };

    for (const char* name : {"classify", "genus", "basis", "all"}) {
        auto* sub = app.add_subcommand(name, std::string("compute ") + name);
        add_common(sub, true);
        sub->callback([&, name]() { req.subcommand = name; });
    }
    auto* ver = app.add_subcommand("verify", "run the oracle/fuzz verification suites");
    ver->add_option("--trials", req.trials, "trials per suite");
    ver->add_option("--fields", req.verify_fields, "q values to exercise");
    ver->add_option("--seed", req.seed, "deterministic seed");
    ver->callback([&]() { req.subcommand = "verify"; });

    CLI11_PARSE(app, argc, argv);

    if (!modulus.empty()) req.modulus_text = modulus;
    if (req.subcommand != "verify" && !req.batch_file) {
        if (q_value) {
            // decompose q into p^n
            std::uint64_t x = q_value;
            for (std::uint32_t p = 2; p <= x; ++p) {
                bool prime = true;
                for (std::uint32_t d = 2; d * static_cast<std::uint64_t>(d) <= p; ++d)
                    if (p % d == 0) prime = false;
                if (!prime || x % p) continue;
                std::uint32_t n = 0;
                while (x % p == 0) {
                    x /= p;
                    ++n;
                }
                if (x != 1) {
                    std::cerr << "error: q must be a prime power\n";
                    return 2;
                }
                req.p = p;
                req.n = n;
                break;
            }
        }
        if (req.p == 0) {
            std::cerr << "error: specify the field with --q or --p/--n\n";
            return 2;
        }
        if (req.cubic_text.empty()) {
            std::cerr << "error: no cubic given\n";
            return 2;
        }
    }

    cubicff::RunResult res = cubicff::run(req);
    std::cout << res.output;
    return res.exit_code;
}
