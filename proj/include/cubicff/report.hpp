#ifndef CUBICFF_REPORT_HPP
#define CUBICFF_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "cubicff/intbasis.hpp"
#include "cubicff/verify.hpp"

namespace cubicff {

/// Everything the pipeline derives from one cubic.
struct FieldReport {
    std::shared_ptr<const FieldCtx> ctx;
    CanonicalForm form;
    GeneratorMap map_to_canonical; // canonical generator in terms of the input one
    GeneratorMap map_to_basis;     // basis generator in terms of the input one
    GenusReport ram;
    std::optional<IntegralBasis> basis; // absent for constant extensions
    std::vector<ReductionStep> trace;   // reduction history (char3 / p=2 resolvent)
};

FieldReport run_pipeline(const CubicInput& in, std::uint64_t seed);

/// Parse a cubic in y over F_q(x). Grammar: integer literals, x, y, t (the
/// F_q generator, n > 1 only), + - * / ^ and parentheses; no implicit
/// multiplication. The expression must be a monic cubic in y.
CubicInput parse_cubic(const std::string& text, std::shared_ptr<const FieldCtx> ctx, std::uint64_t seed);

/// Parse a rational function in x (no y), same grammar.
RatFn parse_ratfn(const std::string& text, const FieldCtx& ctx);

struct Request {
    std::string subcommand; // classify | genus | basis | verify | all
    std::uint32_t p = 0;
    std::uint32_t n = 1;
    std::optional<std::string> modulus_text;
    std::string cubic_text;
    std::optional<std::string> batch_file;
    bool json = false;
    bool trace = false;
    bool allow_constant = false;
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
    std::size_t trials = 100;                 // verify subcommand
    std::vector<std::uint64_t> verify_fields; // q values for verify
};

struct RunResult {
    int exit_code = 0;
    std::string output;
};

/// Execute a request; output is the full byte stream the CLI prints.
RunResult run(const Request& req);

/// JSON wire form of a report (single line, stable key order).
std::string report_to_json(const FieldReport& rep, const std::string& subcommand, bool trace);
std::string report_to_text(const FieldReport& rep, const std::string& subcommand, bool trace);

} // namespace cubicff

#endif
