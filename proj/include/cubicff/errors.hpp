#ifndef CUBICFF_ERRORS_HPP
#define CUBICFF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubicff {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct reducible_input : error {
    reducible_input() : error("ReducibleInput: cubic is reducible over F_q(x)") {}
};

struct inseparable_input : error {
    inseparable_input() : error("InseparableInput: cubic is purely inseparable") {}
};

struct constant_extension : error {
    constant_extension() : error("ConstantExtension: extension is a constant field extension") {}
};

struct not_monic_cubic : error {
    not_monic_cubic() : error("NotMonicCubic: expected a monic cubic in y") {}
};

struct zero_argument : error {
    zero_argument() : error("ZeroArgument") {}
};

struct negative_valuation : error {
    negative_valuation() : error("NegativeValuation: residue undefined at a pole") {}
};

struct non_coprime_moduli : error {
    non_coprime_moduli() : error("NonCoprimeModuli") {}
};

struct no_root : error {
    no_root() : error("NoRoot") {}
};

struct wrong_constant_field : error {
    wrong_constant_field() : error("WrongConstantField") {}
};

struct not_galois : error {
    not_galois() : error("NotGalois") {}
};

// Raised when an internal cross-check (e.g. the basis verifier) fails on a
// pipeline-produced value; maps to exit code 1 in the CLI.
struct internal_inconsistency : error {
    using error::error;
};

} // namespace cubicff

#endif
