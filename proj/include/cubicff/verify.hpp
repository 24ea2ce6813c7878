#ifndef CUBICFF_VERIFY_HPP
#define CUBICFF_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "cubicff/intbasis.hpp"

namespace cubicff {

struct Discrepancy {
    std::string input;
    std::string pipeline_value;
    std::string oracle_value;
    std::string oracle;
};

/// Classical Kummer-extension genus for X^3 - a over F_q(x), q = 1 mod 3,
/// geometric: 2g - 2 = -6 + sum (3 - gcd(3, v_pl(a))) * deg(pl).
/// Independent of the ramification pipeline.
int kummer_genus_oracle(const RatFn& a, std::uint64_t seed);

/// Classical Artin-Schreier genus for the Galois p = 3 form (requires -a a
/// square): 2g - 2 = -6 + 2 * sum (m_pl + 1) * deg(pl) over the reduced pole
/// orders m_pl of the Artin-Schreier parameter.
int as3_genus_oracle(const RatFn& a, std::uint64_t seed);

/// Random alternative parameters presenting the same extension; recomputes
/// the report and records disagreements. expect_equal = false is the
/// negative-control mode: the given pair should disagree.
std::vector<Discrepancy> generator_fuzz(const CanonicalForm& form, std::uint64_t seed,
                                        std::size_t trials);
std::optional<Discrepancy> compare_reports(const CanonicalForm& f1, const CanonicalForm& f2,
                                           std::uint64_t seed, const std::string& label);

enum class SpotcheckResult { Valid, Skipped, Invalid };

/// At an unramified place of unit index, the factorization pattern of the
/// canonical minimal polynomial mod the place must be a squarefree pattern
/// {3}, {1,2} or {1,1,1}.
SpotcheckResult kummer_split_spotcheck(const CanonicalForm& form, const Place& pl, std::uint64_t seed);

/// Deterministic random instances for tests and fuzzing.
RatFn random_ratfn(const FieldCtx& F, int max_num_deg, int max_den_deg, Rng& rng);
/// X^3 - a irreducible (constant-field instances included unless geometric_only).
RatFn random_pure_instance(const FieldCtx& F, Rng& rng, bool geometric_only);
RatFn random_impure_instance(const FieldCtx& F, Rng& rng);
RatFn random_char3_instance(const FieldCtx& F, Rng& rng);
/// Galois char-3 instance a = -b^2.
RatFn random_char3_galois_instance(const FieldCtx& F, Rng& rng);

} // namespace cubicff

#endif
