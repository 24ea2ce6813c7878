#ifndef CUBICFF_RAMGENUS_HPP
#define CUBICFF_RAMGENUS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cubicff/forms.hpp"
#include "cubicff/reduction.hpp"

namespace cubicff {

/// (place, ramification index, different exponent)
struct RamTriple {
    Place place;
    int e;
    int d;
};

bool operator==(const RamTriple& a, const RamTriple& b);

/// Ramification data and genus of the cubic extension. For a constant field
/// extension the triple list is empty and the genus is not reported.
struct GenusReport {
    std::vector<RamTriple> triples; // sorted by place, infinity last
    std::optional<int> genus;
    bool galois = false;
    bool constant = false;
};

/// g = g_K-term + (1/2) * sum d * deg; only g_K = 0 is accepted upstream.
/// Throws if the different degree is odd (an upstream bug by construction).
int genus_from_triples(const std::vector<RamTriple>& triples);

GenusReport ram_pure(const RatFn& a, std::uint64_t seed);
GenusReport ram_impure(const RatFn& a, std::uint64_t seed);
GenusReport ram_char3(const RatFn& a, std::uint64_t seed);
/// Same as ram_char3 but reuses an existing reduction.
GenusReport ram_char3_from(const GasReduced& red, const RatFn& a, std::uint64_t seed);

GenusReport ram_for(const CanonicalForm& form, std::uint64_t seed);

/// Batch evaluation with deterministic output order;
/// workers <= 1 runs sequentially.
std::vector<GenusReport> ram_batch(const std::vector<CanonicalForm>& forms, std::uint64_t seed,
                                   std::size_t workers);

} // namespace cubicff

#endif
