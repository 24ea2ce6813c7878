#ifndef CUBICFF_TEST_HELPERS_HPP
#define CUBICFF_TEST_HELPERS_HPP

#include <memory>
#include <string>

#include "cubicff/report.hpp"

namespace cubicff::test {

inline std::shared_ptr<const FieldCtx> ctx(std::uint64_t q) { return FieldCtx::make(q); }

inline RatFn rf(const FieldCtx& F, const std::string& text) { return parse_ratfn(text, F); }

inline Poly pol(const FieldCtx& F, const std::string& text) {
    RatFn r = parse_ratfn(text, F);
    if (!r.den.is_one()) throw error("test pol: not a polynomial");
    return r.num;
}

inline CubicInput cubic(std::shared_ptr<const FieldCtx> F, const std::string& text,
                        std::uint64_t seed = 1) {
    return parse_cubic(text, std::move(F), seed);
}

} // namespace cubicff::test

#endif
