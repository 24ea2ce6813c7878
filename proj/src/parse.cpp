#include <cctype>

#include "cubicff/report.hpp"

namespace cubicff {

namespace {

// polynomial in y with RatFn coefficients, low degree first
using YExpr = std::vector<RatFn>;

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const FieldCtx& F;
    bool allow_y;

    Parser(const std::string& text, const FieldCtx& ctx, bool y) : s(text), F(ctx), allow_y(y) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    YExpr norm(YExpr v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
        return v;
    }
    YExpr from_ratfn(RatFn r) {
        YExpr v;
        if (!r.is_zero()) v.push_back(std::move(r));
        return v;
    }

    YExpr add(const YExpr& a, const YExpr& b, bool sub) {
        YExpr r = a;
        if (r.size() < b.size()) r.resize(b.size(), RatFn(F));
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub ? r[i] - b[i] : r[i] + b[i];
        return norm(std::move(r));
    }
    YExpr mul(const YExpr& a, const YExpr& b) {
        if (a.empty() || b.empty()) return {};
        YExpr r(a.size() + b.size() - 1, RatFn(F));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
        return norm(std::move(r));
    }
    YExpr div(const YExpr& a, const YExpr& b) {
        if (b.empty()) fail("division by zero");
        if (b.size() > 1) fail("division by an expression containing y");
        YExpr r = a;
        for (auto& c : r) c = c / b[0];
        return r;
    }
    YExpr pow_expr(const YExpr& a, std::uint64_t e) {
        YExpr r = from_ratfn(RatFn::constant(F, 1));
        for (std::uint64_t i = 0; i < e; ++i) {
            r = mul(r, a);
            if (r.size() > 64) fail("exponent too large");
        }
        return r;
    }

    std::uint64_t parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            if (v > (1ull << 40)) fail("integer literal too large");
            ++pos;
        }
        return v;
    }

    YExpr primary() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            YExpr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 'x') {
            ++pos;
            return from_ratfn(RatFn::x(F));
        }
        if (c == 'y') {
            if (!allow_y) fail("y is not allowed here");
            ++pos;
            YExpr v(2, RatFn(F));
            v[1] = RatFn::constant(F, 1);
            return v;
        }
        if (c == 't') {
            if (F.n() == 1) fail("t is only defined for extension fields");
            ++pos;
            return from_ratfn(RatFn::constant(F, static_cast<Fq>(F.p())));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = parse_uint();
            return from_ratfn(RatFn::from_int(F, static_cast<std::int64_t>(v % (1ull << 40))));
        }
        fail("unexpected character");
    }

    YExpr factor() {
        skip_ws();
        if (pos < s.size() && s[pos] == '-') {
            ++pos;
            YExpr v = factor();
            for (auto& x : v) x = -x;
            return v;
        }
        YExpr v = primary();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            std::uint64_t e = parse_uint();
            v = pow_expr(v, e);
        }
        return v;
    }

    YExpr term() {
        YExpr v = factor();
        for (;;) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                v = mul(v, factor());
            } else if (pos < s.size() && s[pos] == '/') {
                ++pos;
                v = div(v, factor());
            } else {
                return v;
            }
        }
    }

    YExpr expr() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        YExpr v = term();
        if (neg)
            for (auto& x : v) x = -x;
        for (;;) {
            skip_ws();
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                bool sub = s[pos] == '-';
                ++pos;
                v = add(v, term(), sub);
            } else {
                return v;
            }
        }
    }

    YExpr parse_all() {
        YExpr v = expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return v;
    }
};

} // namespace

RatFn parse_ratfn(const std::string& text, const FieldCtx& ctx) {
    Parser p(text, ctx, false);
    YExpr v = p.parse_all();
    if (v.empty()) return RatFn(ctx);
    return v[0];
}

CubicInput parse_cubic(const std::string& text, std::shared_ptr<const FieldCtx> ctx, std::uint64_t seed) {
    Parser p(text, *ctx, true);
    YExpr v = p.parse_all();
    const FieldCtx& F = *ctx;
    if (v.size() != 4 || v[3] != RatFn::constant(F, 1)) throw not_monic_cubic();
    return CubicInput(std::move(ctx), v[2], v[1], v[0], seed);
}

} // namespace cubicff
