#include "k0/parser.hpp"

#include <cctype>
#include <vector>

namespace k0 {

namespace {

struct Parser {
    const std::string& s;
    const Context& ctx;
    size_t pos = 0;
    std::vector<std::string> bound;  // quantifier scope stack

    explicit Parser(const std::string& text, const Context& c) : s(text), ctx(c) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos, msg); }

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
    void expect(char c, const std::string& what) {
        if (!eat(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool ident_char(char c) const {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    // Reads an identifier-shaped token without consuming it.
    std::string peek_word() {
        skip_ws();
        size_t p = pos;
        std::string w;
        while (p < s.size() && ident_char(s[p])) w += s[p++];
        return w;
    }
    std::string read_ident(const std::string& what) {
        skip_ws();
        std::string w = peek_word();
        if (w.empty() || std::isdigit(static_cast<unsigned char>(w[0])))
            fail("expected " + what);
        pos += w.size();
        return w;
    }
    long long read_nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected a number");
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1'000'000) fail("number too large");
            ++pos;
        }
        return v;
    }
    long long read_int() {
        skip_ws();
        bool negate = eat('-');
        long long v = read_nat();
        return negate ? -v : v;
    }

    bool in_scope(const std::string& v) const {
        for (const auto& b : bound)
            if (b == v) return true;
        return ctx.iface.index_of(v) >= 0;
    }

    Term parse_term() {
        skip_ws();
        std::string w = peek_word();
        if (w.empty()) fail("expected a term");

        if (w == "f") {
            pos += 1;
            long long k = 1;
            if (eat('^')) k = read_nat();
            expect('(', "after f");
            Term inner = parse_term();
            expect(')', "to close f(...)");
            return inner.applied(k);
        }
        if (w[0] == 'c' && w.size() > 1 &&
            std::isdigit(static_cast<unsigned char>(w[1]))) {
            // candidate constant token: all digits after 'c'
            bool all_digits = true;
            for (size_t i = 1; i < w.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(w[i]))) all_digits = false;
            if (all_digits) {
                pos += 1;
                long long i = read_nat();
                if (i < 1 || i > ctx.modulus)
                    fail("constant index out of range: c" + std::to_string(i) +
                         " with N = " + std::to_string(ctx.modulus));
                return Term::constant(static_cast<int>(i));
            }
        }
        if (w == "g" && pos + w.size() < s.size() && s[pos + w.size()] == ':') {
            pos += 2;  // "g:"
            std::string name = read_ident("generic orbit name after g:");
            long long off = 0;
            if (eat('@')) off = read_int();
            return Term::point(OrbitPoint(Orbit::generic(name), off));
        }
        // plain variable
        std::string v = read_ident("a variable");
        if (!in_scope(v)) fail("unbound variable: " + v);
        return Term::var(v);
    }

    FormulaPtr parse_atom_tail(Term lhs) {
        skip_ws();
        if (eat('=')) return Formula::eq(std::move(lhs), parse_term());
        if (pos + 1 < s.size() && s[pos] == '!' && s[pos + 1] == '=') {
            pos += 2;
            return Formula::neq(std::move(lhs), parse_term());
        }
        fail("expected '=' or '!=' in atom");
    }

    FormulaPtr parse_unary() {
        skip_ws();
        if (eat('~')) return Formula::neg(parse_unary());
        if (peek() == '(') {
            ++pos;
            FormulaPtr f = parse_or();
            expect(')', "to close group");
            return f;
        }
        std::string w = peek_word();
        if (w == "true") {
            pos += 4;
            return Formula::truth();
        }
        if (w == "false") {
            pos += 5;
            return Formula::falsity();
        }
        if (w == "E" || w == "A") {
            pos += 1;
            std::string v = read_ident("quantified variable");
            if (in_scope(v)) fail("quantifier shadows variable: " + v);
            expect('.', "after quantified variable");
            bound.push_back(v);
            FormulaPtr body = parse_or();  // maximal right extent
            bound.pop_back();
            return w == "E" ? Formula::exists(v, body) : Formula::forall(v, body);
        }
        return parse_atom_tail(parse_term());
    }

    FormulaPtr parse_and() {
        FormulaPtr f = parse_unary();
        while (peek() == '&') {
            ++pos;
            f = Formula::conj(f, parse_unary());
        }
        return f;
    }

    FormulaPtr parse_or() {
        FormulaPtr f = parse_and();
        while (peek() == '|') {
            ++pos;
            f = Formula::disj(f, parse_and());
        }
        return f;
    }

    FormulaPtr parse_all() {
        if (ctx.modulus < 1) fail("modulus must be >= 1");
        if (ctx.iface.size() < 1) fail("interface must declare at least one variable");
        FormulaPtr f = parse_or();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return f;
    }
};

}  // namespace

FormulaPtr parse(const std::string& text, const Context& ctx) {
    return Parser(text, ctx).parse_all();
}

Term parse_term_text(const std::string& text, const Context& ctx) {
    Parser p(text, ctx);
    Term t = p.parse_term();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return t;
}

}  // namespace k0
