#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilalg/error.hpp"
#include "nilalg/scalar.hpp"
#include "nilalg/structconst.hpp"

namespace nilalg {

namespace detail {

enum class Tok { Int, Basis, Imag, Param, Keyword, String, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, Newline, End };

struct Token {
    Tok kind;
    std::string text;  // digits for Int and Basis, word for Keyword, contents for String
    std::size_t line;
    std::size_t column;
};

inline std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::Int: return "number '" + t.text + "'";
        case Tok::Basis: return "basis element 'e" + t.text + "'";
        case Tok::Imag: return "'i'";
        case Tok::Param: return "'a'";
        case Tok::Keyword: return "'" + t.text + "'";
        case Tok::String: return "string";
        case Tok::Newline: return "end of line";
        case Tok::End: return "end of input";
        default: return "'" + t.text + "'";
    }
}

inline std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t p = 0;
    auto advance = [&](std::size_t count) {
        p += count;
        col += count;
    };
    while (p < src.size()) {
        const char ch = src[p];
        if (ch == '\n') {
            out.push_back({Tok::Newline, "\n", line, col});
            ++p;
            ++line;
            col = 1;
            continue;
        }
        if (ch == '#') {
            while (p < src.size() && src[p] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t q = p;
            while (q < src.size() && std::isdigit(static_cast<unsigned char>(src[q]))) ++q;
            out.push_back({Tok::Int, std::string(src.substr(p, q - p)), line, col});
            advance(q - p);
            continue;
        }
        if (ch == '"') {
            std::size_t q = p + 1;
            while (q < src.size() && src[q] != '"' && src[q] != '\n') ++q;
            if (q >= src.size() || src[q] != '"') throw ParseError("unterminated string", line, col);
            out.push_back({Tok::String, std::string(src.substr(p + 1, q - p - 1)), line, col});
            advance(q - p + 1);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t q = p;
            while (q < src.size() && (std::isalpha(static_cast<unsigned char>(src[q])) || src[q] == '_')) ++q;
            const std::string word(src.substr(p, q - p));
            if (word == "dim" || word == "param" || word == "name") {
                out.push_back({Tok::Keyword, word, line, col});
                advance(q - p);
                continue;
            }
            if (!out.empty() && out.back().kind == Tok::Keyword && out.back().text == "param" && word != "a")
                throw ParseError("only the single parameter 'a' is supported", line, col);
            // Juxtaposed single-letter symbols: `ie5` is i * e5, `2a` is 2 * a.
            for (std::size_t k = 0; k < word.size(); ++k) {
                const char c = word[k];
                const std::size_t at = col;
                if (c == 'i') {
                    out.push_back({Tok::Imag, "i", line, at});
                    advance(1);
                } else if (c == 'a') {
                    out.push_back({Tok::Param, "a", line, at});
                    advance(1);
                } else if (c == 'e' && k + 1 == word.size() && q < src.size() &&
                           std::isdigit(static_cast<unsigned char>(src[q]))) {
                    std::size_t r = q;
                    while (r < src.size() && std::isdigit(static_cast<unsigned char>(src[r]))) ++r;
                    out.push_back({Tok::Basis, std::string(src.substr(q, r - q)), line, at});
                    advance(1 + (r - q));
                    q = r;
                } else {
                    throw ParseError("unknown symbol '" + word +
                                         "' (only the parameter 'a', the unit 'i' and basis elements eN are allowed)",
                                     line, at);
                }
            }
            p = q;
            continue;
        }
        Tok kind;
        switch (ch) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '=': kind = Tok::Equals; break;
            default: throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
        }
        out.push_back({kind, std::string(1, ch), line, col});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, bool allow_parameter)
        : tokens_(std::move(tokens)), allow_parameter_(allow_parameter) {}

    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[k];
    }
    const Token& take() {
        const Token& t = tokens_[pos_];
        if (pos_ + 1 < tokens_.size()) ++pos_;
        return t;
    }
    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        take();
        return true;
    }
    const Token& expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(std::string("expected ") + what + ", found " + describe(peek()));
        return take();
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, peek().line, peek().column);
    }
    [[noreturn]] void fail_at(const Token& t, const std::string& message) const {
        throw ParseError(message, t.line, t.column);
    }

    void set_allow_parameter(bool allow) { allow_parameter_ = allow; }
    bool used_parameter() const noexcept { return used_parameter_; }

    /// expr := [+|-] product ((+|-) product)*
    Scalar expression() {
        Scalar acc;
        bool negate = false;
        if (accept(Tok::Minus)) negate = true;
        else accept(Tok::Plus);
        acc = product();
        if (negate) acc = -acc;
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = take().kind == Tok::Minus;
            Scalar rhs = product();
            if (minus) acc -= rhs;
            else acc += rhs;
        }
        return acc;
    }

    static bool starts_factor(Tok kind) {
        return kind == Tok::Int || kind == Tok::Imag || kind == Tok::Param || kind == Tok::LParen;
    }

    /// product := power ((* | / | juxtaposition) power)*; stops before a basis element.
    Scalar product() {
        Scalar acc = power();
        for (;;) {
            const Tok k = peek().kind;
            if (k == Tok::Star && peek(1).kind != Tok::Basis) {
                take();
                acc *= power();
            } else if (k == Tok::Slash) {
                const Token& slash = take();
                Scalar divisor = power();
                if (divisor.is_zero()) fail_at(slash, "zero divisor");
                acc /= divisor;
            } else if (starts_factor(k)) {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    Scalar power() {
        Scalar base = primary();
        if (accept(Tok::Caret)) {
            bool negative = accept(Tok::Minus);
            const Token& e = expect(Tok::Int, "integer exponent");
            if (e.text.size() > 6) fail_at(e, "exponent too large");
            const long exponent = std::stol(e.text);
            if (negative && base.is_zero()) fail_at(e, "zero divisor");
            base = base.pow(negative ? -exponent : exponent);
        }
        return base;
    }

    Scalar primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Int: {
                take();
                return Scalar(GaussianRational(Rational(mpz_class(t.text), mpz_class(1))));
            }
            case Tok::Imag: take(); return Scalar::i();
            case Tok::Param:
                if (!allow_parameter_) fail("parameter 'a' is not allowed here");
                used_parameter_ = true;
                take();
                return Scalar::parameter();
            case Tok::LParen: {
                take();
                Scalar inner = expression();
                expect(Tok::RParen, "')'");
                return inner;
            }
            default: fail("expected a scalar, found " + describe(t));
        }
    }

    std::size_t basis_index(std::size_t dim) {
        const Token& t = expect(Tok::Basis, "basis element eN");
        std::size_t k = 0;
        if (t.text.size() > 9 || (k = std::stoul(t.text)) < 1 || k > dim)
            fail_at(t, "basis index e" + t.text + " out of range 1.." + std::to_string(dim));
        return k - 1;
    }

    /// term := [product ['*']] eN
    std::pair<Scalar, std::size_t> term(std::size_t dim) {
        Scalar coeff(1);
        if (peek().kind != Tok::Basis) {
            coeff = product();
            accept(Tok::Star);
        }
        return {coeff, basis_index(dim)};
    }

    /// sum := [+|-] term ((+|-) term)*
    Vector sum(std::size_t dim) {
        Vector v(dim);
        bool minus = accept(Tok::Minus);
        if (!minus) accept(Tok::Plus);
        for (;;) {
            auto [coeff, k] = term(dim);
            if (minus) v[k] -= coeff;
            else v[k] += coeff;
            if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
                minus = take().kind == Tok::Minus;
            } else {
                return v;
            }
        }
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    bool allow_parameter_;
    bool used_parameter_ = false;
};

}  // namespace detail

/// Parses a scalar such as `1-i`, `2a`, `a^2+a`, `-1/2`.
inline Scalar parse_scalar(std::string_view text, bool allow_parameter = true) {
    detail::Parser p(detail::tokenize(text), allow_parameter);
    while (p.accept(detail::Tok::Newline)) {}
    Scalar s = p.expression();
    while (p.accept(detail::Tok::Newline)) {}
    if (p.peek().kind != detail::Tok::End) p.fail("unexpected " + detail::describe(p.peek()));
    return s;
}

/// Parses a parameter-free scalar into Q(i).
inline GaussianRational parse_constant(std::string_view text) {
    return parse_scalar(text, false).constant_value();
}

/// Parses the algebra file format:
///
///     dim 5 param a name "A31"
///     e4*e4 = -a e2 + (1+a) e5
///
/// Unlisted products are zero; a product listed twice is an error.
inline StructureConstants parse_algebra(std::string_view text) {
    using detail::Tok;
    detail::Parser p(detail::tokenize(text), false);
    while (p.accept(Tok::Newline)) {}

    const auto& dim_kw = p.peek();
    if (dim_kw.kind != Tok::Keyword || dim_kw.text != "dim") p.fail("expected header 'dim N'");
    p.take();
    const auto& dim_tok = p.expect(Tok::Int, "dimension");
    if (dim_tok.text.size() > 4 || std::stoul(dim_tok.text) == 0)
        p.fail_at(dim_tok, "dimension must be between 1 and 9999");
    const std::size_t n = std::stoul(dim_tok.text);

    bool declared_parameter = false;
    std::string name;
    if (p.peek().kind == Tok::Keyword && p.peek().text == "param") {
        p.take();
        if (p.peek().kind != Tok::Param)
            p.fail("only the single parameter 'a' is supported");
        p.take();
        declared_parameter = true;
    }
    if (p.peek().kind == Tok::Keyword && p.peek().text == "name") {
        p.take();
        const auto& t = p.peek();
        if (t.kind == Tok::String) {
            name = t.text;
            p.take();
        } else {
            p.fail("expected quoted name");
        }
    }
    if (p.peek().kind != Tok::Newline && p.peek().kind != Tok::End)
        p.fail("unexpected " + detail::describe(p.peek()) + " in header");
    p.set_allow_parameter(declared_parameter);

    StructureConstants a(n, name);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (;;) {
        while (p.accept(Tok::Newline)) {}
        if (p.peek().kind == Tok::End) break;
        const auto start = p.peek();
        if (start.kind == Tok::Keyword) p.fail("header keyword '" + start.text + "' outside the header line");
        const std::size_t i = p.basis_index(n);
        p.expect(Tok::Star, "'*'");
        const std::size_t j = p.basis_index(n);
        p.expect(Tok::Equals, "'='");
        if (auto it = seen.find({i, j}); it != seen.end()) {
            p.fail_at(start, "duplicate definition of e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) +
                                 " (first defined on line " + std::to_string(it->second) + ")");
        }
        seen.emplace(std::make_pair(i, j), start.line);
        Vector rhs = p.sum(n);
        if (p.peek().kind != Tok::Newline && p.peek().kind != Tok::End)
            p.fail("unexpected " + detail::describe(p.peek()));
        for (std::size_t k = 0; k < n; ++k) a.set(i, j, k, std::move(rhs[k]));
    }
    return a;
}

namespace detail {

/// Coefficient as it should appear in front of a basis element or variable.
inline std::string coefficient_prefix(const Scalar& c, bool& negative) {
    negative = false;
    if (c.is_constant() && c.constant_value().is_real()) {
        const Rational r = c.constant_value().re();
        negative = r.sign() < 0;
        const Rational m = r.abs();
        return m.is_one() ? "" : m.to_string() + " ";
    }
    if (c.is_constant() && c.constant_value().re().is_zero()) {
        const Rational r = c.constant_value().im();
        negative = r.sign() < 0;
        const Rational m = r.abs();
        return m.is_one() ? "i " : m.to_string() + "*i ";
    }
    if (c.is_constant()) return c.constant_value().to_string() + " ";  // already parenthesized
    return "(" + c.to_string() + ") ";
}

}  // namespace detail

/// Linear combination `sum_k v_k <names[k]>` in the file syntax.
inline std::string format_combination(const Vector& v, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        bool negative = false;
        std::string prefix = detail::coefficient_prefix(v[k], negative);
        if (out.empty()) out = (negative ? "-" : "") + prefix + names[k];
        else out += (negative ? " - " : " + ") + prefix + names[k];
    }
    return out.empty() ? "0" : out;
}

/// Text form accepted back by parse_algebra.
inline std::string print_algebra(const StructureConstants& a, const std::vector<std::string>& comments = {}) {
    std::string out;
    for (const auto& c : comments) out += "# " + c + "\n";
    out += "dim " + std::to_string(a.dim());
    if (a.is_parametric()) out += " param a";
    if (!a.name().empty()) out += " name \"" + a.name() + "\"";
    out += "\n";
    std::vector<std::string> names;
    for (std::size_t k = 0; k < a.dim(); ++k) names.push_back("e" + std::to_string(k + 1));
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (a.product_is_zero(i, j)) continue;
            out += "e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) + " = " +
                   format_combination(a.product(i, j), names) + "\n";
        }
    }
    return out;
}

}  // namespace nilalg
