#include "taut/parser.hpp"

#include <cctype>

namespace taut {

ParseError::ParseError(const std::string& msg, std::size_t line_, std::size_t column_)
    : error(msg + " at " + std::to_string(line_) + ":" + std::to_string(column_)),
      line(line_),
      column(column_) {}

namespace {

struct Lexer {
    explicit Lexer(const std::string& text) : s(text) { skip_ws(); }

    const std::string& s;
    std::size_t pos = 0, line = 1, col = 1;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    void advance() {
        if (s[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) advance();
    }
    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    bool accept(char c) {
        if (!eof() && s[pos] == c) {
            advance();
            skip_ws();
            return true;
        }
        return false;
    }

    std::string number() {
        std::size_t start = pos;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s[pos]))) advance();
        std::string n = s.substr(start, pos - start);
        skip_ws();
        return n;
    }
    std::string identifier() {
        std::size_t start = pos;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            advance();
        std::string id = s.substr(start, pos - start);
        skip_ws();
        return id;
    }
};

class OperatorParser {
  public:
    OperatorParser(const std::string& text, const WeylContextPtr& ctx, bool allow_partials)
        : lex_(text), ctx_(ctx), allow_partials_(allow_partials) {}

    WeylElement parse() {
        WeylElement result = parse_expr();
        if (!lex_.eof()) lex_.fail("unexpected trailing input");
        return result;
    }

  private:
    WeylElement parse_expr() {
        WeylElement acc = WeylElement::zero(ctx_);
        bool negative = lex_.accept('-');
        if (!negative) lex_.accept('+');
        acc += parse_term(negative);
        while (!lex_.eof()) {
            if (lex_.accept('+'))
                acc += parse_term(false);
            else if (lex_.accept('-'))
                acc += parse_term(true);
            else
                break;
        }
        return acc;
    }

    WeylElement parse_term(bool negative) {
        WeylElement acc = parse_atom();
        while (lex_.accept('*')) acc = weyl_mul(acc, parse_atom());
        return negative ? -acc : acc;
    }

    WeylElement parse_atom() {
        if (lex_.eof()) lex_.fail("unexpected end of input");
        char c = lex_.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_factor();
        lex_.fail(std::string("unexpected character '") + c + "'");
    }

    WeylElement parse_rational() {
        std::string n = lex_.number();
        Rational value = Rational::parse(n);
        if (lex_.accept('/')) {
            if (lex_.eof() || !std::isdigit(static_cast<unsigned char>(lex_.peek())))
                lex_.fail("expected denominator");
            Rational den = Rational::parse(lex_.number());
            if (den.is_zero()) lex_.fail("zero denominator");
            value /= den;
        }
        return WeylElement::constant(ctx_, value);
    }

    WeylElement parse_factor() {
        std::size_t at_line = lex_.line, at_col = lex_.col;
        std::string id = lex_.identifier();
        int power = 1;
        if (lex_.accept('^')) {
            if (lex_.eof() || !std::isdigit(static_cast<unsigned char>(lex_.peek())))
                lex_.fail("expected exponent");
            power = static_cast<int>(Rational::parse(lex_.number()).to_long());
        }
        std::size_t v = ctx_->vars()->index_of(id);
        if (v != Context::npos) return WeylElement::x_var(ctx_, v, power);
        if (id.size() > 1 && id[0] == 'd') {
            std::size_t d = ctx_->partial_index(id.substr(1));
            if (d != Context::npos) {
                if (!allow_partials_)
                    throw ParseError("partial '" + id + "' not allowed in a polynomial", at_line,
                                     at_col);
                return WeylElement::d_var(ctx_, d, power);
            }
        }
        throw ParseError("unknown variable '" + id + "'", at_line, at_col);
    }

    Lexer lex_;
    WeylContextPtr ctx_;
    bool allow_partials_;
};

}  // namespace

WeylElement parse_operator(const std::string& text, const WeylContextPtr& ctx) {
    return OperatorParser(text, ctx, true).parse();
}

Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx) {
    WeylContextPtr wctx = make_weyl_context(ctx->names());
    WeylElement op = OperatorParser(text, wctx, false).parse();
    Polynomial out(ctx);
    for (const auto& [key, c] : op.terms())
        out.add_term(WeylElement::x_part(key), c.as_constant());
    return out;
}

}  // namespace taut
