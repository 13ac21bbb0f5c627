#include "qdl/parse.hpp"

#include <cctype>

namespace qdl {

namespace {

constexpr std::size_t kMaxInput = 64 * 1024;
constexpr unsigned kMaxExponent = 64;
constexpr int kMaxDepth = 64;

struct Token {
    enum Kind { Number, Imag, Variable, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            bump();
        current_.line = line_;
        current_.column = column_;
        current_.text.clear();
        if (pos_ >= text_.size()) {
            current_.kind = Token::End;
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': current_.kind = Token::Plus; current_.text = "+"; bump(); return;
            case '-': current_.kind = Token::Minus; current_.text = "-"; bump(); return;
            case '*': current_.kind = Token::Star; current_.text = "*"; bump(); return;
            case '^': current_.kind = Token::Caret; current_.text = "^"; bump(); return;
            case '(': current_.kind = Token::LParen; current_.text = "("; bump(); return;
            case ')': current_.kind = Token::RParen; current_.text = ")"; bump(); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = read_digits();
            // Optional "/q" makes a rational literal.
            if (pos_ < text_.size() && text_[pos_] == '/') {
                std::size_t save = pos_;
                int sl = line_, sc = column_;
                bump();
                if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    digits += "/" + read_digits();
                } else {
                    pos_ = save;
                    line_ = sl;
                    column_ = sc;
                }
            }
            current_.kind = Token::Number;
            current_.text = digits;
            return;
        }
        if (c == 'i') {
            current_.kind = Token::Imag;
            current_.text = "i";
            bump();
            return;
        }
        if (var_from_name(c)) {
            current_.kind = Token::Variable;
            current_.text = std::string(1, c);
            bump();
            return;
        }
        throw parse_error({line_, column_,
                           std::string("unexpected character '") + c + "'",
                           {"number", "i", "x", "y", "t", "(", "-"}});
    }

    std::string read_digits() {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            s += text_[pos_];
            bump();
        }
        return s;
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token current_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    MPoly run() {
        MPoly p = expr(0);
        if (lex_.peek().kind != Token::End) unexpected({"+", "-", "*", "^", "end of input"});
        return p;
    }

private:
    [[noreturn]] void unexpected(std::vector<std::string> expected) {
        const Token& t = lex_.peek();
        std::string what = t.kind == Token::End ? "unexpected end of input"
                                                : "unexpected token '" + t.text + "'";
        throw parse_error({t.line, t.column, what, std::move(expected)});
    }

    void check_depth(int depth) {
        if (depth > kMaxDepth)
            throw parse_error({lex_.peek().line, lex_.peek().column,
                               "expression nests deeper than permitted",
                               {}});
    }

    MPoly expr(int depth) {
        check_depth(depth);
        MPoly acc = term(depth + 1);
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            bool minus = lex_.take().kind == Token::Minus;
            MPoly rhs = term(depth + 1);
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    static bool starts_base(Token::Kind k) {
        return k == Token::Number || k == Token::Imag || k == Token::Variable ||
               k == Token::LParen || k == Token::Minus;
    }

    MPoly term(int depth) {
        check_depth(depth);
        MPoly acc = factor(depth + 1);
        for (;;) {
            if (lex_.peek().kind == Token::Star) {
                lex_.take();
                acc *= factor(depth + 1);
            } else if (starts_base(lex_.peek().kind) && lex_.peek().kind != Token::Minus) {
                // Juxtaposition multiplies; a '-' here belongs to the
                // enclosing sum instead.
                acc *= factor(depth + 1);
            } else {
                break;
            }
        }
        return acc;
    }

    MPoly factor(int depth) {
        check_depth(depth);
        MPoly b = base(depth + 1);
        if (lex_.peek().kind == Token::Caret) {
            lex_.take();
            if (lex_.peek().kind != Token::Number) unexpected({"non-negative integer exponent"});
            Token t = lex_.take();
            if (t.text.find('/') != std::string::npos)
                throw parse_error({t.line, t.column, "exponent must be an integer", {}});
            unsigned long e = 0;
            try {
                e = std::stoul(t.text);
            } catch (const std::exception&) {
                throw parse_error({t.line, t.column, "exponent out of range", {}});
            }
            if (e > kMaxExponent)
                fail(ErrorKind::Limit, "exponent " + t.text + " exceeds the cap of " +
                                           std::to_string(kMaxExponent));
            b = b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    MPoly base(int depth) {
        check_depth(depth);
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Token::Number: {
                Token tok = lex_.take();
                return MPoly::constant(VarSet::none(),
                                       GaussRational(rational_from_string(tok.text)));
            }
            case Token::Imag:
                lex_.take();
                return MPoly::constant(VarSet::none(), GaussRational::i());
            case Token::Variable: {
                Token tok = lex_.take();
                return MPoly::variable(*var_from_name(tok.text[0]));
            }
            case Token::LParen: {
                lex_.take();
                MPoly inner = expr(depth + 1);
                if (lex_.peek().kind != Token::RParen) unexpected({")"});
                lex_.take();
                return inner;
            }
            case Token::Minus:
                lex_.take();
                return -factor(depth + 1);
            default:
                unexpected({"number", "i", "x", "y", "t", "(", "-"});
        }
    }

    Lexer lex_;
};

}  // namespace

MPoly parse_poly(const std::string& text) {
    if (text.size() > kMaxInput)
        fail(ErrorKind::Limit, "input exceeds 64 KiB");
    return Parser(text).run();
}

}  // namespace qdl
