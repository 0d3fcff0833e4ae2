#pragma once

// Tokenizer shared by the element and path expression parsers.

#include <cctype>
#include <string>

#include "hopfact/errors.hpp"
#include "hopfact/polynomial.hpp"

namespace hopfact::detail {

enum class TokenKind { number, identifier, plus, minus, star, caret, end };

struct Token {
    TokenKind kind;
    std::size_t position;
    std::string text;
    Rational number;
};

class Lexer {
public:
    explicit Lexer(std::string text) : text_(std::move(text)) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

    /// Optionally signed integer, as used after '^'.
    long expect_integer() {
        bool negative = false;
        if (current_.kind == TokenKind::minus) {
            negative = true;
            advance();
        }
        if (current_.kind != TokenKind::number || current_.number.get_den() != 1)
            throw SyntaxError("expected an integer exponent", current_.position);
        if (!current_.number.get_num().fits_slong_p())
            throw SyntaxError("exponent out of range", current_.position);
        long v = current_.number.get_num().get_si();
        advance();
        return negative ? -v : v;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_ = Token{TokenKind::end, pos_, {}, Rational(0)};
        if (pos_ >= text_.size()) return;
        char c = text_[pos_];
        switch (c) {
            case '+': current_.kind = TokenKind::plus; ++pos_; return;
            case '-': current_.kind = TokenKind::minus; ++pos_; return;
            case '*': current_.kind = TokenKind::star; ++pos_; return;
            case '^': current_.kind = TokenKind::caret; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string literal = text_.substr(start, pos_ - start);
            if (pos_ < text_.size() && text_[pos_] == '/') {
                std::size_t den_start = ++pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                if (pos_ == den_start) throw SyntaxError("missing denominator", den_start);
                literal += "/" + text_.substr(den_start, pos_ - den_start);
            }
            current_.kind = TokenKind::number;
            current_.text = literal;
            Rational value(literal, 10);
            if (value.get_den() == 0) throw SyntaxError("zero denominator", start);
            value.canonicalize();
            current_.number = value;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
                ++pos_;
            current_.kind = TokenKind::identifier;
            current_.text = text_.substr(start, pos_ - start);
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string text_;
    std::size_t pos_ = 0;
    Token current_{TokenKind::end, 0, {}, Rational(0)};
};

}  // namespace hopfact::detail
