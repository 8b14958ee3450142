#include "wha/parser.hpp"

#include <cctype>

namespace wha {

namespace {

struct Token {
    enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token next()
    {
        Token t = tok_;
        advance();
        return t;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    Token tok_;
    void advance()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::End, ""};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            tok_ = {Token::Int, s_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Ident, s_.substr(start, pos_ - start)};
            return;
        }
        ++pos_;
        switch (c) {
        case '+': tok_ = {Token::Plus, "+"}; return;
        case '-': tok_ = {Token::Minus, "-"}; return;
        case '*': tok_ = {Token::Star, "*"}; return;
        case '/': tok_ = {Token::Slash, "/"}; return;
        case '^': tok_ = {Token::Caret, "^"}; return;
        case '(': tok_ = {Token::LParen, "("}; return;
        case ')': tok_ = {Token::RParen, ")"}; return;
        default: throw ParseError(std::string("unexpected character '") + c + "'");
        }
    }
};

class Parser {
public:
    Parser(const std::string& text, const Alphabet& alph, char variable)
        : lex_(text), alph_(alph), var_(variable)
    {
    }

    Element parse()
    {
        Element e = expr();
        if (lex_.peek().kind != Token::End)
            throw ParseError("trailing input after expression");
        return e;
    }

private:
    Lexer lex_;
    const Alphabet& alph_;
    char var_;

    Element expr()
    {
        bool neg = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.next();
            neg = true;
        }
        Element acc = term();
        if (neg)
            acc = -acc;
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            bool minus = lex_.next().kind == Token::Minus;
            Element t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    Element term()
    {
        Element acc = factor();
        while (lex_.peek().kind == Token::Star || lex_.peek().kind == Token::Slash) {
            bool div = lex_.next().kind == Token::Slash;
            Element f = factor();
            if (div) {
                if (!f.is_scalar())
                    throw ParseError("division by a non-scalar expression");
                Scalar s = f.scalar_value();
                if (s.is_zero())
                    throw ParseError("division by zero");
                acc = s.inverse() * acc;
            } else {
                acc = acc * f;
            }
        }
        return acc;
    }

    Element factor()
    {
        Element base = atom();
        if (lex_.peek().kind != Token::Caret)
            return base;
        lex_.next();
        bool neg = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.next();
            neg = true;
        }
        Token t = lex_.next();
        if (t.kind != Token::Int)
            throw ParseError("expected integer exponent after '^'");
        long e = std::stol(t.text);
        if (neg)
            e = -e;
        if (base.is_scalar())
            return Element::constant(base.scalar_value().pow(e));
        if (e < 0)
            throw ParseError("negative power of a non-scalar expression");
        Element acc = Element::one();
        for (long i = 0; i < e; ++i)
            acc = acc * base;
        return acc;
    }

    Element atom()
    {
        Token t = lex_.next();
        switch (t.kind) {
        case Token::Int:
            return Element::constant(Scalar(Rational(BigInt(t.text))));
        case Token::Ident: {
            if (auto id = alph_.find(t.text))
                return Element::of_word({*id});
            if (t.text.size() == 1 && t.text[0] == var_)
                return Element::constant(Scalar::variable(var_));
            throw ParseError("unknown symbol '" + t.text + "'");
        }
        case Token::LParen: {
            Element e = expr();
            if (lex_.next().kind != Token::RParen)
                throw ParseError("missing ')'");
            return e;
        }
        default:
            throw ParseError("unexpected token '" + t.text + "'");
        }
    }
};

} // namespace

Element parse_element(const std::string& text, const Alphabet& alph, char variable)
{
    return Parser(text, alph, variable).parse();
}

std::pair<Element, Element> parse_relation(const std::string& line, const Alphabet& alph,
                                           char variable)
{
    // Split on the '=' that is not part of an operator (there is only '=').
    auto eq = line.find('=');
    if (eq == std::string::npos)
        throw ParseError("relation line without '='");
    return {parse_element(line.substr(0, eq), alph, variable),
            parse_element(line.substr(eq + 1), alph, variable)};
}

} // namespace wha
