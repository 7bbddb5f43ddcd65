#include "vertexlab/parser.hpp"

#include <cctype>

namespace vtx {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void ws() {
        while (pos < s.size() && std::isspace(uint8_t(s[pos]))) ++pos;
    }
    char peek() {
        ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw parse_error(std::string("expected '") + c + "'", pos);
    }

    long integer() {
        ws();
        size_t start = pos;
        bool neg = eat('-');
        ws();
        size_t d0 = pos;
        while (pos < s.size() && std::isdigit(uint8_t(s[pos]))) ++pos;
        if (pos == d0) throw parse_error("expected integer", start);
        long v = std::stol(s.substr(d0, pos - d0));
        return neg ? -v : v;
    }

    Rational rational() {
        long num = integer();
        if (eat('/')) {
            long den = integer();
            return Rational(num, den);
        }
        return Rational(num);
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (true) {
            if (eat('+')) {
                auto e = std::make_unique<Expr>();
                e->kind = Expr::Kind::Add;
                e->args.push_back(std::move(lhs));
                e->args.push_back(term());
                lhs = std::move(e);
            } else if (eat('-')) {
                auto e = std::make_unique<Expr>();
                e->kind = Expr::Kind::Sub;
                e->args.push_back(std::move(lhs));
                e->args.push_back(term());
                lhs = std::move(e);
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (eat('*')) {
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Mul;
            e->args.push_back(std::move(lhs));
            e->args.push_back(factor());
            lhs = std::move(e);
        }
        return lhs;
    }

    ExprPtr factor() {
        char c = peek();
        if (c == '(') {
            expect('(');
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (c == '-') {
            expect('-');
            auto neg = std::make_unique<Expr>();
            neg->kind = Expr::Kind::Mul;
            auto m1 = std::make_unique<Expr>();
            m1->kind = Expr::Kind::Number;
            m1->number = Rational(-1);
            neg->args.push_back(std::move(m1));
            neg->args.push_back(factor());
            return neg;
        }
        if (std::isdigit(uint8_t(c))) {
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Number;
            e->number = rational();
            return e;
        }
        if (std::isalpha(uint8_t(c)) || c == '_') return name_or_call();
        throw parse_error("expected expression", pos);
    }

    ExprPtr name_or_call() {
        ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(uint8_t(s[pos])) || s[pos] == '_')) ++pos;
        std::string id = s.substr(start, pos - start);
        if (id.empty()) throw parse_error("expected identifier", start);

        if ((id == "b" || id == "g" || id == "u") && peek() == '[') {
            expect('[');
            long i = integer();
            expect(',');
            long k = integer();
            expect(']');
            if (i < 1) throw parse_error("atom index is 1-based", start);
            if (k < 0) throw parse_error("atom level must be >= 0", start);
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Atom;
            e->atom_family = id[0];
            e->atom_index = int(i);
            e->atom_level = int(k);
            return e;
        }
        if (id == "W" && peek() == '(') {
            expect('(');
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Wick;
            e->args.push_back(expr());
            expect(',');
            e->args.push_back(expr());
            expect(')');
            return e;
        }
        if (id == "C" && peek() == '(') {
            expect('(');
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Circle;
            e->args.push_back(expr());
            expect(',');
            e->circle_mode = int(integer());
            expect(',');
            e->args.push_back(expr());
            expect(')');
            return e;
        }
        if (id == "D" && peek() == '(') {
            expect('(');
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Derive;
            e->args.push_back(expr());
            expect(')');
            return e;
        }
        if (peek() == '(') throw parse_error("unknown function '" + id + "'", start);
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::Name;
        e->name = id;
        return e;
    }
};

}  // namespace

ExprPtr parse(const std::string& text) {
    Parser p(text);
    ExprPtr e = p.expr();
    p.ws();
    if (p.pos != text.size()) throw parse_error("trailing input", p.pos);
    return e;
}

}  // namespace vtx
