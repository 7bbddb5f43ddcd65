#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vertexlab/rational.hpp"

namespace vtx {

struct parse_error : value_error {
    parse_error(const std::string& msg, size_t offset)
        : value_error(msg + " at offset " + std::to_string(offset)), offset(offset) {}
    size_t offset;
};

/// Expression AST of the prefix grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*          (at least one side scalar)
///   factor := rational | name | atom | call | '(' expr ')' | '-' factor
///   atom   := ('b' | 'g' | 'u') '[' int ',' int ']'
///   call   := 'W' '(' expr ',' expr ')' | 'C' '(' expr ',' int ',' expr ')'
///           | 'D' '(' expr ')'
/// Rational literals denote multiples of the vacuum; "1" is the vacuum.
struct Expr {
    enum class Kind { Number, Name, Atom, Wick, Circle, Derive, Add, Sub, Mul };
    Kind kind;
    Rational number;            // Number
    std::string name;           // Name
    char atom_family = 0;       // Atom: 'b', 'g', 'u'
    int atom_index = 0, atom_level = 0;
    int circle_mode = 0;        // Circle
    std::vector<std::unique_ptr<Expr>> args;
};

using ExprPtr = std::unique_ptr<Expr>;

ExprPtr parse(const std::string& text);

}  // namespace vtx
