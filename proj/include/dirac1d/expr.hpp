#ifndef DIRAC1D_EXPR_HPP
#define DIRAC1D_EXPR_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "dirac1d/core.hpp"

// Small expression language for user-defined complex potentials of a real
// variable x.  Grammar (EBNF, also in docs/expr-grammar.ebnf):
//
//   expr    = term { ("+" | "-") term } ;
//   term    = unary { ("*" | "/") unary } ;
//   unary   = "-" unary | power ;
//   power   = atom [ "^" unary ] ;              (* right associative *)
//   atom    = number | "i" | "pi" | ident
//           | ident "(" expr ")" | "(" expr ")" ;
//
// Functions: exp ln sin cos sinh cosh tanh coth sqrt abs.
// "i" and "pi" are reserved constants; identifiers are case-sensitive.

namespace dirac1d::expr {

enum class NodeKind {
    Literal,   // complex constant (numbers, i, pi)
    Variable,  // the free variable x
    Parameter, // named parameter, bound at evaluation time
    Unary,     // op: "-" or a function name
    Binary,    // op: + - * / ^
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind;
    Complex value{};          // Literal
    std::string name;         // Parameter name, Unary/Binary op
    NodePtr lhs, rhs;         // children (Unary uses lhs only)
};

struct Ast {
    NodePtr root;

    bool structurally_equal(const Ast& other) const;
    // Names of free parameters (excludes x and constants).
    std::set<std::string> parameters() const;
};

using Bindings = std::map<std::string, Complex>;

// Throws SyntaxError (with byte offset and expected-token set) or
// UnknownFunction.
Ast parse(const std::string& source);

// Throws UnboundParameter or EvaluationPole (denominator below 1e-300).
Complex evaluate(const Ast& ast, double x, const Bindings& bindings = {});

// Checks that every free parameter is covered by the bindings; throws
// UnknownIdentifier naming the first offender.
void validate_bindings(const Ast& ast, const Bindings& bindings);

// Prints with minimal parentheses; parse(print(ast)) is structurally
// equal to ast.
std::string print(const Ast& ast);

bool is_known_function(const std::string& name);
const std::vector<std::string>& known_functions();

} // namespace dirac1d::expr

#endif
