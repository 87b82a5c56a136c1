#include "dirac1d/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace dirac1d::expr {

static const std::vector<std::string> kFunctions = {
    "exp", "ln", "sin", "cos", "sinh", "cosh", "tanh", "coth", "sqrt", "abs"};

bool is_known_function(const std::string& name) {
    for (const auto& f : kFunctions)
        if (f == name) return true;
    return false;
}

const std::vector<std::string>& known_functions() { return kFunctions; }

// ---------------------------------------------------------------- parsing --

namespace {

struct Parser {
    const std::string& src;
    std::size_t pos = 0;

    explicit Parser(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw SyntaxError("syntax error", pos, what);
    }

    NodePtr make_lit(Complex v) {
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::Literal;
        n->value = v;
        return n;
    }

    NodePtr make_unary(std::string op, NodePtr operand) {
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::Unary;
        n->name = std::move(op);
        n->lhs = std::move(operand);
        return n;
    }

    NodePtr make_binary(std::string op, NodePtr l, NodePtr r) {
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::Binary;
        n->name = std::move(op);
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        return n;
    }

    NodePtr parse_expr() {
        NodePtr n = parse_term();
        for (;;) {
            if (accept('+'))
                n = make_binary("+", n, parse_term());
            else if (accept('-'))
                n = make_binary("-", n, parse_term());
            else
                return n;
        }
    }

    NodePtr parse_term() {
        NodePtr n = parse_unary();
        for (;;) {
            if (accept('*'))
                n = make_binary("*", n, parse_unary());
            else if (accept('/'))
                n = make_binary("/", n, parse_unary());
            else
                return n;
        }
    }

    NodePtr parse_unary() {
        if (accept('-')) return make_unary("-", parse_unary());
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (accept('^')) return make_binary("^", base, parse_unary());
        return base;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos >= src.size())
            throw SyntaxError("unexpected end of input", pos, "number, identifier or '('");
        char c = src[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        if (c == '(') {
            ++pos;
            NodePtr inner = parse_expr();
            expect(')', "')'");
            return inner;
        }
        throw SyntaxError("unexpected character", pos, "number, identifier or '('");
    }

    NodePtr parse_number() {
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos < src.size() && src[pos] == '.') {
            ++pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        }
        if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
            std::size_t mark = pos;
            ++pos;
            if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
            if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            } else {
                pos = mark; // 'e' belongs to a following identifier, not this number
            }
        }
        std::string text = src.substr(start, pos - start);
        if (text == ".") throw SyntaxError("malformed number", start, "digits");
        return make_lit(Complex(std::strtod(text.c_str(), nullptr), 0.0));
    }

    NodePtr parse_ident() {
        std::size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        std::string name = src.substr(start, pos - start);
        if (peek() == '(') {
            if (!is_known_function(name))
                throw UnknownFunction("unknown function '" + name + "' at offset " +
                                      std::to_string(start));
            ++pos; // consume '('
            NodePtr arg = parse_expr();
            expect(')', "')'");
            return make_unary(name, arg);
        }
        if (name == "i") return make_lit(Complex(0.0, 1.0));
        if (name == "pi") return make_lit(Complex(kPi, 0.0));
        if (name == "x") {
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::Variable;
            return n;
        }
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::Parameter;
        n->name = std::move(name);
        return n;
    }
};

} // namespace

Ast parse(const std::string& source) {
    Parser p(source);
    if (p.eof()) throw SyntaxError("empty expression", 0, "expression");
    NodePtr root = p.parse_expr();
    if (!p.eof()) throw SyntaxError("trailing input", p.pos, "end of input");
    return Ast{root};
}

// -------------------------------------------------------------- evaluation --

namespace {

constexpr double kPoleFloor = 1e-300;

Complex checked_div(Complex num, Complex den) {
    if (std::abs(den) < kPoleFloor) throw EvaluationPole("division by vanishing denominator");
    return num / den;
}

Complex apply_function(const std::string& op, Complex v) {
    if (op == "-") return -v;
    if (op == "exp") return std::exp(v);
    if (op == "ln") {
        if (std::abs(v) < kPoleFloor) throw EvaluationPole("ln of vanishing argument");
        return std::log(v);
    }
    if (op == "sin") return std::sin(v);
    if (op == "cos") return std::cos(v);
    if (op == "sinh") return std::sinh(v);
    if (op == "cosh") return std::cosh(v);
    if (op == "tanh") return std::tanh(v);
    if (op == "coth") return checked_div(std::cosh(v), std::sinh(v));
    if (op == "sqrt") return std::sqrt(v);
    if (op == "abs") return Complex(std::abs(v), 0.0);
    throw UnknownFunction("unknown function '" + op + "'");
}

Complex principal_pow(Complex a, Complex b) {
    if (std::abs(a) < kPoleFloor) {
        if (b.imag() == 0.0 && b.real() > 0.0) return Complex(0.0, 0.0);
        throw EvaluationPole("0 raised to a non-positive power");
    }
    return std::exp(b * std::log(a));
}

Complex eval_node(const Node& n, double x, const Bindings& bindings) {
    switch (n.kind) {
        case NodeKind::Literal: return n.value;
        case NodeKind::Variable: return Complex(x, 0.0);
        case NodeKind::Parameter: {
            auto it = bindings.find(n.name);
            if (it == bindings.end())
                throw UnboundParameter("parameter '" + n.name + "' is not bound");
            return it->second;
        }
        case NodeKind::Unary: return apply_function(n.name, eval_node(*n.lhs, x, bindings));
        case NodeKind::Binary: {
            Complex l = eval_node(*n.lhs, x, bindings);
            Complex r = eval_node(*n.rhs, x, bindings);
            if (n.name == "+") return l + r;
            if (n.name == "-") return l - r;
            if (n.name == "*") return l * r;
            if (n.name == "/") return checked_div(l, r);
            if (n.name == "^") return principal_pow(l, r);
            throw Error("corrupt AST: operator '" + n.name + "'");
        }
    }
    throw Error("corrupt AST");
}

void collect_parameters(const Node& n, std::set<std::string>& out) {
    if (n.kind == NodeKind::Parameter) out.insert(n.name);
    if (n.lhs) collect_parameters(*n.lhs, out);
    if (n.rhs) collect_parameters(*n.rhs, out);
}

} // namespace

Complex evaluate(const Ast& ast, double x, const Bindings& bindings) {
    return eval_node(*ast.root, x, bindings);
}

std::set<std::string> Ast::parameters() const {
    std::set<std::string> out;
    collect_parameters(*root, out);
    return out;
}

void validate_bindings(const Ast& ast, const Bindings& bindings) {
    for (const auto& p : ast.parameters())
        if (!bindings.count(p))
            throw UnknownIdentifier("identifier '" + p + "' has no binding");
}

// ---------------------------------------------------------------- printing --

namespace {

int precedence(const Node& n) {
    if (n.kind == NodeKind::Binary) {
        if (n.name == "+" || n.name == "-") return 1;
        if (n.name == "*" || n.name == "/") return 2;
        if (n.name == "^") return 4;
    }
    if (n.kind == NodeKind::Unary && n.name == "-") return 3;
    return 5; // atoms and function calls
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void print_node(const Node& n, std::string& out);

void print_child(const Node& child, int parent_prec, bool tight, std::string& out) {
    // tight: right operand of - / or left operand of ^, where equal
    // precedence still needs parentheses.
    int cp = precedence(child);
    bool need = cp < parent_prec || (tight && cp == parent_prec);
    if (need) out += '(';
    print_node(child, out);
    if (need) out += ')';
}

void print_node(const Node& n, std::string& out) {
    switch (n.kind) {
        case NodeKind::Literal:
            if (n.value == Complex(0.0, 1.0)) {
                out += 'i';
            } else if (n.value.real() == kPi && n.value.imag() == 0.0) {
                out += "pi";
            } else if (n.value.imag() == 0.0) {
                if (n.value.real() < 0.0) {
                    out += "(" + format_double(n.value.real()) + ")";
                } else {
                    out += format_double(n.value.real());
                }
            } else {
                out += "(" + format_double(n.value.real()) + "+i*" +
                       format_double(n.value.imag()) + ")";
            }
            return;
        case NodeKind::Variable: out += 'x'; return;
        case NodeKind::Parameter: out += n.name; return;
        case NodeKind::Unary:
            if (n.name == "-") {
                out += '-';
                print_child(*n.lhs, 3, false, out);
            } else {
                out += n.name;
                out += '(';
                print_node(*n.lhs, out);
                out += ')';
            }
            return;
        case NodeKind::Binary: {
            int prec = precedence(n);
            if (n.name == "^") {
                // right associative: parenthesize equal precedence on the left
                print_child(*n.lhs, prec, true, out);
                out += '^';
                print_child(*n.rhs, prec, false, out);
            } else {
                print_child(*n.lhs, prec, false, out);
                out += n.name;
                bool tight = n.name == "-" || n.name == "/";
                print_child(*n.rhs, prec, tight, out);
            }
            return;
        }
    }
}

bool nodes_equal(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case NodeKind::Literal:
            return a.value.real() == b.value.real() && a.value.imag() == b.value.imag();
        case NodeKind::Variable: return true;
        case NodeKind::Parameter: return a.name == b.name;
        case NodeKind::Unary: return a.name == b.name && nodes_equal(*a.lhs, *b.lhs);
        case NodeKind::Binary:
            return a.name == b.name && nodes_equal(*a.lhs, *b.lhs) && nodes_equal(*a.rhs, *b.rhs);
    }
    return false;
}

} // namespace

std::string print(const Ast& ast) {
    std::string out;
    print_node(*ast.root, out);
    return out;
}

bool Ast::structurally_equal(const Ast& other) const {
    return nodes_equal(*root, *other.root);
}

} // namespace dirac1d::expr
