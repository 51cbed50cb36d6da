#include "oremod/parse.hpp"

#include <cctype>
#include <memory>
#include <variant>

#include "oremod/errors.hpp"

namespace oremod {

namespace {

// ---------------------------------------------------------------------------
// Tokens

struct Token {
    enum class Kind { Int, Ident, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Kind::Int, src.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back({Token::Kind::Ident, src.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::string("+-*/^(),").find(c) != std::string::npos) {
            out.push_back({Token::Kind::Punct, std::string(1, c), i});
            ++i;
            continue;
        }
        throw SyntaxError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::Kind::End, "", src.size()});
    return out;
}

// ---------------------------------------------------------------------------
// AST

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
    enum class Kind { Int, Imag, VarT, GenTh, GenDt, Sym, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind;
    std::size_t pos = 0;
    mpz_class ival;
    BasisSymbol sym;
    long exp = 0; // Pow
    NodePtr a, b;
};

NodePtr mk(Node::Kind k, std::size_t pos) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->pos = pos;
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(tokenize(src)) {
        if (toks_.size() == 1) throw SyntaxError(0, "empty expression");
    }

    NodePtr parse() {
        NodePtr e = expr();
        expect_end();
        return e;
    }

private:
    const Token& peek() const { return toks_[cur_]; }
    Token take() { return toks_[cur_++]; }
    bool at_punct(const char* p) const {
        return peek().kind == Token::Kind::Punct && peek().text == p;
    }
    void expect_punct(const char* p) {
        if (!at_punct(p)) throw SyntaxError(peek().pos, std::string("expected '") + p + "'");
        ++cur_;
    }
    void expect_end() {
        if (peek().kind != Token::Kind::End)
            throw SyntaxError(peek().pos, "unexpected trailing input");
    }

    NodePtr expr() {
        NodePtr lhs = term();
        while (at_punct("+") || at_punct("-")) {
            const bool add = at_punct("+");
            const std::size_t pos = take().pos;
            NodePtr n = mk(add ? Node::Kind::Add : Node::Kind::Sub, pos);
            n->a = std::move(lhs);
            n->b = term();
            lhs = std::move(n);
        }
        return lhs;
    }

    NodePtr term() {
        NodePtr lhs = factor();
        while (at_punct("*") || at_punct("/")) {
            const bool mul = at_punct("*");
            const std::size_t pos = take().pos;
            NodePtr n = mk(mul ? Node::Kind::Mul : Node::Kind::Div, pos);
            n->a = std::move(lhs);
            n->b = factor();
            lhs = std::move(n);
        }
        return lhs;
    }

    NodePtr factor() {
        if (at_punct("-")) {
            const std::size_t pos = take().pos;
            NodePtr n = mk(Node::Kind::Neg, pos);
            n->a = factor();
            return n;
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (!at_punct("^")) return base;
        const std::size_t pos = take().pos;
        bool negative = false;
        if (at_punct("-")) {
            ++cur_;
            negative = true;
        }
        if (peek().kind != Token::Kind::Int)
            throw SyntaxError(peek().pos, "expected integer exponent");
        const Token t = take();
        long e = 0;
        try {
            e = std::stol(t.text);
        } catch (...) {
            throw SyntaxError(t.pos, "exponent out of range");
        }
        if (negative) {
            if (base->kind != Node::Kind::VarT)
                throw SyntaxError(pos, "negative exponents are only allowed on t");
            e = -e;
        }
        NodePtr n = mk(Node::Kind::Pow, pos);
        n->a = std::move(base);
        n->exp = e;
        return n;
    }

    NodePtr primary() {
        const Token t = peek();
        if (t.kind == Token::Kind::Int) {
            take();
            NodePtr n = mk(Node::Kind::Int, t.pos);
            n->ival = mpz_class(t.text);
            return n;
        }
        if (t.kind == Token::Kind::Ident) {
            take();
            if (t.text == "i") return mk(Node::Kind::Imag, t.pos);
            if (t.text == "t") return mk(Node::Kind::VarT, t.pos);
            if (t.text == "Th") return mk(Node::Kind::GenTh, t.pos);
            if (t.text == "Dt") return mk(Node::Kind::GenDt, t.pos);
            if (auto s = symbol_from_ident(t)) {
                NodePtr n = mk(Node::Kind::Sym, t.pos);
                n->sym = *s;
                return n;
            }
            throw SyntaxError(t.pos, "unknown identifier '" + t.text + "'");
        }
        if (at_punct("(")) {
            take();
            NodePtr inner = expr();
            expect_punct(")");
            return inner;
        }
        throw SyntaxError(t.pos, "expected a value");
    }

    // E/T/B/L/P basis symbols: compact "E1", "T0" (nonnegative index), or
    // parenthesized "E(3)", "T(-1)", "B(0,1)", "P(1,2)".
    std::optional<BasisSymbol> symbol_from_ident(const Token& t) {
        const char head = t.text[0];
        BasisSymbol::Kind kind;
        switch (head) {
            case 'E': kind = BasisSymbol::Kind::E; break;
            case 'T': kind = BasisSymbol::Kind::T; break;
            case 'B': kind = BasisSymbol::Kind::B; break;
            case 'L': kind = BasisSymbol::Kind::L; break;
            case 'P': kind = BasisSymbol::Kind::P; break;
            default: return std::nullopt;
        }
        const bool pair_kind = kind == BasisSymbol::Kind::B || kind == BasisSymbol::Kind::P;
        if (t.text.size() > 1) {
            for (std::size_t i = 1; i < t.text.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) return std::nullopt;
            if (pair_kind) return std::nullopt;
            return BasisSymbol{kind, std::stol(t.text.substr(1)), 0};
        }
        if (!at_punct("(")) return std::nullopt;
        take();
        const long a = signed_int();
        long b = 0;
        if (pair_kind) {
            expect_punct(",");
            b = signed_int();
        }
        expect_punct(")");
        return BasisSymbol{kind, a, b};
    }

    long signed_int() {
        bool neg = false;
        if (at_punct("-")) {
            ++cur_;
            neg = true;
        }
        if (peek().kind != Token::Kind::Int) throw SyntaxError(peek().pos, "expected integer");
        const Token t = take();
        long v = 0;
        try {
            v = std::stol(t.text);
        } catch (...) {
            throw SyntaxError(t.pos, "integer out of range");
        }
        return neg ? -v : v;
    }

    std::vector<Token> toks_;
    std::size_t cur_ = 0;
};

// ---------------------------------------------------------------------------
// Lowering

// Scalar-only evaluation (rejects t, generators, symbols).
Scalar lower_scalar(const Node& n) {
    switch (n.kind) {
        case Node::Kind::Int: return Scalar(n.ival);
        case Node::Kind::Imag: return Scalar::i();
        case Node::Kind::Add: return lower_scalar(*n.a) + lower_scalar(*n.b);
        case Node::Kind::Sub: return lower_scalar(*n.a) - lower_scalar(*n.b);
        case Node::Kind::Mul: return lower_scalar(*n.a) * lower_scalar(*n.b);
        case Node::Kind::Div: {
            const Scalar d = lower_scalar(*n.b);
            if (d.is_zero()) throw DivisionByZero("division by zero in expression");
            return lower_scalar(*n.a) / d;
        }
        case Node::Kind::Neg: return -lower_scalar(*n.a);
        case Node::Kind::Pow: {
            if (n.exp < 0) throw LoweringError("negative exponent in scalar context");
            return lower_scalar(*n.a).pow(n.exp);
        }
        default: throw LoweringError("expected a scalar expression");
    }
}

LaurentPoly lower_laurent(const Node& n) {
    switch (n.kind) {
        case Node::Kind::Int: return LaurentPoly::constant(Scalar(n.ival));
        case Node::Kind::Imag: return LaurentPoly::constant(Scalar::i());
        case Node::Kind::VarT: return LaurentPoly::t();
        case Node::Kind::GenTh:
        case Node::Kind::GenDt:
            throw LoweringError("operator generator in Laurent-polynomial context");
        case Node::Kind::Sym: throw LoweringError("basis symbol in Laurent-polynomial context");
        case Node::Kind::Add: return lower_laurent(*n.a) + lower_laurent(*n.b);
        case Node::Kind::Sub: return lower_laurent(*n.a) - lower_laurent(*n.b);
        case Node::Kind::Mul: return lower_laurent(*n.a) * lower_laurent(*n.b);
        case Node::Kind::Div: {
            const LaurentPoly d = lower_laurent(*n.b);
            if (!d.is_constant())
                throw LoweringError("division by a non-constant in Laurent-polynomial context");
            const Scalar c = d.constant_value();
            if (c.is_zero()) throw DivisionByZero("division by zero in expression");
            return lower_laurent(*n.a).scale(c.inv());
        }
        case Node::Kind::Neg: return -lower_laurent(*n.a);
        case Node::Kind::Pow: {
            if (n.exp >= 0) return lower_laurent(*n.a).pow(static_cast<unsigned long>(n.exp));
            return LaurentPoly::t(n.exp); // parser guarantees the base is t
        }
    }
    throw LoweringError("unreachable");
}

RatFunc lower_ratfunc(const Node& n) {
    switch (n.kind) {
        case Node::Kind::Int: return RatFunc(Scalar(n.ival));
        case Node::Kind::Imag: return RatFunc(Scalar::i());
        case Node::Kind::VarT: return RatFunc::t();
        case Node::Kind::GenTh:
        case Node::Kind::GenDt:
            throw LoweringError("operator generator in rational-function context");
        case Node::Kind::Sym: throw LoweringError("basis symbol in rational-function context");
        case Node::Kind::Add: return lower_ratfunc(*n.a) + lower_ratfunc(*n.b);
        case Node::Kind::Sub: return lower_ratfunc(*n.a) - lower_ratfunc(*n.b);
        case Node::Kind::Mul: return lower_ratfunc(*n.a) * lower_ratfunc(*n.b);
        case Node::Kind::Div: {
            const RatFunc d = lower_ratfunc(*n.b);
            if (d.is_zero()) throw DivisionByZero("division by zero in expression");
            return lower_ratfunc(*n.a) / d;
        }
        case Node::Kind::Neg: return -lower_ratfunc(*n.a);
        case Node::Kind::Pow: {
            if (n.exp >= 0) {
                RatFunc base = lower_ratfunc(*n.a);
                RatFunc acc = RatFunc::one();
                for (long k = 0; k < n.exp; ++k) acc *= base;
                return acc;
            }
            return RatFunc::from_laurent(LaurentPoly::t(n.exp));
        }
    }
    throw LoweringError("unreachable");
}

struct OreLowering {
    bool saw_th = false;
    bool saw_dt = false;

    // Everything is evaluated in Euler form (Dt enters as t^-1 * Th) and
    // converted back to Dt form at the end when only Dt appeared.
    OreElem lower(const Node& n) {
        switch (n.kind) {
            case Node::Kind::Int:
                return OreElem::constant(Gen::Theta, LaurentPoly::constant(Scalar(n.ival)));
            case Node::Kind::Imag:
                return OreElem::constant(Gen::Theta, LaurentPoly::constant(Scalar::i()));
            case Node::Kind::VarT: return OreElem::constant(Gen::Theta, LaurentPoly::t());
            case Node::Kind::GenTh:
                saw_th = true;
                return OreElem::generator(Gen::Theta);
            case Node::Kind::GenDt:
                saw_dt = true;
                return OreElem::monomial(Gen::Theta, 1, LaurentPoly::t(-1));
            case Node::Kind::Sym: throw LoweringError("basis symbol in operator context");
            case Node::Kind::Add: return lower(*n.a) + lower(*n.b);
            case Node::Kind::Sub: return lower(*n.a) - lower(*n.b);
            case Node::Kind::Mul: return lower(*n.a) * lower(*n.b);
            case Node::Kind::Div: {
                OreElem lhs = lower(*n.a);
                OreElem rhs = lower(*n.b);
                if (rhs.deg() != 0 || !rhs.coeff(0).is_constant())
                    throw LoweringError("division by a non-scalar in operator context");
                const Scalar c = rhs.coeff(0).constant_value();
                if (c.is_zero()) throw DivisionByZero("division by zero in expression");
                return lhs.scale(c.inv());
            }
            case Node::Kind::Neg: return -lower(*n.a);
            case Node::Kind::Pow: {
                if (n.exp >= 0) return lower(*n.a).pow(static_cast<unsigned long>(n.exp));
                return OreElem::constant(Gen::Theta, LaurentPoly::t(n.exp));
            }
        }
        throw LoweringError("unreachable");
    }
};

// ModVec lowering: linear combinations of symbols with scalar coefficients.
struct VecValue {
    bool is_vec = false;
    Scalar s;
    ModVec v;

    explicit VecValue(Scalar sc) : s(std::move(sc)), v(nullptr) {}
    explicit VecValue(ModVec vec) : is_vec(true), s(0), v(std::move(vec)) {}
};

VecValue lower_vec(const DescPtr& desc, const Node& n) {
    switch (n.kind) {
        case Node::Kind::Sym: {
            if (!desc->symbol_valid(n.sym))
                throw LoweringError("basis symbol " + n.sym.str() + " is not legal for " +
                                    desc->str());
            return VecValue(basis_vector(desc, n.sym));
        }
        case Node::Kind::Add:
        case Node::Kind::Sub: {
            VecValue a = lower_vec(desc, *n.a);
            VecValue b = lower_vec(desc, *n.b);
            const bool sub = n.kind == Node::Kind::Sub;
            if (a.is_vec && b.is_vec)
                return VecValue(sub ? a.v - b.v : a.v + b.v);
            if (!a.is_vec && !b.is_vec) return VecValue(sub ? a.s - b.s : a.s + b.s);
            // A scalar summand is only legal when it is zero ("0 + E(1)").
            VecValue& sc = a.is_vec ? b : a;
            VecValue& vec = a.is_vec ? a : b;
            if (!sc.s.is_zero())
                throw LoweringError("cannot add a nonzero scalar to a module vector");
            return VecValue(sub && a.is_vec == false ? -vec.v : vec.v);
        }
        case Node::Kind::Mul: {
            VecValue a = lower_vec(desc, *n.a);
            VecValue b = lower_vec(desc, *n.b);
            if (a.is_vec && b.is_vec) throw LoweringError("cannot multiply module vectors");
            if (a.is_vec) return VecValue(a.v.scale(b.s));
            if (b.is_vec) return VecValue(b.v.scale(a.s));
            return VecValue(a.s * b.s);
        }
        case Node::Kind::Div: {
            VecValue a = lower_vec(desc, *n.a);
            VecValue b = lower_vec(desc, *n.b);
            if (b.is_vec) throw LoweringError("cannot divide by a module vector");
            if (b.s.is_zero()) throw DivisionByZero("division by zero in expression");
            if (a.is_vec) return VecValue(a.v.scale(b.s.inv()));
            return VecValue(a.s / b.s);
        }
        case Node::Kind::Neg: {
            VecValue a = lower_vec(desc, *n.a);
            if (a.is_vec) return VecValue(-a.v);
            return VecValue(-a.s);
        }
        default: return VecValue(lower_scalar(n));
    }
}

} // namespace

LaurentPoly parse_laurent(const std::string& src) {
    Parser p(src);
    return lower_laurent(*p.parse());
}

RatFunc parse_ratfunc(const std::string& src) {
    Parser p(src);
    return lower_ratfunc(*p.parse());
}

OreElem parse_ore(const std::string& src) {
    Parser p(src);
    const NodePtr ast = p.parse();
    OreLowering lowering;
    OreElem out = lowering.lower(*ast);
    if (lowering.saw_dt && !lowering.saw_th) return convert_generator(out, Gen::Ddt);
    return out;
}

Scalar parse_scalar(const std::string& src) {
    Parser p(src);
    return lower_scalar(*p.parse());
}

std::vector<Scalar> parse_scalar_list(const std::string& src) {
    if (src.find_first_not_of(" \t") == std::string::npos) return {};
    std::vector<Scalar> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= src.size(); ++i) {
        if (i < src.size() && src[i] != ',') continue;
        const std::string piece = src.substr(start, i - start);
        if (piece.find_first_not_of(" \t") == std::string::npos)
            throw SyntaxError(start, "empty list entry");
        out.push_back(parse_scalar(piece));
        start = i + 1;
    }
    return out;
}

ModVec parse_modvec(const DescPtr& desc, const std::string& src) {
    Parser p(src);
    VecValue v = lower_vec(desc, *p.parse());
    if (v.is_vec) return v.v;
    if (v.s.is_zero()) return ModVec(desc);
    throw LoweringError("expected a module vector, got a scalar");
}

BasisSymbol parse_basis_symbol(const std::string& src) {
    Parser p(src);
    const NodePtr ast = p.parse();
    if (ast->kind != Node::Kind::Sym) throw LoweringError("expected a basis symbol");
    return ast->sym;
}

} // namespace oremod
