#include "oremod/laurent.hpp"

#include <sstream>

#include "oremod/errors.hpp"

namespace oremod {

LaurentPoly LaurentPoly::constant(const Scalar& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Scalar& c, long exp) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.emplace(exp, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Scalar LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar LaurentPoly::constant_value() const { return coeff(0); }

long LaurentPoly::top_exp() const {
    if (is_zero()) throw Error("top_exp of zero");
    return terms_.rbegin()->first;
}

long LaurentPoly::bot_exp() const {
    if (is_zero()) throw Error("bot_exp of zero");
    return terms_.begin()->first;
}

void LaurentPoly::add_term(long exp, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::scale(const Scalar& c) const {
    LaurentPoly out;
    if (c.is_zero()) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

LaurentPoly LaurentPoly::shifted(long dexp) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + dexp, c);
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
    LaurentPoly acc = one();
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1ul) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

LaurentPoly LaurentPoly::derive(Gen g) const {
    LaurentPoly out;
    const long shift = (g == Gen::Theta) ? 0 : -1;
    for (const auto& [e, c] : terms_) {
        if (e == 0) continue;
        out.add_term(e + shift, c * Scalar(e));
    }
    return out;
}

Scalar LaurentPoly::eval(const Scalar& a) const {
    if (a.is_zero() && !is_zero() && bot_exp() < 0)
        throw EvalAtPole("evaluation at t=0 with negative exponents");
    Scalar acc(0);
    for (const auto& [e, c] : terms_) acc += c * a.pow(e);
    return acc;
}

std::optional<LaurentPoly> LaurentPoly::unit_inverse() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    return monomial(c.inv(), -e);
}

int LaurentPoly::cmp(const LaurentPoly& a, const LaurentPoly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        int c = Scalar::cmp(ia->second, ib->second);
        if (c != 0) return c;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

namespace {

std::string monomial_str(long exp) {
    if (exp == 0) return "";
    if (exp == 1) return "t";
    return "t^" + std::to_string(exp);
}

// One printed term.  For coefficients that are pure real or pure imaginary
// the sign is pulled out so sums read naturally; mixed coefficients are
// parenthesized.
struct TermText {
    bool negative;
    std::string body;
};

TermText term_text(const Scalar& c, long exp) {
    const std::string mono = monomial_str(exp);
    auto join = [&](const std::string& coeff) {
        if (mono.empty()) return coeff;
        if (coeff == "1") return mono;
        return coeff + "*" + mono;
    };
    if (c.is_real()) {
        const bool neg = sgn(c.re()) < 0;
        mpq_class mag = neg ? mpq_class(-c.re()) : c.re();
        return {neg, join(mag.get_str())};
    }
    if (sgn(c.re()) == 0) {
        const bool neg = sgn(c.im()) < 0;
        mpq_class mag = neg ? mpq_class(-c.im()) : c.im();
        std::string coeff = (mag == 1) ? "i" : mag.get_str() + "*i";
        return {neg, mono.empty() ? coeff : coeff + "*" + mono};
    }
    std::string coeff = "(" + c.str() + ")";
    return {false, mono.empty() ? coeff : coeff + "*" + mono};
}

} // namespace

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        TermText tt = term_text(it->second, it->first);
        if (first) {
            if (tt.negative) out << "-";
            out << tt.body;
            first = false;
        } else {
            out << (tt.negative ? " - " : " + ") << tt.body;
        }
    }
    return out.str();
}

} // namespace oremod
