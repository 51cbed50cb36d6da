#include "oremod/poly.hpp"

#include "oremod/errors.hpp"

namespace oremod {

Poly Poly::constant(const Scalar& c) {
    Poly p;
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

Poly Poly::monomial(const Scalar& c, unsigned long exp) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(exp + 1, Scalar(0));
    p.c_[exp] = c;
    return p;
}

Poly Poly::linear(const Scalar& a) {
    Poly p;
    p.c_ = {-a, Scalar(1)};
    return p;
}

const Scalar& Poly::lc() const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out;
    out.c_.resize(std::max(c_.size(), o.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = coeff(i) + o.coeff(i);
    out.trim();
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly out;
    out.c_.assign(c_.size() + o.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out.c_[i + j] += c_[i] * o.c_[j];
    out.trim();
    return out;
}

Poly Poly::scale(const Scalar& s) const {
    if (s.is_zero()) return Poly();
    Poly out = *this;
    for (auto& c : out.c_) c *= s;
    return out;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scale(lc().inv());
}

Poly Poly::derive() const {
    Poly out;
    if (c_.size() <= 1) return out;
    out.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out.c_[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    out.trim();
    return out;
}

Scalar Poly::eval(const Scalar& a) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it;
    return acc;
}

Poly Poly::pow(unsigned long e) const {
    Poly acc = one();
    Poly base = *this;
    while (e > 0) {
        if (e & 1ul) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly q, r = *this;
    const Scalar lcd_inv = d.lc().inv();
    while (!r.is_zero() && r.deg() >= d.deg()) {
        const std::size_t shift = static_cast<std::size_t>(r.deg() - d.deg());
        const Scalar f = r.lc() * lcd_inv;
        q += monomial(f, shift);
        r -= d * monomial(f, shift);
    }
    return {q, r};
}

bool Poly::divisible_by(const Poly& d) const { return divmod(d).second.is_zero(); }

LaurentPoly Poly::to_laurent() const {
    LaurentPoly out;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) out.add_term(static_cast<long>(i), c_[i]);
    return out;
}

Poly Poly::from_laurent(const LaurentPoly& p) {
    Poly out;
    if (p.is_zero()) return out;
    if (p.bot_exp() < 0) throw Error("negative exponent in polynomial context");
    out.c_.assign(static_cast<std::size_t>(p.top_exp()) + 1, Scalar(0));
    for (const auto& [e, c] : p.terms()) out.c_[static_cast<std::size_t>(e)] = c;
    return out;
}

Poly gcd_monic(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace oremod
