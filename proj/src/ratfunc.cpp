#include "oremod/ratfunc.hpp"

#include "oremod/errors.hpp"

namespace oremod {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = gcd_monic(num_, den_);
    if (g.deg() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    const Scalar lead = den_.lc();
    if (!lead.is_one()) {
        const Scalar inv = lead.inv();
        num_ = num_.scale(inv);
        den_ = den_.scale(inv);
    }
}

RatFunc RatFunc::from_laurent(const LaurentPoly& p) {
    if (p.is_zero()) return zero();
    const long bot = p.bot_exp();
    if (bot >= 0) return RatFunc(Poly::from_laurent(p));
    return RatFunc(Poly::from_laurent(p.shifted(-bot)),
                   Poly::monomial(Scalar(1), static_cast<unsigned long>(-bot)));
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::derive(Gen g) const {
    RatFunc ddt(num_.derive() * den_ - num_ * den_.derive(), den_ * den_);
    if (g == Gen::Ddt) return ddt;
    return RatFunc(Poly::t()) * ddt;
}

Scalar RatFunc::eval(const Scalar& a) const {
    const Scalar d = den_.eval(a);
    if (d.is_zero()) throw EvalAtPole("rational function evaluated at a pole");
    return num_.eval(a) / d;
}

std::optional<LaurentPoly> RatFunc::to_laurent() const {
    if (is_zero()) return LaurentPoly::zero();
    // Denominator must be t^k (monic, single term).
    for (int i = 0; i < den_.deg(); ++i)
        if (!den_.coeff(static_cast<std::size_t>(i)).is_zero()) return std::nullopt;
    return num_.to_laurent().shifted(-den_.deg());
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace oremod
