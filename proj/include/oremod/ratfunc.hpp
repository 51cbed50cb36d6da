#pragma once

#include <optional>
#include <string>

#include "oremod/poly.hpp"

namespace oremod {

// Element of C(t) in the unique canonical form num/den with den monic and
// gcd(num, den) = 1.  Equality is structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den);
    explicit RatFunc(const Poly& num) : num_(num), den_(Poly::one()) {}
    explicit RatFunc(const Scalar& c) : num_(Poly::constant(c)), den_(Poly::one()) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Scalar(1)); }
    static RatFunc t() { return RatFunc(Poly::t()); }
    static RatFunc from_laurent(const LaurentPoly& p);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const { return *this * o.inv(); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc scale(const Scalar& s) const { return RatFunc(num_.scale(s), den_); }
    RatFunc inv() const; // throws DivisionByZero on zero

    // Quotient rule followed by the chosen derivation (theta = t * d/dt).
    RatFunc derive(Gen g) const;

    // Exact evaluation; throws EvalAtPole when den(a) = 0.
    Scalar eval(const Scalar& a) const;

    // The Laurent polynomial equal to this value, when one exists
    // (denominator a monomial t^k).
    std::optional<LaurentPoly> to_laurent() const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // "(num)/(den)", or the plain polynomial form when den = 1.
    std::string str() const;

private:
    void normalize();

    Poly num_;
    Poly den_;
};

} // namespace oremod
