#pragma once

#include <map>
#include <string>

#include "oremod/scalar.hpp"

namespace oremod {

// Derivation choice for the operator algebras: the Euler derivation
// theta = t*d/dt or the plain derivative d/dt.
enum class Gen { Theta, Ddt };

inline const char* gen_token(Gen g) { return g == Gen::Theta ? "Th" : "Dt"; }

// Element of C[t, t^-1] over Scalar: a finite map exponent -> nonzero
// coefficient.  Canonical by construction (no zero coefficients stored),
// so equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return constant(Scalar(1)); }
    static LaurentPoly constant(const Scalar& c);
    static LaurentPoly monomial(const Scalar& c, long exp);
    static LaurentPoly t(long exp = 1) { return monomial(Scalar(1), exp); }

    const std::map<long, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Scalar coeff(long exp) const;
    Scalar constant_value() const; // requires is_constant()

    // Extreme exponents; only meaningful on nonzero values.
    long top_exp() const;
    long bot_exp() const;

    void add_term(long exp, const Scalar& c); // canonicalizing accumulate

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scale(const Scalar& c) const;
    LaurentPoly shifted(long dexp) const; // multiply by t^dexp
    LaurentPoly pow(unsigned long e) const;

    // theta sends t^k to k*t^k; d/dt sends t^k to k*t^(k-1).
    LaurentPoly derive(Gen g) const;

    // Exact evaluation; throws EvalAtPole for a = 0 with negative exponents.
    Scalar eval(const Scalar& a) const;

    // Inverse when the value is a unit of C[t,t^-1], i.e. a single monomial.
    std::optional<LaurentPoly> unit_inverse() const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Total order for canonical container keys.
    static int cmp(const LaurentPoly& a, const LaurentPoly& b);

    // Canonical text, descending exponents: "t^2 - 4*t + 1/4".  Round-trips
    // through the expression parser.
    std::string str() const;

private:
    std::map<long, Scalar> terms_;
};

} // namespace oremod
