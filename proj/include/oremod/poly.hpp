#pragma once

#include <utility>
#include <vector>

#include "oremod/laurent.hpp"
#include "oremod/scalar.hpp"

namespace oremod {

// Dense univariate polynomial over Scalar.  Workhorse for the Euclidean
// algorithms behind rational functions and partial fractions.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(Scalar(1)); }
    static Poly constant(const Scalar& c);
    static Poly monomial(const Scalar& c, unsigned long exp);
    static Poly t() { return monomial(Scalar(1), 1); }
    // (t - a)
    static Poly linear(const Scalar& a);

    int deg() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
    const Scalar& lc() const; // leading coefficient, nonzero value required

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scale(const Scalar& s) const;
    Poly monic() const; // divide by lc(); zero stays zero
    Poly derive() const; // d/dt
    Scalar eval(const Scalar& a) const;
    Poly pow(unsigned long e) const;

    // Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    bool divisible_by(const Poly& d) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    LaurentPoly to_laurent() const;
    // Requires only nonnegative exponents.
    static Poly from_laurent(const LaurentPoly& p);

    std::string str() const { return to_laurent().str(); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

// Monic greatest common divisor.
Poly gcd_monic(Poly a, Poly b);

} // namespace oremod
