#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace oremod {

// Exact element of Q(i), the field of Gaussian rationals: re + im*i with
// arbitrary-precision rational parts.  Values are immutable after
// construction and always stored in lowest terms with positive denominators,
// so equality is structural.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {} // NOLINT: implicit by design
    explicit Scalar(const mpz_class& n) : re_(n), im_(0) {}
    explicit Scalar(const mpq_class& re) : re_(re) { canonicalize(); }
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        canonicalize();
    }

    static Scalar rational(long num, long den);
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_integer() const { return is_real() && re_.get_den() == 1; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar operator+(const Scalar& o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
    Scalar operator-(const Scalar& o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
    Scalar operator*(const Scalar& o) const {
        return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar conj() const { return Scalar(re_, -im_); }

    // re^2 + im^2, the multiplicative norm down to Q.
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    // Multiplicative inverse; throws DivisionByZero on zero.
    Scalar inv() const;

    // Integer power, negative exponents through inv().
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order used for canonical container keys (not an arithmetic order).
    static int cmp(const Scalar& a, const Scalar& b);
    bool operator<(const Scalar& o) const { return cmp(*this, o) < 0; }

    // Canonical literal: "0", "3/2", "-i", "1/2+3*i", ...  Round-trips
    // through the expression parser.
    std::string str() const;

private:
    void canonicalize() {
        re_.canonicalize();
        im_.canonicalize();
    }

    mpq_class re_;
    mpq_class im_;
};

// Exact square root in Q(i) when one exists; returns the root with
// nonnegative real part (nonnegative imaginary part on the imaginary axis).
std::optional<Scalar> sqrt_exact(const Scalar& x);

// Binomial coefficient as an exact Scalar.
Scalar binom(unsigned long n, unsigned long k);

// n^e for integer n and nonnegative e, exact.
Scalar int_pow(long base, unsigned long e);

} // namespace oremod
