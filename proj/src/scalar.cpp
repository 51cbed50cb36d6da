#include "oremod/scalar.hpp"

#include "oremod/errors.hpp"

namespace oremod {

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    mpq_class n = norm2();
    return Scalar(re_ / n, -im_ / n);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar acc(1);
    Scalar base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1ul) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
    int c = ::cmp(a.re_, b.re_);
    if (c != 0) return c;
    return ::cmp(a.im_, b.im_);
}

namespace {

// "q" or "q*i" with sign handled by the caller.
std::string imag_part_str(const mpq_class& im) {
    if (im == 1) return "i";
    return im.get_str() + "*i";
}

} // namespace

std::string Scalar::str() const {
    const int sr = sgn(re_);
    const int si = sgn(im_);
    if (sr == 0 && si == 0) return "0";
    if (si == 0) return re_.get_str();
    if (sr == 0) {
        if (si < 0) return "-" + imag_part_str(mpq_class(-im_));
        return imag_part_str(im_);
    }
    std::string out = re_.get_str();
    if (si > 0)
        out += "+" + imag_part_str(im_);
    else
        out += "-" + imag_part_str(mpq_class(-im_));
    return out;
}

namespace {

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<mpq_class> sqrt_rational(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(sn, sd);
    r.canonicalize();
    return r;
}

} // namespace

std::optional<Scalar> sqrt_exact(const Scalar& x) {
    if (x.is_real()) {
        if (sgn(x.re()) >= 0) {
            auto r = sqrt_rational(x.re());
            if (!r) return std::nullopt;
            return Scalar(*r);
        }
        auto r = sqrt_rational(mpq_class(-x.re()));
        if (!r) return std::nullopt;
        return Scalar(mpq_class(0), *r);
    }
    // (u + vi)^2 = x requires u^2 = (re + |x|)/2 and v = im/(2u).
    auto r = sqrt_rational(x.norm2());
    if (!r) return std::nullopt;
    auto u = sqrt_rational(mpq_class((x.re() + *r) / 2));
    if (!u || sgn(*u) == 0) return std::nullopt;
    mpq_class v = x.im() / (2 * (*u));
    Scalar cand(*u, v);
    if (cand * cand == x) return cand;
    return std::nullopt;
}

Scalar binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(b);
}

Scalar int_pow(long base, unsigned long e) {
    mpz_class b(base), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return Scalar(r);
}

} // namespace oremod
