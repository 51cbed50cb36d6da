#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "oremod/errors.hpp"
#include "oremod/laurent.hpp"
#include "oremod/ratfunc.hpp"

namespace oremod {

namespace detail {

inline LaurentPoly coeff_derive(const LaurentPoly& c, Gen g) { return c.derive(g); }
inline RatFunc coeff_derive(const RatFunc& c, Gen g) { return c.derive(g); }

inline std::optional<LaurentPoly> coeff_unit_inverse(const LaurentPoly& c) {
    return c.unit_inverse();
}
inline std::optional<RatFunc> coeff_unit_inverse(const RatFunc& c) {
    if (c.is_zero()) return std::nullopt;
    return c.inv();
}

inline LaurentPoly coeff_one(const LaurentPoly*) { return LaurentPoly::one(); }
inline RatFunc coeff_one(const RatFunc*) { return RatFunc::one(); }

std::string ore_coeff_chunk(const LaurentPoly& c, const std::string& xpow);
std::string ore_coeff_chunk(const RatFunc& c, const std::string& xpow);

} // namespace detail

// Skew polynomial in one generator X over a coefficient ring C (Laurent
// polynomials or rational functions in t), held in the left normal form
//     sum_m  c_m(t) * X^m,   m >= 0,
// subject to the commutation rule X*f = f*X + delta(f), where delta is the
// Euler derivation theta = t*d/dt when X stands for theta and the plain
// derivative when X stands for d/dt.  Products are normalized through the
// closed form
//     X^m * f = sum_{j=0..m} C(m,j) * delta^j(f) * X^(m-j),
// which keeps multiplication quadratic in the number of stored terms.
template <class C>
class OrePoly {
public:
    explicit OrePoly(Gen g) : gen_(g) {}

    static OrePoly zero(Gen g) { return OrePoly(g); }
    static OrePoly constant(Gen g, const C& c) { return monomial(g, 0, c); }
    static OrePoly generator(Gen g) {
        return monomial(g, 1, detail::coeff_one(static_cast<const C*>(nullptr)));
    }
    static OrePoly monomial(Gen g, unsigned long deg, const C& c) {
        OrePoly out(g);
        if (!c.is_zero()) out.coeffs_.emplace(deg, c);
        return out;
    }

    Gen gen() const { return gen_; }
    const std::map<unsigned long, C>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    long deg() const { // -1 for zero
        return coeffs_.empty() ? -1 : static_cast<long>(coeffs_.rbegin()->first);
    }

    const C& leading_coeff() const {
        if (is_zero()) throw Error("leading coefficient of zero operator");
        return coeffs_.rbegin()->second;
    }

    C coeff(unsigned long m) const {
        auto it = coeffs_.find(m);
        return it == coeffs_.end() ? C() : it->second;
    }

    void add_to(unsigned long m, const C& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    OrePoly operator-() const {
        OrePoly out(gen_);
        for (const auto& [m, c] : coeffs_) out.coeffs_.emplace(m, -c);
        return out;
    }

    OrePoly operator+(const OrePoly& o) const {
        check_gen(o);
        OrePoly out = *this;
        for (const auto& [m, c] : o.coeffs_) out.add_to(m, c);
        return out;
    }

    OrePoly operator-(const OrePoly& o) const { return *this + (-o); }

    OrePoly operator*(const OrePoly& o) const {
        check_gen(o);
        OrePoly out(gen_);
        for (const auto& [m, am] : coeffs_) {
            for (const auto& [n, bn] : o.coeffs_) {
                C d = bn; // delta^j(bn), starting at j = 0
                for (unsigned long j = 0; j <= m; ++j) {
                    if (j > 0) {
                        d = detail::coeff_derive(d, gen_);
                        if (d.is_zero()) break;
                    }
                    C term = am * d;
                    const Scalar bc = binom(m, j);
                    if (!bc.is_one()) term = term.scale(bc);
                    out.add_to(m - j + n, term);
                }
            }
        }
        return out;
    }

    OrePoly& operator+=(const OrePoly& o) { return *this = *this + o; }
    OrePoly& operator-=(const OrePoly& o) { return *this = *this - o; }
    OrePoly& operator*=(const OrePoly& o) { return *this = *this * o; }

    OrePoly scale(const Scalar& s) const {
        OrePoly out(gen_);
        if (s.is_zero()) return out;
        for (const auto& [m, c] : coeffs_) out.coeffs_.emplace(m, c.scale(s));
        return out;
    }

    OrePoly pow(unsigned long e) const {
        OrePoly acc = constant(gen_, detail::coeff_one(static_cast<const C*>(nullptr)));
        OrePoly base = *this;
        while (e > 0) {
            if (e & 1ul) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const OrePoly& o) const { return gen_ == o.gen_ && coeffs_ == o.coeffs_; }
    bool operator!=(const OrePoly& o) const { return !(*this == o); }

    // Canonical text, descending X-degrees: "(t^2-1)*Th^2 + t*Th + 1".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            std::string xpow;
            if (it->first >= 1) {
                xpow = gen_token(gen_);
                if (it->first > 1) xpow += "^" + std::to_string(it->first);
            }
            std::string chunk = detail::ore_coeff_chunk(it->second, xpow);
            if (first) {
                out << chunk;
                first = false;
            } else if (!chunk.empty() && chunk[0] == '-') {
                out << " - " << chunk.substr(1);
            } else {
                out << " + " << chunk;
            }
        }
        return out.str();
    }

private:
    void check_gen(const OrePoly& o) const {
        if (gen_ != o.gen_)
            throw GeneratorMismatch("mixing Th- and Dt-form operators without conversion");
    }

    Gen gen_;
    std::map<unsigned long, C> coeffs_; // X-degree -> nonzero coefficient
};

using OreElem = OrePoly<LaurentPoly>;
using RatOreElem = OrePoly<RatFunc>;

template <class C>
OrePoly<C> bracket(const OrePoly<C>& a, const OrePoly<C>& b) {
    return a * b - b * a;
}

// Right division with remainder: a = q*beta + r, deg r < deg beta.  Over
// Laurent coefficients the leading coefficient of beta must be a unit
// (a single monomial c*t^k); over rational-function coefficients any
// nonzero leading coefficient divides.
template <class C>
std::pair<OrePoly<C>, OrePoly<C>> right_divide(const OrePoly<C>& a, const OrePoly<C>& beta) {
    if (beta.is_zero()) throw DivisionByZero("right division by the zero operator");
    if (a.gen() != beta.gen())
        throw GeneratorMismatch("division operands use different generators");
    auto lc_inv = detail::coeff_unit_inverse(beta.leading_coeff());
    if (!lc_inv) throw NonUnitLeadingCoeff();
    OrePoly<C> q(a.gen());
    OrePoly<C> r = a;
    while (!r.is_zero() && r.deg() >= beta.deg()) {
        const unsigned long shift = static_cast<unsigned long>(r.deg() - beta.deg());
        const C qc = r.leading_coeff() * (*lc_inv);
        q.add_to(shift, qc);
        r -= OrePoly<C>::monomial(a.gen(), shift, qc) * beta;
    }
    return {q, r};
}

// Evaluate x with its generator replaced by g (coefficients unchanged):
// sum c_m * g^m computed in g's algebra.  With g an algebra element whose
// commutator with t matches the original generator this realizes algebra
// maps such as generator changes and shifts X -> X + f.
template <class C>
OrePoly<C> subst_generator(const OrePoly<C>& x, const OrePoly<C>& g) {
    OrePoly<C> out(g.gen());
    OrePoly<C> gp = OrePoly<C>::constant(g.gen(), detail::coeff_one(static_cast<const C*>(nullptr)));
    unsigned long cur = 0;
    for (const auto& [m, c] : x.coeffs()) {
        while (cur < m) {
            gp *= g;
            ++cur;
        }
        out += OrePoly<C>::constant(g.gen(), c) * gp;
    }
    return out;
}

// Rewrites between the two normal forms: theta = t*(d/dt) and
// d/dt = t^-1*theta.  Round trips are exact and products are preserved.
OreElem convert_generator(const OreElem& x, Gen target);

// Twisted generator t^n*theta + n*b*t^n, in theta form.
OreElem make_dn(long n, const Scalar& b);

// The quadratic word -1/2*d_{k-1}*d_1 - 1/2*d_{k+1}*d_{-1} + d_k*d_0,
// assembled by multiplication from make_dn.  As an operator identity it
// collapses to the multiplication operator b*(b-1)*t^k.
OreElem make_wk(long k, const Scalar& b);

// Coefficient-ring widening.
RatOreElem to_rat_ore(const OreElem& x);

} // namespace oremod
