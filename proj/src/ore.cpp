#include "oremod/ore.hpp"

namespace oremod {

namespace detail {

namespace {

bool needs_parens(const std::string& body) {
    // A chunk multiplies an X-power on the right; anything with top-level
    // + or - must be wrapped.  Printed coefficients only contain those at
    // the top level or inside already-balanced parentheses.
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        const char ch = body[i];
        if (ch == '(') ++depth;
        else if (ch == ')') --depth;
        else if ((ch == '+' || ch == '-') && depth == 0 && i > 0) return true;
    }
    return false;
}

std::string join_coeff(const std::string& body, const std::string& xpow) {
    if (xpow.empty()) return body;
    if (body == "1") return xpow;
    if (body == "-1") return "-" + xpow;
    if (needs_parens(body)) return "(" + body + ")*" + xpow;
    return body + "*" + xpow;
}

} // namespace

std::string ore_coeff_chunk(const LaurentPoly& c, const std::string& xpow) {
    return join_coeff(c.str(), xpow);
}

std::string ore_coeff_chunk(const RatFunc& c, const std::string& xpow) {
    if (c.is_polynomial()) return join_coeff(c.num().str(), xpow);
    if (xpow.empty()) return c.str();
    return c.str() + "*" + xpow; // already fully parenthesized
}

} // namespace detail

OreElem convert_generator(const OreElem& x, Gen target) {
    if (x.gen() == target) return x;
    // theta = t * (d/dt) and d/dt = t^-1 * theta.
    const long shift = (target == Gen::Ddt) ? 1 : -1;
    const OreElem image = OreElem::monomial(target, 1, LaurentPoly::t(shift));
    return subst_generator(x, image);
}

OreElem make_dn(long n, const Scalar& b) {
    OreElem out(Gen::Theta);
    out.add_to(1, LaurentPoly::t(n));
    out.add_to(0, LaurentPoly::monomial(Scalar(n) * b, n));
    return out;
}

OreElem make_wk(long k, const Scalar& b) {
    const Scalar half = Scalar::rational(1, 2);
    OreElem out = (make_dn(k - 1, b) * make_dn(1, b)).scale(-half);
    out += (make_dn(k + 1, b) * make_dn(-1, b)).scale(-half);
    out += make_dn(k, b) * make_dn(0, b);
    return out;
}

RatOreElem to_rat_ore(const OreElem& x) {
    RatOreElem out(x.gen());
    for (const auto& [m, c] : x.coeffs()) out.add_to(m, RatFunc::from_laurent(c));
    return out;
}

} // namespace oremod
