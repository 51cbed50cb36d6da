#include "oremod/modules.hpp"

#include <sstream>

#include "oremod/rng.hpp"

namespace oremod {

const char* family_name(Family f) {
    switch (f) {
        case Family::Omega: return "omega";
        case Family::KQuotient: return "kquotient";
        case Family::Fraction: return "fraction";
        case Family::Natural: return "natural";
        case Family::VPrime00: return "vprime00";
    }
    return "?";
}

std::string BasisSymbol::str() const {
    switch (kind) {
        case Kind::E: return "E(" + std::to_string(a) + ")";
        case Kind::B: return "B(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case Kind::T: return "T(" + std::to_string(a) + ")";
        case Kind::L: return "L(" + std::to_string(a) + ")";
        case Kind::P: return "P(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// ModuleDescriptor

DescPtr ModuleDescriptor::omega(const Scalar& lambda, const Scalar& b) {
    if (lambda.is_zero()) throw InvalidDescriptor("omega requires lambda != 0");
    auto d = std::shared_ptr<ModuleDescriptor>(new ModuleDescriptor());
    d->family_ = Family::Omega;
    d->lambda_ = lambda;
    d->twist_ = b;
    return d;
}

DescPtr ModuleDescriptor::kquotient(const OreElem& beta, const Scalar& b) {
    if (beta.deg() < 1) throw InvalidDescriptor("kquotient requires deg beta >= 1");
    if (!beta.leading_coeff().is_monomial())
        throw InvalidDescriptor("kquotient requires a unit leading coefficient (c*t^k)");
    auto d = std::shared_ptr<ModuleDescriptor>(new ModuleDescriptor());
    d->family_ = Family::KQuotient;
    d->beta_ = beta;
    d->twist_ = b;
    return d;
}

DescPtr ModuleDescriptor::fraction(std::vector<Scalar> poles, std::vector<Scalar> alphas,
                                   const Scalar& b) {
    if (poles.size() != alphas.size())
        throw InvalidDescriptor("fraction requires matching pole and alpha lists");
    for (std::size_t i = 0; i < poles.size(); ++i)
        for (std::size_t j = i + 1; j < poles.size(); ++j)
            if (poles[i] == poles[j]) throw InvalidDescriptor("fraction poles must be distinct");
    auto d = std::shared_ptr<ModuleDescriptor>(new ModuleDescriptor());
    d->family_ = Family::Fraction;
    d->poles_ = std::move(poles);
    d->alphas_ = std::move(alphas);
    d->twist_ = b;
    for (std::size_t i = 0; i < d->poles_.size(); ++i)
        if (!d->poles_[i].is_zero()) d->nonzero_poles_.push_back(i + 1);
    return d;
}

DescPtr ModuleDescriptor::natural(const Scalar& b) {
    auto d = std::shared_ptr<ModuleDescriptor>(new ModuleDescriptor());
    d->family_ = Family::Natural;
    d->twist_ = b;
    return d;
}

DescPtr ModuleDescriptor::vprime00() {
    auto d = std::shared_ptr<ModuleDescriptor>(new ModuleDescriptor());
    d->family_ = Family::VPrime00;
    return d;
}

const Scalar& ModuleDescriptor::twist() const {
    if (!twist_) throw Error("module family carries no twist parameter");
    return *twist_;
}

unsigned long ModuleDescriptor::quotient_rank() const {
    switch (family_) {
        case Family::KQuotient: return static_cast<unsigned long>(beta_.deg());
        case Family::Natural: return 1;
        default: throw Error("quotient_rank undefined for this family");
    }
}

bool ModuleDescriptor::symbol_valid(const BasisSymbol& s) const {
    using K = BasisSymbol::Kind;
    switch (family_) {
        case Family::Omega: return s.kind == K::E && s.a >= 0 && s.b == 0;
        case Family::KQuotient:
            return s.kind == K::B && s.b >= 0 &&
                   s.b < static_cast<long>(quotient_rank());
        case Family::Natural: return s.kind == K::T && s.b == 0;
        case Family::VPrime00: return s.kind == K::T && s.a != 0 && s.b == 0;
        case Family::Fraction:
            if (s.kind == K::L) return s.b == 0;
            return s.kind == K::P && s.a >= 1 &&
                   s.a <= static_cast<long>(nonzero_poles_.size()) && s.b >= 1;
    }
    return false;
}

namespace {

// 0, 1, -1, 2, -2, ...
long spiral(std::size_t i) {
    if (i == 0) return 0;
    const long half = static_cast<long>((i + 1) / 2);
    return (i % 2 == 1) ? half : -half;
}

} // namespace

BasisSymbol ModuleDescriptor::canonical_symbol(std::size_t index) const {
    switch (family_) {
        case Family::Omega: return sym_E(static_cast<long>(index));
        case Family::Natural: return sym_T(spiral(index));
        case Family::VPrime00: return sym_T(spiral(index + 1));
        case Family::KQuotient: {
            const unsigned long d = quotient_rank();
            return sym_B(spiral(index / d), static_cast<long>(index % d));
        }
        case Family::Fraction: {
            // L(0), then per j >= 1: L(j), L(-j), P(1,j), ..., P(n,j).
            if (index == 0) return sym_L(0);
            const std::size_t n = nonzero_poles_.size();
            const std::size_t block = 2 + n;
            const std::size_t i = index - 1;
            const long j = static_cast<long>(i / block) + 1;
            const std::size_t r = i % block;
            if (r == 0) return sym_L(j);
            if (r == 1) return sym_L(-j);
            return sym_P(static_cast<long>(r - 1), j);
        }
    }
    throw Error("unreachable");
}

bool ModuleDescriptor::operator==(const ModuleDescriptor& o) const {
    if (family_ != o.family_ || twist_.has_value() != o.twist_.has_value()) return false;
    if (twist_ && *twist_ != *o.twist_) return false;
    switch (family_) {
        case Family::Omega: return lambda_ == o.lambda_;
        case Family::KQuotient: return beta_ == o.beta_;
        case Family::Fraction: return poles_ == o.poles_ && alphas_ == o.alphas_;
        default: return true;
    }
}

std::string ModuleDescriptor::params_str() const {
    std::ostringstream out;
    switch (family_) {
        case Family::Omega: out << "lambda=" << lambda_.str(); break;
        case Family::KQuotient: out << "beta=" << beta_.str(); break;
        case Family::Fraction: {
            out << "poles=";
            for (std::size_t i = 0; i < poles_.size(); ++i)
                out << (i ? "," : "") << poles_[i].str();
            out << "; alphas=";
            for (std::size_t i = 0; i < alphas_.size(); ++i)
                out << (i ? "," : "") << alphas_[i].str();
            break;
        }
        default: break;
    }
    return out.str();
}

std::string ModuleDescriptor::str() const {
    std::ostringstream out;
    out << family_name(family_) << "(";
    std::string p = params_str();
    out << p;
    if (twist_) out << (p.empty() ? "" : "; ") << "b=" << twist_->str();
    out << ")";
    return out.str();
}

// ---------------------------------------------------------------------------
// ModVec

Scalar ModVec::coeff(const BasisSymbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void ModVec::add_term(const BasisSymbol& s, const Scalar& c) {
    if (c.is_zero()) return;
    if (!owner_->symbol_valid(s))
        throw Error("basis symbol " + s.str() + " is not legal for " + owner_->str());
    auto [it, inserted] = terms_.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ModVec ModVec::operator-() const {
    ModVec out(owner_);
    for (const auto& [s, c] : terms_) out.terms_.emplace(s, -c);
    return out;
}

namespace {

void require_same_owner(const ModVec& a, const ModVec& b) {
    if (a.owner() == b.owner()) return;
    if (*a.owner() == *b.owner()) return;
    throw Error("vectors belong to different modules");
}

} // namespace

ModVec ModVec::operator+(const ModVec& o) const {
    require_same_owner(*this, o);
    ModVec out = *this;
    for (const auto& [s, c] : o.terms_) out.add_term(s, c);
    return out;
}

ModVec ModVec::operator-(const ModVec& o) const { return *this + (-o); }

ModVec ModVec::scale(const Scalar& c) const {
    ModVec out(owner_);
    if (c.is_zero()) return out;
    for (const auto& [s, k] : terms_) out.terms_.emplace(s, k * c);
    return out;
}

bool ModVec::operator==(const ModVec& o) const {
    if (owner_ != o.owner_ && !(*owner_ == *o.owner_)) return false;
    return terms_ == o.terms_;
}

std::string ModVec::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        std::string coeff;
        bool neg = false;
        if (c.is_one()) {
            coeff = "";
        } else if ((-c).is_one()) {
            coeff = "";
            neg = true;
        } else if (c.is_real()) {
            neg = sgn(c.re()) < 0;
            coeff = (neg ? (-c) : c).str() + "*";
        } else if (sgn(c.re()) == 0) {
            neg = sgn(c.im()) < 0;
            Scalar mag = neg ? -c : c;
            coeff = (mag == Scalar::i() ? std::string("i") : mag.str()) + "*";
        } else {
            coeff = "(" + c.str() + ")*";
        }
        const std::string body = coeff + s.str();
        if (first) {
            if (neg) out << "-";
            out << body;
            first = false;
        } else {
            out << (neg ? " - " : " + ") << body;
        }
    }
    return out.str();
}

ModVec basis_vector(const DescPtr& desc, const BasisSymbol& s) {
    ModVec v(desc);
    v.add_term(s, Scalar(1));
    return v;
}

// ---------------------------------------------------------------------------
// Fraction-family helpers

RatFunc atom_value(const ModuleDescriptor& desc, const BasisSymbol& s) {
    using K = BasisSymbol::Kind;
    if (s.kind == K::L) return RatFunc::from_laurent(LaurentPoly::t(s.a));
    if (s.kind == K::P) {
        const Scalar& pole = desc.poles()[desc.nonzero_pole_indices()[s.a - 1] - 1];
        return RatFunc(Poly::one(), Poly::linear(pole).pow(static_cast<unsigned long>(s.b)));
    }
    throw Error("atom_value expects a fraction symbol");
}

namespace {

RatFunc fraction_value(const ModVec& v) {
    RatFunc acc;
    for (const auto& [s, c] : v.terms()) acc += atom_value(*v.owner(), s).scale(c);
    return acc;
}

RatFunc fraction_alpha_sum(const ModuleDescriptor& desc) {
    RatFunc acc;
    for (std::size_t i = 0; i < desc.poles().size(); ++i)
        acc += RatFunc(Poly::constant(desc.alphas()[i]), Poly::linear(desc.poles()[i]));
    return acc;
}

// The module action of d/dt on the localized ring.
RatFunc fraction_module_ddt(const ModuleDescriptor& desc, const RatFunc& f) {
    return f.derive(Gen::Ddt) + f * fraction_alpha_sum(desc);
}

// Exact partial-fraction decomposition over the allowed linear factors:
// t and (t - a_i) for the stored nonzero poles.
ModVec fraction_from_ratfunc(const DescPtr& desc, const RatFunc& r) {
    ModVec out(desc);
    if (r.is_zero()) return out;

    struct Factor {
        Scalar pole;
        long atom_index; // 0 for the pole at the origin, else P-index
        std::size_t mult = 0;
    };
    std::vector<Factor> factors;
    factors.push_back({Scalar(0), 0, 0});
    for (std::size_t k = 0; k < desc->nonzero_pole_indices().size(); ++k)
        factors.push_back(
            {desc->poles()[desc->nonzero_pole_indices()[k] - 1], static_cast<long>(k + 1), 0});

    Poly den = r.den();
    for (auto& f : factors) {
        const Poly lin = Poly::linear(f.pole);
        for (;;) {
            auto [q, rem] = den.divmod(lin);
            if (!rem.is_zero()) break;
            den = q;
            ++f.mult;
        }
    }
    if (den.deg() != 0)
        throw Error("fraction denominator leaves the localized ring: " + r.str());

    // Polynomial part.
    auto [quot, rem] = r.num().divmod(r.den());
    for (int k = 0; k <= quot.deg(); ++k)
        out.add_term(sym_L(k), quot.coeff(static_cast<std::size_t>(k)));

    // Proper part, one linear factor peeled per step.
    Poly curR = rem;
    Poly curden = r.den();
    for (auto& f : factors) {
        const Poly lin = Poly::linear(f.pole);
        while (f.mult > 0) {
            Poly others = curden;
            for (std::size_t e = 0; e < f.mult; ++e) others = others.divmod(lin).first;
            const Scalar c = curR.eval(f.pole) / others.eval(f.pole);
            if (!c.is_zero()) {
                if (f.atom_index == 0)
                    out.add_term(sym_L(-static_cast<long>(f.mult)), c);
                else
                    out.add_term(sym_P(f.atom_index, static_cast<long>(f.mult)), c);
            }
            auto [q, r2] = (curR - others.scale(c)).divmod(lin);
            if (!r2.is_zero()) throw Error("partial fraction step not exact");
            curR = q;
            curden = curden.divmod(lin).first;
            --f.mult;
        }
    }
    if (!curR.is_zero()) throw Error("partial fraction residue nonzero");
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Actions

namespace {

ModVec omega_k_act(const OreElem& x, const ModVec& v) {
    const DescPtr& desc = v.owner();
    const Scalar& lambda = desc->lambda();
    ModVec out(desc);
    for (const auto& [m, cm] : x.coeffs()) {
        for (const auto& [e, gamma] : cm.terms()) {
            const Scalar lam = lambda.pow(e);
            for (const auto& [s, c] : v.terms()) {
                // gamma * t^e * theta^m on theta^k: first theta^m, then
                // t^e . theta^j = lambda^e (theta - e)^j.
                const unsigned long j = static_cast<unsigned long>(s.a) + m;
                const Scalar base = c * gamma * lam;
                for (unsigned long sdeg = 0; sdeg <= j; ++sdeg) {
                    const Scalar coeff =
                        base * binom(j, sdeg) * int_pow(-e, j - sdeg);
                    out.add_term(sym_E(static_cast<long>(sdeg)), coeff);
                }
            }
        }
    }
    return out;
}

ModVec natural_k_act(const OreElem& x, const ModVec& v) {
    ModVec out(v.owner());
    for (const auto& [m, cm] : x.coeffs())
        for (const auto& [e, gamma] : cm.terms())
            for (const auto& [s, c] : v.terms())
                out.add_term(sym_T(s.a + e), c * gamma * int_pow(s.a, m));
    return out;
}

ModVec kquotient_k_act(const OreElem& x, const ModVec& v) {
    const DescPtr& desc = v.owner();
    const Gen g = desc->beta().gen();
    OreElem rep(g);
    for (const auto& [s, c] : v.terms())
        rep.add_to(static_cast<unsigned long>(s.b), LaurentPoly::monomial(c, s.a));
    const OreElem prod = x * rep;
    const auto [q, r] = right_divide(prod, desc->beta());
    ModVec out(desc);
    for (const auto& [m, cm] : r.coeffs())
        for (const auto& [e, c] : cm.terms()) out.add_term(sym_B(e, static_cast<long>(m)), c);
    return out;
}

ModVec fraction_k_act(const OreElem& x, const ModVec& v) {
    const DescPtr& desc = v.owner();
    const RatFunc f = fraction_value(v);
    RatFunc acc;
    RatFunc cur = f; // theta^m applied through the module action
    unsigned long cur_m = 0;
    const RatFunc t = RatFunc::t();
    for (const auto& [m, cm] : x.coeffs()) {
        while (cur_m < m) {
            cur = t * fraction_module_ddt(*desc, cur);
            ++cur_m;
        }
        acc += RatFunc::from_laurent(cm) * cur;
    }
    return fraction_from_ratfunc(desc, acc);
}

} // namespace

ModVec k_act(const OreElem& x, const ModVec& v) {
    switch (v.owner()->family()) {
        case Family::Omega: return omega_k_act(convert_generator(x, Gen::Theta), v);
        case Family::Natural: return natural_k_act(convert_generator(x, Gen::Theta), v);
        case Family::KQuotient:
            return kquotient_k_act(convert_generator(x, v.owner()->beta().gen()), v);
        case Family::Fraction: return fraction_k_act(convert_generator(x, Gen::Theta), v);
        case Family::VPrime00: throw Error("vprime00 carries no K-action");
    }
    throw Error("unreachable");
}

ModVec vir_act(long n, const ModVec& v) {
    if (v.owner()->family() == Family::VPrime00) return vprime_act(n, v);
    return k_act(make_dn(n, v.owner()->twist()), v);
}

ModVec t_act(long m, const ModVec& v) {
    if (!v.owner()->has_t_action()) throw Error("vprime00 carries no t-action");
    return k_act(OreElem::constant(Gen::Theta, LaurentPoly::t(m)), v);
}

ModVec omega_closed_form(const DescPtr& desc, long n, unsigned long k) {
    if (desc->family() != Family::Omega) throw Error("omega_closed_form needs an omega module");
    const Scalar shift = Scalar(n) * (desc->twist() - Scalar(1));
    // (theta - n)^k, then multiply by (theta + n(b-1)), all in C[theta].
    std::vector<Scalar> p(k + 1);
    for (unsigned long s = 0; s <= k; ++s) p[s] = binom(k, s) * int_pow(-n, k - s);
    std::vector<Scalar> q(k + 2, Scalar(0));
    for (unsigned long s = 0; s <= k; ++s) {
        q[s + 1] += p[s];
        q[s] += shift * p[s];
    }
    const Scalar lam = desc->lambda().pow(n);
    ModVec out(desc);
    for (unsigned long s = 0; s < q.size(); ++s)
        out.add_term(sym_E(static_cast<long>(s)), lam * q[s]);
    return out;
}

ModVec fraction_act(long n, const ModVec& v) {
    const DescPtr& desc = v.owner();
    if (desc->family() != Family::Fraction) throw Error("fraction_act needs a fraction module");
    const RatFunc f = fraction_value(v);
    const RatFunc tn1 = RatFunc::from_laurent(LaurentPoly::t(n + 1));
    const RatFunc tn = RatFunc::from_laurent(LaurentPoly::t(n));
    RatFunc res = tn1 * fraction_module_ddt(*desc, f) + tn.scale(Scalar(n) * desc->twist()) * f;
    return fraction_from_ratfunc(desc, res);
}

ModVec vprime_act(long k, const ModVec& v) {
    if (v.owner()->family() != Family::VPrime00) throw Error("vprime_act needs vprime00");
    ModVec out(v.owner());
    for (const auto& [s, c] : v.terms()) {
        if (s.a + k == 0) continue; // constants are identified with zero
        out.add_term(sym_T(s.a + k), c * Scalar(s.a));
    }
    return out;
}

ModVec derivative_submodule_map(const ModVec& v) {
    const DescPtr& desc = v.owner();
    if (desc->family() != Family::Natural || desc->twist() != Scalar(1))
        throw Error("map is defined on the natural module with twist b = 1");
    if (!v.coeff(sym_T(0)).is_zero())
        throw NotInSubmodule("vector has a T(0) component outside the derivative image");
    ModVec out(ModuleDescriptor::vprime00());
    for (const auto& [s, c] : v.terms()) out.add_term(sym_T(s.a), c / Scalar(s.a));
    return out;
}

ModVec random_vector(const DescPtr& desc, Rng& rng, int max_terms) {
    for (;;) {
        ModVec v(desc);
        const int nterms = static_cast<int>(rng.range(1, max_terms));
        for (int i = 0; i < nterms; ++i) {
            const std::size_t idx = static_cast<std::size_t>(rng.range(0, 5));
            v.add_term(desc->canonical_symbol(idx), rng.nonzero_gaussian(4, 3));
        }
        if (!v.is_zero()) return v;
    }
}

} // namespace oremod
