#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oremod/ore.hpp"

namespace oremod {

// The implemented module families over the operator algebra
// K = C[t,t^-1][theta] and, after twisting d_n -> t^n*theta + n*b*t^n,
// over the (centerless) Virasoro algebra:
//
//   Omega     - C[theta] with t acting through a fixed eigenvalue lambda:
//               t^i . theta^k = lambda^i (theta - i)^k.
//   KQuotient - K / K*beta for a monic-type beta with unit leading
//               coefficient; the action is multiplication followed by right
//               division by beta.
//   Fraction  - the localized ring C[t, 1/t, 1/(t-a_i)] with
//               (d/dt) . f = f' + f * sum alpha_i/(t-a_i).
//   Natural   - C[t,t^-1] itself, theta acting as the Euler derivation.
//   VPrime00  - the quotient of Natural by the constants, a Virasoro-only
//               module with d_k . t^n = n t^(k+n); it carries no K-action
//               and no twist parameter.
enum class Family { Omega, KQuotient, Fraction, Natural, VPrime00 };

const char* family_name(Family f);

// Basis symbols across all families.
//   E(k)   : theta^k in Omega, k >= 0
//   B(k,m) : t^k X^m in KQuotient, 0 <= m < deg beta
//   T(k)   : t^k in Natural (any k) and VPrime00 (k != 0)
//   L(k)   : t^k atom of Fraction, any k
//   P(i,j) : 1/(t - a_i)^j atom of Fraction, i indexing the nonzero poles
//            (1-based, descriptor order), j >= 1
struct BasisSymbol {
    enum class Kind { E, B, T, L, P };
    Kind kind = Kind::E;
    long a = 0;
    long b = 0;

    bool operator==(const BasisSymbol& o) const {
        return kind == o.kind && a == o.a && b == o.b;
    }
    bool operator<(const BasisSymbol& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (a != o.a) return a < o.a;
        return b < o.b;
    }

    std::string str() const;
};

inline BasisSymbol sym_E(long k) { return {BasisSymbol::Kind::E, k, 0}; }
inline BasisSymbol sym_B(long k, long m) { return {BasisSymbol::Kind::B, k, m}; }
inline BasisSymbol sym_T(long k) { return {BasisSymbol::Kind::T, k, 0}; }
inline BasisSymbol sym_L(long k) { return {BasisSymbol::Kind::L, k, 0}; }
inline BasisSymbol sym_P(long i, long j) { return {BasisSymbol::Kind::P, i, j}; }

class ModuleDescriptor;
using DescPtr = std::shared_ptr<const ModuleDescriptor>;

// Family plus parameters; validated at construction and immutable after.
class ModuleDescriptor {
public:
    static DescPtr omega(const Scalar& lambda, const Scalar& b);
    static DescPtr kquotient(const OreElem& beta, const Scalar& b);
    static DescPtr fraction(std::vector<Scalar> poles, std::vector<Scalar> alphas,
                            const Scalar& b);
    static DescPtr natural(const Scalar& b);
    static DescPtr vprime00();

    Family family() const { return family_; }
    bool has_twist() const { return twist_.has_value(); }
    bool has_t_action() const { return family_ != Family::VPrime00; }
    const Scalar& twist() const; // throws for VPrime00
    const Scalar& lambda() const { return lambda_; }
    const OreElem& beta() const { return beta_; }
    const std::vector<Scalar>& poles() const { return poles_; }
    const std::vector<Scalar>& alphas() const { return alphas_; }

    // Free rank over C[t,t^-1] for the quotient-style families.
    unsigned long quotient_rank() const;

    // Indices (1-based into poles()) of the nonzero poles, in order.
    const std::vector<std::size_t>& nonzero_pole_indices() const { return nonzero_poles_; }

    bool symbol_valid(const BasisSymbol& s) const;

    // Canonical i-th basis symbol: E(0), E(1), ... for Omega; a spiral
    // 0, 1, -1, 2, -2, ... through t-degrees elsewhere.
    BasisSymbol canonical_symbol(std::size_t index) const;

    bool operator==(const ModuleDescriptor& o) const;

    std::string params_str() const; // canonical one-line parameter list
    std::string str() const;        // family(params) with twist

private:
    ModuleDescriptor() : beta_(Gen::Theta) {}

    Family family_ = Family::Natural;
    std::optional<Scalar> twist_;
    Scalar lambda_;                     // Omega
    OreElem beta_;                      // KQuotient
    std::vector<Scalar> poles_;         // Fraction
    std::vector<Scalar> alphas_;        // Fraction
    std::vector<std::size_t> nonzero_poles_;
};

// Finite linear combination of basis symbols of one module.  Canonical:
// no zero coefficients, symbols validated against the owner.
class ModVec {
public:
    explicit ModVec(DescPtr owner) : owner_(std::move(owner)) {}

    const DescPtr& owner() const { return owner_; }
    const std::map<BasisSymbol, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const BasisSymbol& s) const;

    void add_term(const BasisSymbol& s, const Scalar& c);

    ModVec operator-() const;
    ModVec operator+(const ModVec& o) const;
    ModVec operator-(const ModVec& o) const;
    ModVec scale(const Scalar& c) const;
    ModVec& operator+=(const ModVec& o) { return *this = *this + o; }
    ModVec& operator-=(const ModVec& o) { return *this = *this - o; }

    bool operator==(const ModVec& o) const;
    bool operator!=(const ModVec& o) const { return !(*this == o); }

    // Canonical text, ascending symbol order: "2*E(0) - E(1)".
    std::string str() const;

private:
    DescPtr owner_;
    std::map<BasisSymbol, Scalar> terms_;
};

ModVec basis_vector(const DescPtr& desc, const BasisSymbol& s);

// The rational function a Fraction basis symbol stands for.
RatFunc atom_value(const ModuleDescriptor& desc, const BasisSymbol& s);

// Action of a normal-form operator; generator conversion is applied
// automatically.  VPrime00 carries no K-action.
ModVec k_act(const OreElem& x, const ModVec& v);

// Twisted Virasoro action d_n = t^n*theta + n*b*t^n (all central elements
// act as zero).  For VPrime00 this is d_k . t^n = n t^(k+n) directly.
ModVec vir_act(long n, const ModVec& v);

// Multiplication by t^m.
ModVec t_act(long m, const ModVec& v);

// The closed form of the twisted action on Omega:
// d_n . theta^k = lambda^n (theta + n(b-1)) (theta - n)^k, expanded in the
// E-basis.  Cross-checks vir_act.
ModVec omega_closed_form(const DescPtr& desc, long n, unsigned long k);

// Twisted action on Fraction computed directly in the localized ring:
// d_n . v = t^(n+1) (v' + v * sum alpha_i/(t-a_i)) + n*b*t^n*v.
// Cross-checks the k_act route.
ModVec fraction_act(long n, const ModVec& v);

// Direct action on VPrime00.
ModVec vprime_act(long k, const ModVec& v);

// The intertwining map from the derivative-image submodule of Natural
// twisted by b = 1 onto VPrime00: the span of T(n), n != 0, maps by
// T(n) -> (1/n) T(n).  Inputs with a T(0) component are rejected.
ModVec derivative_submodule_map(const ModVec& v);

// Seeded sample vector supported on the first few canonical symbols.
class Rng;
ModVec random_vector(const DescPtr& desc, Rng& rng, int max_terms = 3);

} // namespace oremod
