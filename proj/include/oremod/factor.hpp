#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oremod/ore.hpp"
#include "oremod/poly.hpp"

namespace oremod {

// Data certifying that theta^2 - f(t) splits as (theta - g1)(theta + g1)
// over C(t): the distinct nonzero poles a_1..a_n, the Laurent polynomial
// part h of g1, and the assembled g1 = sum -a_i/(t - a_i) + h.  Witnesses
// are only created through make_witness / construct_reducible, so g1 is
// always consistent with (poles, h).
struct FactorWitness {
    std::vector<Scalar> poles;
    LaurentPoly h;
    RatFunc g1;
};

// Builds g1 from its parts; poles must be distinct and nonzero.
FactorWitness make_witness(const LaurentPoly& h, const std::vector<Scalar>& poles);

// The value sum_{j != i} a_j/(a_i - a_j) - 1/2 that h must take at a_i.
Scalar pole_constraint_value(const std::vector<Scalar>& poles, std::size_t i);

// (h(t) - h(a)) / (t - a), an exact Laurent-polynomial division (negative
// exponents handled by factoring out the lowest power of t).
LaurentPoly difference_quotient(const LaurentPoly& h, const Scalar& a);

// From admissible data (h, poles) produces the Laurent polynomial
//     f = h^2 - theta(h) - 2 sum_i a_i (h(t) - h(a_i)) / (t - a_i)
// together with the verified witness for theta^2 - f.  Throws
// ConstraintViolated(i) when h misses its required value at a_i.
std::pair<LaurentPoly, FactorWitness> construct_reducible(const LaurentPoly& h,
                                                          const std::vector<Scalar>& poles);

// Expands (theta - g1)(theta + g1) over C(t) and compares with
// theta^2 - f exactly; on failure the symbolic difference is available.
bool verify_factorization(const LaurentPoly& f, const FactorWitness& w,
                          RatOreElem* difference = nullptr);

// Sufficient irreducibility criteria for second-order operators, plus the
// certified degree-n family below.
struct IrredCertificate {
    enum class Kind { OddTopDegree, OddBottomDegree, AiryType };
    Kind kind = Kind::OddTopDegree;
    long degree = 0; // the odd exponent, or deg f for AiryType
    Poly f;          // AiryType payload
    std::string str() const;
};

// theta^2 - f is irreducible over C(t) whenever f has odd positive top
// degree or odd negative bottom degree; returns the certificate or nothing
// (never a reducibility claim).
std::optional<IrredCertificate> irreducible_by_degree(const LaurentPoly& f);

// Completing the square: theta^2 + 2 f1 theta + f2 is irreducible over
// C(t) exactly when theta^2 - F is, with F = theta(f1) + f1^2 - f2.
LaurentPoly complete_square_reduce(const LaurentPoly& f1, const LaurentPoly& f2);

// The generator shift X -> X + s, an algebra automorphism over C(t).
RatOreElem shift_generator(const RatOreElem& x, const RatFunc& s);

// Constructive transport: a witness for F = complete_square_reduce(f1, f2)
// yields first-order factors of theta^2 + 2 f1 theta + f2.
std::pair<RatOreElem, RatOreElem> transport_factorization(const LaurentPoly& f1,
                                                          const FactorWitness& w);

// The certified family f(d/dt) - t for nonconstant f: irreducible over
// C(t), returned in d/dt form ready for a quotient-module descriptor.
std::pair<IrredCertificate, OreElem> make_airy_type(const Poly& f);

// ---------------------------------------------------------------------------
// Bounded witness search

struct SearchOptions {
    std::vector<Scalar> pole_candidates;
    long deg_lo = 0;
    long deg_hi = 2;
    std::vector<Scalar> coeff_box; // defaults to a small rational box
    std::uint64_t budget = 200000;
};

struct SearchResult {
    std::optional<FactorWitness> witness;
    std::uint64_t candidates_tried = 0;
};

// Enumerates pole subsets and Laurent parts h within the declared bounds.
// Top coefficients are forced degree-by-degree from f where the shape of
//     f = h^2 - theta(h) - 2 sum_i a_i (h - h(a_i))/(t - a_i)
// determines them; coefficients below t^0 range over the box.  Every hit is
// verified before being returned, so the result is sound; absence of a hit
// is only conclusive within the declared bounds.  Candidates are evaluated
// in parallel but the first hit in canonical enumeration order wins.
SearchResult search_witness(const LaurentPoly& f, const SearchOptions& opts);

// One verdict per input line (expressions; '#' starts a comment).
struct BatchRecord {
    std::size_t line = 0;
    std::string input;
    std::string verdict; // REDUCIBLE | IRREDUCIBLE | UNKNOWN | ERROR
    std::string detail;
};

std::vector<BatchRecord> factor_batch(const std::string& text, const SearchOptions& opts);

} // namespace oremod
