#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oremod/linalg.hpp"
#include "oremod/modules.hpp"

namespace oremod {

// Outcome of an exhaustive identity check; on failure the first
// counterexample is carried along in serialized form.
struct CheckFailure {
    long m = 0;
    long n = 0;
    std::string vec;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    bool pass = true;
    std::optional<CheckFailure> failure;
    long range = 0;
    int basis_budget = 0;
    std::string what; // which identity was checked
};

using VirAction = std::function<ModVec(long, const ModVec&)>;

// [d_m, d_n] = (n - m) d_{m+n} on the first basis_budget canonical basis
// vectors, all |m|, |n| <= range.  The _with variant takes the action as a
// parameter (test seam for fault injection).
CheckReport bracket_check(const DescPtr& desc, long range, int basis_budget);
CheckReport bracket_check_with(const DescPtr& desc, long range, int basis_budget,
                               const VirAction& act);

// The quadratic word w_k, composed from the twisted action alone, equals
// multiplication by b(b-1) t^k.
CheckReport wk_check(const DescPtr& desc, long k_range, int basis_budget);
CheckReport wk_check_with(const DescPtr& desc, long k_range, int basis_budget,
                          const VirAction& act);

// [d_n, t^m] = m t^{m+n} with trivial central term.
CheckReport hvir_check(const DescPtr& desc, long range, int basis_budget);

// Closed form of the twisted action on Omega against the generic route.
CheckReport eq41_check(const Scalar& lambda, const Scalar& b, long n_range,
                       unsigned long k_max);

// Applies w_k to v purely through the twisted action.
ModVec wk_apply(long k, const ModVec& v);
ModVec wk_apply_with(long k, const ModVec& v, const VirAction& act);

// ---------------------------------------------------------------------------
// Submodule probe

enum class ProbeVerdict { ProperSubspaceWitness, WindowFilled, Inconclusive };
enum class CertificateMode { None, Closed, Coordinate };

const char* probe_verdict_name(ProbeVerdict v);
const char* certificate_mode_name(CertificateMode m);

struct ProbeReport {
    std::vector<BasisSymbol> window;
    std::string seed;
    long gen_range = 0;
    long word_length = 0;
    std::size_t spanned_dim = 0;
    std::size_t window_dim = 0;
    ProbeVerdict verdict = ProbeVerdict::Inconclusive;

    // Certificate payload for PROPER_SUBSPACE_WITNESS.
    CertificateMode mode = CertificateMode::None;
    std::vector<ModVec> span_basis;       // reduced basis of the span
    std::vector<BasisSymbol> missing;     // coordinate mode: avoided symbols
    std::size_t escape_count = 0;         // images leaving the window
    std::size_t saturation_rounds = 0;
};

// Spans words in the probed generators d_n, |n| <= gen_range, applied to
// the seed: breadth-first up to word_length, then saturated inside the
// window until the accumulated span is stable.  Images with support
// outside the window are recorded as escapes and dropped.
//
// PROPER_SUBSPACE_WITNESS is only issued with a machine-checkable
// certificate, in one of two modes:
//   Closed     - no image ever left the window, so the span itself is a
//                d_n-invariant subspace of the module for all probed n.
//   Coordinate - the span is a full coordinate subspace avoiding a symbol
//                set M, every recorded escape also avoids M inside the
//                window, and the family proves that no action image of any
//                basis vector whatsoever carries an M-component (currently
//                the E(0)-avoidance of Omega at b = 1 and the T(0)-avoidance
//                of Natural at b = 1, where the avoided coefficient
//                vanishes identically in the closed action formula).
ProbeReport submodule_probe(const DescPtr& desc, const ModVec& seed, long gen_range,
                            long word_length, const std::vector<BasisSymbol>& window);

// Independent re-verification of an emitted certificate.
bool verify_probe_certificate(const DescPtr& desc, const ProbeReport& report);

// True when every action image of every basis vector of the module has
// zero component on each symbol of M, for the probed generator range.
bool avoids_globally(const ModuleDescriptor& desc, const std::vector<BasisSymbol>& M,
                     long gen_range);

// First `size` canonical basis symbols.
std::vector<BasisSymbol> default_window(const DescPtr& desc, std::size_t size);

// ---------------------------------------------------------------------------
// Invariants and isomorphism

// The scalar c with w_0 . v = c v, computed from the twisted action alone;
// equals b(b-1) on every twisted family.  Throws NotEigenvector when w_0
// does not act as a scalar on v.
Scalar recover_c(const DescPtr& desc, const ModVec& v);
Scalar recover_c_with(const ModVec& v, const VirAction& act);

// (1/c) w_k . v, the multiplication-by-t^k operator recovered from the
// twisted action; requires c != 0 (throws TwistDegenerate otherwise).
ModVec recover_t_action(const DescPtr& desc, long k, const ModVec& v);

struct Fingerprint {
    Scalar c; // the w_0 eigenvalue b(b-1)
    Family family = Family::Natural;
    std::string params;
    std::optional<Scalar> b;
    std::optional<Scalar> lambda_rederived; // omega only, when c != 0
    std::string str() const;
};

Fingerprint fingerprint(const DescPtr& desc);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Unknown };
const char* iso_verdict_name(IsoVerdict v);

enum class TriBool { True, False, Unknown };

// Whether theta maps the underlying K-module onto itself; decidable only
// for some families.
TriBool del_surjective(const ModuleDescriptor& desc);

// Decides whether the two twisted modules are isomorphic, where decidable
// within the implemented families; conservative UNKNOWN otherwise.
IsoVerdict decide_isomorphism(const DescPtr& a, const DescPtr& b);

} // namespace oremod
