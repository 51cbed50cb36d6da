#include "oremod/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "oremod/parallel.hpp"

namespace oremod {

namespace {

VirAction default_action() {
    return [](long n, const ModVec& v) { return vir_act(n, v); };
}

} // namespace

CheckReport bracket_check_with(const DescPtr& desc, long range, int basis_budget,
                               const VirAction& act) {
    CheckReport rep;
    rep.range = range;
    rep.basis_budget = basis_budget;
    rep.what = "bracket";
    for (long m = -range; m <= range; ++m) {
        for (long n = -range; n <= range; ++n) {
            for (int i = 0; i < basis_budget; ++i) {
                const ModVec v =
                    basis_vector(desc, desc->canonical_symbol(static_cast<std::size_t>(i)));
                const ModVec lhs = act(m, act(n, v)) - act(n, act(m, v));
                const ModVec rhs = act(m + n, v).scale(Scalar(n - m));
                if (lhs != rhs) {
                    rep.pass = false;
                    rep.failure = CheckFailure{m, n, v.str(), lhs.str(), rhs.str()};
                    return rep;
                }
            }
        }
    }
    return rep;
}

CheckReport bracket_check(const DescPtr& desc, long range, int basis_budget) {
    return bracket_check_with(desc, range, basis_budget, default_action());
}

ModVec wk_apply_with(long k, const ModVec& v, const VirAction& act) {
    const Scalar half = Scalar::rational(1, 2);
    ModVec out = act(k - 1, act(1, v)).scale(-half);
    out += act(k + 1, act(-1, v)).scale(-half);
    out += act(k, act(0, v));
    return out;
}

ModVec wk_apply(long k, const ModVec& v) { return wk_apply_with(k, v, default_action()); }

CheckReport wk_check_with(const DescPtr& desc, long k_range, int basis_budget,
                          const VirAction& act) {
    CheckReport rep;
    rep.range = k_range;
    rep.basis_budget = basis_budget;
    rep.what = "wk";
    const Scalar b = desc->twist();
    const Scalar c = b * (b - Scalar(1));
    for (long k = -k_range; k <= k_range; ++k) {
        for (int i = 0; i < basis_budget; ++i) {
            const ModVec v =
                basis_vector(desc, desc->canonical_symbol(static_cast<std::size_t>(i)));
            const ModVec lhs = wk_apply_with(k, v, act);
            const ModVec rhs = t_act(k, v).scale(c);
            if (lhs != rhs) {
                rep.pass = false;
                rep.failure = CheckFailure{k, 0, v.str(), lhs.str(), rhs.str()};
                return rep;
            }
        }
    }
    return rep;
}

CheckReport wk_check(const DescPtr& desc, long k_range, int basis_budget) {
    return wk_check_with(desc, k_range, basis_budget, default_action());
}

CheckReport hvir_check(const DescPtr& desc, long range, int basis_budget) {
    CheckReport rep;
    rep.range = range;
    rep.basis_budget = basis_budget;
    rep.what = "hvir";
    for (long n = -range; n <= range; ++n) {
        for (long m = -range; m <= range; ++m) {
            for (int i = 0; i < basis_budget; ++i) {
                const ModVec v =
                    basis_vector(desc, desc->canonical_symbol(static_cast<std::size_t>(i)));
                const ModVec lhs = vir_act(n, t_act(m, v)) - t_act(m, vir_act(n, v));
                const ModVec rhs = t_act(m + n, v).scale(Scalar(m));
                if (lhs != rhs) {
                    rep.pass = false;
                    rep.failure = CheckFailure{n, m, v.str(), lhs.str(), rhs.str()};
                    return rep;
                }
            }
        }
    }
    return rep;
}

CheckReport eq41_check(const Scalar& lambda, const Scalar& b, long n_range,
                       unsigned long k_max) {
    CheckReport rep;
    rep.range = n_range;
    rep.basis_budget = static_cast<int>(k_max);
    rep.what = "eq41";
    const DescPtr desc = ModuleDescriptor::omega(lambda, b);
    for (long n = -n_range; n <= n_range; ++n) {
        for (unsigned long k = 0; k <= k_max; ++k) {
            const ModVec direct = vir_act(n, basis_vector(desc, sym_E(static_cast<long>(k))));
            const ModVec closed = omega_closed_form(desc, n, k);
            if (direct != closed) {
                rep.pass = false;
                rep.failure = CheckFailure{n, static_cast<long>(k), sym_E(static_cast<long>(k)).str(),
                                           direct.str(), closed.str()};
                return rep;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Submodule probe

const char* probe_verdict_name(ProbeVerdict v) {
    switch (v) {
        case ProbeVerdict::ProperSubspaceWitness: return "PROPER_SUBSPACE_WITNESS";
        case ProbeVerdict::WindowFilled: return "WINDOW_FILLED";
        case ProbeVerdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

const char* certificate_mode_name(CertificateMode m) {
    switch (m) {
        case CertificateMode::None: return "none";
        case CertificateMode::Closed: return "closed";
        case CertificateMode::Coordinate: return "coordinate";
    }
    return "?";
}

bool avoids_globally(const ModuleDescriptor& desc, const std::vector<BasisSymbol>& M,
                     long gen_range) {
    (void)gen_range; // the facts below hold for every generator index
    if (M.empty()) return false;
    switch (desc.family()) {
        case Family::Omega:
            // d_n . E(k) = lambda^n (theta + n(b-1)) (theta - n)^k carries
            // E(0) with coefficient lambda^n n(b-1)(-n)^k, identically zero
            // at b = 1; no other E-symbol is avoidable.
            return desc.twist() == Scalar(1) && M.size() == 1 && M[0] == sym_E(0);
        case Family::Natural:
            // d_n . T(k) = (k + n b) T(k+n); the T(0) coefficient from
            // k = -n is n(b - 1), identically zero at b = 1.
            return desc.twist() == Scalar(1) && M.size() == 1 && M[0] == sym_T(0);
        default: return false;
    }
}

std::vector<BasisSymbol> default_window(const DescPtr& desc, std::size_t size) {
    std::vector<BasisSymbol> out;
    out.reserve(size);
    for (std::size_t i = 0; i < size; ++i) out.push_back(desc->canonical_symbol(i));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct WindowIndex {
    std::vector<BasisSymbol> symbols; // sorted
    std::map<BasisSymbol, std::size_t> index;

    explicit WindowIndex(std::vector<BasisSymbol> syms) : symbols(std::move(syms)) {
        std::sort(symbols.begin(), symbols.end());
        symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
        for (std::size_t i = 0; i < symbols.size(); ++i) index.emplace(symbols[i], i);
    }

    // Row of coordinates, or nothing when the vector has support outside.
    std::optional<Row> row(const ModVec& v) const {
        Row r(symbols.size(), Scalar(0));
        for (const auto& [s, c] : v.terms()) {
            auto it = index.find(s);
            if (it == index.end()) return std::nullopt;
            r[it->second] = c;
        }
        return r;
    }

    bool in_window_support(const ModVec& v, const std::set<BasisSymbol>& allowed) const {
        for (const auto& [s, c] : v.terms()) {
            auto it = index.find(s);
            if (it == index.end()) continue; // outside the window entirely
            if (!allowed.count(s)) return false;
        }
        return true;
    }
};

ModVec row_to_vec(const DescPtr& desc, const WindowIndex& win, const Row& r) {
    ModVec v(desc);
    for (std::size_t i = 0; i < r.size(); ++i) v.add_term(win.symbols[i], r[i]);
    return v;
}

} // namespace

ProbeReport submodule_probe(const DescPtr& desc, const ModVec& seed, long gen_range,
                            long word_length, const std::vector<BasisSymbol>& window) {
    if (seed.is_zero()) throw Error("probe seed must be nonzero");
    WindowIndex win(window);
    ProbeReport rep;
    rep.window = win.symbols;
    rep.seed = seed.str();
    rep.gen_range = gen_range;
    rep.word_length = word_length;
    rep.window_dim = win.symbols.size();

    auto seed_row = win.row(seed);
    if (!seed_row) throw Error("probe seed must be supported inside the window");

    std::vector<long> gens;
    for (long n = -gen_range; n <= gen_range; ++n) gens.push_back(n);

    SpanBasis span(win.symbols.size());
    std::vector<ModVec> reps; // vectors that contributed rank
    std::vector<Row> collected;
    span.insert(*seed_row);
    collected.push_back(*seed_row);
    reps.push_back(seed);

    std::size_t escape_count = 0;
    std::vector<ModVec> escapes;

    // Breadth-first expansion through in-window vectors; levels beyond the
    // declared word budget saturate the accumulated span until it is stable
    // under every probed generator.  Images are merged in canonical
    // (vector, generator) order so the result is identical for any worker
    // count.
    std::size_t processed = 0;
    long depth = 0;
    while (processed < reps.size()) {
        const std::size_t begin = processed;
        const std::size_t end = reps.size();
        processed = end;
        ++depth;
        if (depth > word_length) ++rep.saturation_rounds;

        struct Task {
            std::size_t rep_index;
            long n;
        };
        std::vector<Task> tasks;
        for (std::size_t i = begin; i < end; ++i)
            for (long n : gens) tasks.push_back({i, n});
        auto images =
            parallel_map(tasks, [&](const Task& t) { return vir_act(t.n, reps[t.rep_index]); });
        for (std::size_t i = 0; i < images.size(); ++i) {
            ModVec& w = images[i];
            if (w.is_zero()) continue;
            auto r = win.row(w);
            if (!r) {
                ++escape_count;
                escapes.push_back(std::move(w));
                continue;
            }
            collected.push_back(*r);
            if (span.insert(*r)) reps.push_back(std::move(w));
        }
    }

    rep.escape_count = escape_count;
    rep.spanned_dim = span.rank();
    // Dual-route rank: fraction-free elimination over the raw collected rows.
    if (rank_bareiss(collected) != rep.spanned_dim)
        throw Error("rank cross-check failed in submodule probe");

    for (const auto& row : span.rows()) rep.span_basis.push_back(row_to_vec(desc, win, row));

    if (rep.spanned_dim == rep.window_dim) {
        rep.verdict = ProbeVerdict::WindowFilled;
        return rep;
    }
    if (escape_count == 0) {
        // Saturated with no image ever leaving the window: the span is an
        // invariant subspace of the module under all probed generators.
        rep.verdict = ProbeVerdict::ProperSubspaceWitness;
        rep.mode = CertificateMode::Closed;
        return rep;
    }
    if (span.is_coordinate_subspace()) {
        std::set<BasisSymbol> present;
        for (std::size_t p : span.pivot_columns()) present.insert(win.symbols[p]);
        std::vector<BasisSymbol> missing;
        for (const auto& s : win.symbols)
            if (!present.count(s)) missing.push_back(s);
        bool escapes_avoid = true;
        for (const auto& e : escapes)
            if (!win.in_window_support(e, present)) {
                escapes_avoid = false;
                break;
            }
        if (escapes_avoid && avoids_globally(*desc, missing, gen_range)) {
            rep.verdict = ProbeVerdict::ProperSubspaceWitness;
            rep.mode = CertificateMode::Coordinate;
            rep.missing = std::move(missing);
            return rep;
        }
    }
    rep.verdict = ProbeVerdict::Inconclusive;
    return rep;
}

bool verify_probe_certificate(const DescPtr& desc, const ProbeReport& report) {
    if (report.verdict != ProbeVerdict::ProperSubspaceWitness) return false;
    WindowIndex win(report.window);
    SpanBasis span(win.symbols.size());
    for (const auto& v : report.span_basis) {
        auto r = win.row(v);
        if (!r) return false;
        span.insert(*r);
    }
    if (span.rank() != report.spanned_dim) return false;
    if (span.rank() == 0 || span.rank() >= win.symbols.size()) return false;

    std::set<BasisSymbol> missing(report.missing.begin(), report.missing.end());
    for (const auto& u : report.span_basis) {
        for (long n = -report.gen_range; n <= report.gen_range; ++n) {
            const ModVec w = vir_act(n, u);
            auto r = win.row(w);
            if (r) {
                if (!span.contains(*r)) return false;
            } else {
                if (report.mode == CertificateMode::Closed) return false;
                for (const auto& [s, c] : w.terms())
                    if (missing.count(s)) return false;
            }
        }
    }
    if (report.mode == CertificateMode::Coordinate) {
        if (report.missing.empty()) return false;
        if (!span.is_coordinate_subspace()) return false;
        if (!avoids_globally(*desc, report.missing, report.gen_range)) return false;
        // The span must avoid the missing coordinates entirely.
        for (const auto& u : report.span_basis)
            for (const auto& [s, c] : u.terms())
                if (missing.count(s)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Invariants and isomorphism

Scalar recover_c_with(const ModVec& v, const VirAction& act) {
    if (v.is_zero()) throw Error("recover_c needs a nonzero vector");
    const ModVec w = wk_apply_with(0, v, act);
    const auto& [s0, c0] = *v.terms().begin();
    const Scalar c = w.coeff(s0) / c0;
    if (w != v.scale(c))
        throw NotEigenvector("w_0 does not act as a scalar on the given vector");
    return c;
}

Scalar recover_c(const DescPtr& desc, const ModVec& v) {
    (void)desc;
    return recover_c_with(v, default_action());
}

ModVec recover_t_action(const DescPtr& desc, long k, const ModVec& v) {
    const Scalar c = recover_c(desc, v);
    if (c.is_zero()) throw TwistDegenerate("t-action recovery needs b(b-1) != 0");
    return wk_apply(k, v).scale(c.inv());
}

std::string Fingerprint::str() const {
    std::string out = "c=" + c.str() + "; family=" + family_name(family);
    if (!params.empty()) out += "; " + params;
    if (b) out += "; b=" + b->str();
    if (lambda_rederived) out += "; lambda_rederived=" + lambda_rederived->str();
    return out;
}

Fingerprint fingerprint(const DescPtr& desc) {
    Fingerprint fp;
    fp.family = desc->family();
    fp.params = desc->params_str();
    if (desc->has_twist()) fp.b = desc->twist();
    const ModVec v0 = basis_vector(desc, desc->canonical_symbol(0));
    fp.c = recover_c(desc, v0);
    if (desc->family() == Family::Omega && !fp.c.is_zero()) {
        // t . E(0) = lambda E(0); recover it without touching the t-action.
        const ModVec w = recover_t_action(desc, 1, basis_vector(desc, sym_E(0)));
        fp.lambda_rederived = w.coeff(sym_E(0));
    }
    return fp;
}

const char* iso_verdict_name(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::Isomorphic: return "ISOMORPHIC";
        case IsoVerdict::NotIsomorphic: return "NOT_ISOMORPHIC";
        case IsoVerdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

TriBool del_surjective(const ModuleDescriptor& desc) {
    switch (desc.family()) {
        case Family::Omega: return TriBool::False;   // theta C[theta] misses the constants
        case Family::Natural: return TriBool::False; // theta misses t^0
        default: return TriBool::Unknown;
    }
}

namespace {

enum class KCompare { Same, Different, Unknown };

// Comparison of the underlying K-modules, where decidable: nominal equality
// of parameters, the t-torsion split between omega and the quotient-style
// families, and the free-rank invariant over C[t,t^-1].
KCompare k_module_compare(const ModuleDescriptor& a, const ModuleDescriptor& b) {
    if (a.family() == b.family()) {
        switch (a.family()) {
            case Family::Omega:
                return a.lambda() == b.lambda() ? KCompare::Same : KCompare::Different;
            case Family::Natural: return KCompare::Same;
            case Family::KQuotient:
                if (a.beta() == b.beta()) return KCompare::Same;
                if (a.beta().deg() != b.beta().deg()) return KCompare::Different;
                return KCompare::Unknown;
            case Family::Fraction:
                if (a.poles() == b.poles() && a.alphas() == b.alphas()) return KCompare::Same;
                return KCompare::Unknown;
            default: return KCompare::Unknown;
        }
    }
    const bool a_omega = a.family() == Family::Omega;
    const bool b_omega = b.family() == Family::Omega;
    if (a_omega != b_omega) return KCompare::Different; // torsion vs torsion-free
    if ((a.family() == Family::Natural && b.family() == Family::KQuotient) ||
        (a.family() == Family::KQuotient && b.family() == Family::Natural)) {
        const auto& kq = a.family() == Family::KQuotient ? a : b;
        if (kq.beta().deg() >= 2) return KCompare::Different; // free ranks 1 vs deg
        return KCompare::Unknown;
    }
    return KCompare::Unknown;
}

Scalar twist_invariant(const ModuleDescriptor& d) {
    if (d.family() == Family::VPrime00) return Scalar(0); // w_0 acts as zero there
    const Scalar b = d.twist();
    return b * (b - Scalar(1));
}

IsoVerdict vprime_vs_twisted(const ModuleDescriptor& other) {
    // VPrime00 is irreducible with d_0 acting diagonally.  Against omega
    // (d_0 acts freely, no eigenvectors) and the reducible twists of the
    // natural module this settles the question; otherwise stay agnostic.
    switch (other.family()) {
        case Family::Omega: return IsoVerdict::NotIsomorphic;
        case Family::Natural: {
            const Scalar b = other.twist();
            if (b == Scalar(0) || b == Scalar(1)) return IsoVerdict::NotIsomorphic;
            return IsoVerdict::NotIsomorphic; // b(b-1) != 0 differs from c = 0
        }
        default: return IsoVerdict::Unknown;
    }
}

} // namespace

IsoVerdict decide_isomorphism(const DescPtr& a, const DescPtr& b) {
    if (*a == *b) return IsoVerdict::Isomorphic;

    const Scalar ca = twist_invariant(*a);
    const Scalar cb = twist_invariant(*b);
    // Any module map transports the w_0 eigenvalue, so distinct c separate.
    if (ca != cb) return IsoVerdict::NotIsomorphic;

    const bool a_vp = a->family() == Family::VPrime00;
    const bool b_vp = b->family() == Family::VPrime00;
    if (a_vp && b_vp) return IsoVerdict::Isomorphic;
    if (a_vp) return vprime_vs_twisted(*b);
    if (b_vp) return vprime_vs_twisted(*a);

    const Scalar ta = a->twist();
    const Scalar tb = b->twist();

    if (!ca.is_zero()) {
        // c != 0 lets the t-action be rebuilt from w_k/c, which forces both
        // the twist and the K-structure to match under any isomorphism.
        if (ta != tb) return IsoVerdict::NotIsomorphic;
        switch (k_module_compare(*a, *b)) {
            case KCompare::Same: return IsoVerdict::Isomorphic;
            case KCompare::Different: return IsoVerdict::NotIsomorphic;
            case KCompare::Unknown: return IsoVerdict::Unknown;
        }
    }

    // Both twists lie in {0, 1}.
    switch (k_module_compare(*a, *b)) {
        case KCompare::Different: return IsoVerdict::NotIsomorphic;
        case KCompare::Unknown: return IsoVerdict::Unknown;
        case KCompare::Same: break;
    }
    if (ta == tb) return IsoVerdict::Isomorphic;
    // Twists 0 and 1 on the same K-module match exactly when theta is onto.
    switch (del_surjective(*a)) {
        case TriBool::True: return IsoVerdict::Isomorphic;
        case TriBool::False: return IsoVerdict::NotIsomorphic;
        case TriBool::Unknown: return IsoVerdict::Unknown;
    }
    return IsoVerdict::Unknown;
}

} // namespace oremod
