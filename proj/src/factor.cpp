#include "oremod/factor.hpp"

#include <algorithm>
#include <sstream>

#include "oremod/parallel.hpp"
#include "oremod/parse.hpp"

namespace oremod {

namespace {

void validate_poles(const std::vector<Scalar>& poles) {
    for (std::size_t i = 0; i < poles.size(); ++i) {
        if (poles[i].is_zero()) throw ZeroPole();
        for (std::size_t j = i + 1; j < poles.size(); ++j)
            if (poles[i] == poles[j]) throw DuplicatePoles();
    }
}

} // namespace

Scalar pole_constraint_value(const std::vector<Scalar>& poles, std::size_t i) {
    Scalar acc = Scalar::rational(-1, 2);
    for (std::size_t j = 0; j < poles.size(); ++j) {
        if (j == i) continue;
        acc += poles[j] / (poles[i] - poles[j]);
    }
    return acc;
}

FactorWitness make_witness(const LaurentPoly& h, const std::vector<Scalar>& poles) {
    validate_poles(poles);
    RatFunc g1 = RatFunc::from_laurent(h);
    for (const auto& a : poles)
        g1 += RatFunc(Poly::constant(-a), Poly::linear(a));
    return FactorWitness{poles, h, g1};
}

LaurentPoly difference_quotient(const LaurentPoly& h, const Scalar& a) {
    if (h.is_zero()) return LaurentPoly::zero();
    const LaurentPoly num = h - LaurentPoly::constant(h.eval(a));
    if (num.is_zero()) return LaurentPoly::zero();
    const long shift = std::min(num.bot_exp(), 0L);
    const Poly p = Poly::from_laurent(num.shifted(-shift));
    auto [q, r] = p.divmod(Poly::linear(a));
    if (!r.is_zero()) throw Error("difference quotient not exact");
    return q.to_laurent().shifted(shift);
}

std::pair<LaurentPoly, FactorWitness> construct_reducible(const LaurentPoly& h,
                                                          const std::vector<Scalar>& poles) {
    validate_poles(poles);
    for (std::size_t i = 0; i < poles.size(); ++i) {
        const Scalar want = pole_constraint_value(poles, i);
        if (h.eval(poles[i]) != want)
            throw ConstraintViolated(i + 1, "h(" + poles[i].str() + ") = " +
                                                h.eval(poles[i]).str() + ", required " +
                                                want.str());
    }
    LaurentPoly f = h * h - h.derive(Gen::Theta);
    for (const auto& a : poles)
        f -= difference_quotient(h, a).scale(Scalar(2) * a);
    FactorWitness w = make_witness(h, poles);
    if (!verify_factorization(f, w)) throw Error("constructed witness failed verification");
    return {f, w};
}

bool verify_factorization(const LaurentPoly& f, const FactorWitness& w, RatOreElem* difference) {
    const RatOreElem theta = RatOreElem::generator(Gen::Theta);
    const RatOreElem g1 = RatOreElem::constant(Gen::Theta, w.g1);
    const RatOreElem lhs = (theta - g1) * (theta + g1);
    RatOreElem rhs = theta * theta;
    rhs -= RatOreElem::constant(Gen::Theta, RatFunc::from_laurent(f));
    if (difference) *difference = lhs - rhs;
    return lhs == rhs;
}

std::string IrredCertificate::str() const {
    switch (kind) {
        case Kind::OddTopDegree: return "ODD_TOP_DEGREE(" + std::to_string(degree) + ")";
        case Kind::OddBottomDegree: return "ODD_BOTTOM_DEGREE(" + std::to_string(degree) + ")";
        case Kind::AiryType: return "AIRY_TYPE(deg " + std::to_string(degree) + ")";
    }
    return "?";
}

std::optional<IrredCertificate> irreducible_by_degree(const LaurentPoly& f) {
    if (f.is_zero()) return std::nullopt;
    const long top = f.top_exp();
    if (top > 0 && top % 2 != 0) return IrredCertificate{IrredCertificate::Kind::OddTopDegree, top, Poly()};
    const long bot = f.bot_exp();
    if (bot < 0 && bot % 2 != 0)
        return IrredCertificate{IrredCertificate::Kind::OddBottomDegree, bot, Poly()};
    return std::nullopt;
}

LaurentPoly complete_square_reduce(const LaurentPoly& f1, const LaurentPoly& f2) {
    return f1.derive(Gen::Theta) + f1 * f1 - f2;
}

RatOreElem shift_generator(const RatOreElem& x, const RatFunc& s) {
    RatOreElem g = RatOreElem::generator(x.gen());
    g.add_to(0, s);
    return subst_generator(x, g);
}

std::pair<RatOreElem, RatOreElem> transport_factorization(const LaurentPoly& f1,
                                                          const FactorWitness& w) {
    const RatFunc rf1 = RatFunc::from_laurent(f1);
    RatOreElem left = RatOreElem::generator(Gen::Theta);
    left.add_to(0, rf1 - w.g1);
    RatOreElem right = RatOreElem::generator(Gen::Theta);
    right.add_to(0, rf1 + w.g1);
    return {left, right};
}

std::pair<IrredCertificate, OreElem> make_airy_type(const Poly& f) {
    if (f.deg() < 1) throw ConstantPolynomial();
    OreElem beta(Gen::Ddt);
    for (int m = 0; m <= f.deg(); ++m) {
        const Scalar c = f.coeff(static_cast<std::size_t>(m));
        if (!c.is_zero()) beta.add_to(static_cast<unsigned long>(m), LaurentPoly::constant(c));
    }
    beta.add_to(0, LaurentPoly::monomial(Scalar(-1), 1)); // minus t
    return {IrredCertificate{IrredCertificate::Kind::AiryType, f.deg(), f}, beta};
}

// ---------------------------------------------------------------------------
// Bounded witness search

namespace {

std::vector<Scalar> default_box() {
    return {Scalar(0),
            Scalar(1),
            Scalar(-1),
            Scalar(2),
            Scalar(-2),
            Scalar::rational(1, 2),
            Scalar::rational(-1, 2)};
}

// Top-down coefficient forcing for a Laurent part with top exponent d >= 1:
// for s = d + m, m = d-1 .. max(lo, 0), the coefficient of t^s in
//     f = h^2 - theta(h) - (pole terms of degree <= d-1)
// is 2 c_d c_m + (cross terms in already-forced coefficients)
// - [s == d] d c_d, which pins c_m exactly.
std::optional<std::map<long, Scalar>> force_top_coeffs(const LaurentPoly& f, long d,
                                                       const Scalar& cd, long lo) {
    std::map<long, Scalar> c;
    c[d] = cd;
    for (long m = d - 1; m >= std::max(lo, 0L); --m) {
        const long s = d + m;
        Scalar cross(0);
        for (long u = m + 1; u <= d; ++u) {
            const long w = s - u;
            if (w <= m || w > d || w < u) continue;
            const Scalar prod = c[u] * c[w];
            cross += (u == w) ? prod : Scalar(2) * prod;
        }
        Scalar rhs = f.coeff(s) - cross;
        if (s == d) rhs += Scalar(d) * cd; // theta(h) contributes -d*c_d at t^d
        c[m] = rhs / (Scalar(2) * cd);
    }
    return c;
}

LaurentPoly coeffs_to_laurent(const std::map<long, Scalar>& c) {
    LaurentPoly h;
    for (const auto& [e, v] : c) h.add_term(e, v);
    return h;
}

} // namespace

SearchResult search_witness(const LaurentPoly& f, const SearchOptions& opts) {
    validate_poles(opts.pole_candidates);
    if (opts.deg_lo > opts.deg_hi) throw UsageError("degree bounds out of order");
    const std::vector<Scalar> box = opts.coeff_box.empty() ? default_box() : opts.coeff_box;

    // Canonical subset order: by size, then lexicographically by index.
    std::vector<std::vector<std::size_t>> subsets;
    const std::size_t n = opts.pole_candidates.size();
    if (n >= 20) throw UsageError("too many pole candidates for subset enumeration");
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) idx.push_back(i);
        subsets.push_back(std::move(idx));
    }
    std::vector<std::size_t> subset_order;
    {
        std::vector<std::pair<std::size_t, std::size_t>> keyed;
        for (std::size_t s = 0; s < subsets.size(); ++s) keyed.push_back({subsets[s].size(), s});
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [sz, s] : keyed) subset_order.push_back(s);
    }

    // Laurent-part candidates in canonical order.  Top exponent descends
    // from deg_hi; each top coefficient is a square root of f's coefficient
    // at twice the top exponent; everything down to t^0 is then forced and
    // exponents below zero range over the box.
    std::vector<LaurentPoly> h_candidates;
    auto push_candidate = [&](const LaurentPoly& h) {
        if (h_candidates.size() >= opts.budget)
            throw BudgetExceeded(h_candidates.size(),
                                 "witness search space exceeds the budget of " +
                                     std::to_string(opts.budget) + " candidates");
        h_candidates.push_back(h);
    };
    std::vector<long> neg_exps;
    for (long e = -1; e >= opts.deg_lo; --e) neg_exps.push_back(e);

    auto with_negative_parts = [&](const std::map<long, Scalar>& base,
                                   auto&& emit) {
        if (neg_exps.empty()) {
            emit(base);
            return;
        }
        std::vector<std::size_t> pick(neg_exps.size(), 0);
        for (;;) {
            std::map<long, Scalar> c = base;
            for (std::size_t i = 0; i < neg_exps.size(); ++i) {
                const Scalar& v = box[pick[i]];
                if (!v.is_zero()) c[neg_exps[i]] = v;
            }
            emit(c);
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == box.size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
    };

    for (long d = opts.deg_hi; d >= std::max(opts.deg_lo, 1L); --d) {
        const Scalar q = f.coeff(2 * d);
        if (q.is_zero()) continue;
        const auto root = sqrt_exact(q);
        if (!root) continue;
        for (const Scalar& cd : {*root, -*root}) {
            auto forced = force_top_coeffs(f, d, cd, opts.deg_lo);
            if (!forced) continue;
            with_negative_parts(*forced, [&](const std::map<long, Scalar>& c) {
                push_candidate(coeffs_to_laurent(c));
            });
        }
    }
    if (opts.deg_hi >= 0 && opts.deg_lo <= 0) {
        // Constant-or-lower tops: the constant term ranges over the box and
        // square roots of f's constant coefficient.
        std::vector<Scalar> c0s = box;
        if (const auto r0 = sqrt_exact(f.coeff(0))) {
            c0s.push_back(*r0);
            c0s.push_back(-*r0);
        }
        for (const Scalar& c0 : c0s) {
            std::map<long, Scalar> base;
            if (!c0.is_zero()) base[0] = c0;
            with_negative_parts(base, [&](const std::map<long, Scalar>& c) {
                push_candidate(coeffs_to_laurent(c));
            });
        }
    }

    SearchResult result;
    // Evaluate (subset, h) pairs in canonical order; subsets ordered by
    // size so pole-free witnesses are preferred.
    struct Candidate {
        std::size_t subset;
        std::size_t h;
    };
    std::vector<Candidate> all;
    for (std::size_t s : subset_order)
        for (std::size_t hi = 0; hi < h_candidates.size(); ++hi) all.push_back({s, hi});

    if (all.size() > opts.budget)
        throw BudgetExceeded(all.size(), "witness search space exceeds the budget of " +
                                             std::to_string(opts.budget) + " candidates");
    result.candidates_tried = all.size();

    auto evaluate = [&](const Candidate& cand) -> std::optional<FactorWitness> {
        std::vector<Scalar> poles;
        for (std::size_t i : subsets[cand.subset]) poles.push_back(opts.pole_candidates[i]);
        const LaurentPoly& h = h_candidates[cand.h];
        for (std::size_t i = 0; i < poles.size(); ++i)
            if (h.eval(poles[i]) != pole_constraint_value(poles, i)) return std::nullopt;
        try {
            auto [f2, w] = construct_reducible(h, poles);
            if (f2 != f) return std::nullopt;
            if (!verify_factorization(f, w)) return std::nullopt;
            return w;
        } catch (const Error&) {
            return std::nullopt;
        }
    };

    const std::size_t chunk = 256;
    for (std::size_t base = 0; base < all.size(); base += chunk) {
        const std::size_t hi = std::min(all.size(), base + chunk);
        std::vector<Candidate> slice(all.begin() + base, all.begin() + hi);
        auto outs = parallel_map(slice, evaluate);
        for (auto& o : outs) {
            if (o) {
                result.witness = std::move(o);
                return result;
            }
        }
    }
    return result;
}

std::vector<BatchRecord> factor_batch(const std::string& text, const SearchOptions& opts) {
    std::vector<BatchRecord> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        const std::string expr = line.substr(a, b - a + 1);

        BatchRecord rec;
        rec.line = lineno;
        rec.input = expr;
        try {
            const LaurentPoly f = parse_laurent(expr);
            if (auto cert = irreducible_by_degree(f)) {
                rec.verdict = "IRREDUCIBLE";
                rec.detail = cert->str();
            } else {
                SearchResult sr = search_witness(f, opts);
                if (sr.witness) {
                    rec.verdict = "REDUCIBLE";
                    rec.detail = "h = " + sr.witness->h.str() + "; g1 = " + sr.witness->g1.str();
                } else {
                    rec.verdict = "UNKNOWN";
                    rec.detail = "no witness within bounds (" +
                                 std::to_string(sr.candidates_tried) + " candidates tried)";
                }
            }
        } catch (const BudgetExceeded& e) {
            rec.verdict = "UNKNOWN";
            rec.detail = e.what();
        } catch (const Error& e) {
            rec.verdict = "ERROR";
            rec.detail = e.what();
        }
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace oremod
