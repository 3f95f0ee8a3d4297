#pragma once

/**
 * @file integrality.hpp
 * @brief HS-integrality and Eisenstein integrality of mixed Cayley graphs.
 *
 * Cay(G, S) is HS-integral iff S \ S_bar lies in B(G) and S_bar lies in E(G),
 * and it is Eisenstein integral iff it is HS-integral. classify() decides
 * all three routes independently (set-theoretic, exact Hermitian spectrum,
 * exact adjacency spectrum) and records whether they agree.
 *
 * The certificate sums for x in Gamma(3) are
 *   Z_x(a) = sum_{s in <<x>>} (w_6 psi_a(s) + w_6^5 psi_a(-s))
 *   C_x(a) = sum_{s in [x]} psi_a(s)
 *   T_x(a) = sum_{s in <<x>>} i sqrt3 (psi_a(s) - psi_a(-s))
 * with 2 Z = C + T, all integers, 3 | T and C = T/3 mod 2.
 */

#include <hsint/abelian_group.hpp>
#include <hsint/atoms.hpp>
#include <hsint/cayley.hpp>
#include <hsint/cyclotomic.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hsint {

/// A computed value contradicts a proven identity: either the code or the theorem is wrong.
class theorem_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

/// Signed sum of terms w_N^{sign * e(alpha, s) + shift}; i sqrt3 = w_6 - w_6^5.
struct CountBuilder {
    const GroupSpec& g;
    const GroupElement& alpha;
    std::vector<std::int64_t> counts;

    CountBuilder(const GroupSpec& group, const GroupElement& a)
        : g(group), alpha(a), counts(static_cast<std::size_t>(group.root_order()), 0) {}

    void add(const GroupElement& s, int sign, std::int64_t shift, std::int64_t weight = 1) {
        const std::int64_t n = g.root_order();
        std::int64_t e = character_exponent(g, alpha, s);
        if (sign < 0) e = (n - e) % n;
        counts[static_cast<std::size_t>((e + shift) % n)] += weight;
    }

    /// i sqrt3 (psi(s) - psi(-s))
    void add_i_sqrt3_difference(const GroupElement& s, std::int64_t weight = 1) {
        const std::int64_t n = g.root_order();
        add(s, +1, n / 6, weight);
        add(s, +1, 5 * n / 6, -weight);
        add(s, -1, n / 6, -weight);
        add(s, -1, 5 * n / 6, weight);
    }

    CycloNum value() const { return CycloNum::from_counts(g.root_order(), counts).reduce(); }
};

}  // namespace detail

/// C_x(alpha) = sum over the atom [x]; defined for every x.
inline CycloNum atom_character_sum(const GroupSpec& g, const GroupElement& x, const GroupElement& alpha) {
    detail::CountBuilder b(g, alpha);
    for (auto& s : atom_of(g, x)) b.add(s, +1, 0);
    return b.value();
}

struct CertificateValues {
    GroupElement x;
    GroupElement alpha;
    CycloNum Z;
    CycloNum C;
    CycloNum T;
    std::int64_t z_value = 0;
    std::int64_t c_value = 0;
    std::int64_t t_value = 0;
    std::optional<std::int64_t> T_over_3{};
    bool parity_ok = false;
};

inline CertificateValues certificate(const GroupSpec& g, const GroupElement& x, const GroupElement& alpha) {
    if (!in_gamma3(g, x)) throw domain_error("certificate requires x in Gamma(3), got " + to_string(x));
    const std::int64_t n = g.root_order();
    detail::CountBuilder z(g, alpha), t(g, alpha);
    for (auto& s : eclass_of(g, x)) {
        z.add(s, +1, n / 6);
        z.add(s, -1, 5 * n / 6);
        t.add_i_sqrt3_difference(s);
    }
    CertificateValues cv{x, alpha, z.value(), atom_character_sum(g, x, alpha), t.value()};
    const auto zi = as_integer(cv.Z), ci = as_integer(cv.C), ti = as_integer(cv.T);
    const std::string where = " for x=" + to_string(x) + ", alpha=" + to_string(alpha);
    if (!zi) throw theorem_violation("Z_x(alpha) is not an integer" + where);
    if (!ci) throw theorem_violation("C_x(alpha) is not an integer" + where);
    if (!ti) throw theorem_violation("T_x(alpha) is not an integer" + where);
    cv.z_value = *zi;
    cv.c_value = *ci;
    cv.t_value = *ti;
    if (*ti % 3 == 0) cv.T_over_3 = *ti / 3;
    cv.parity_ok = cv.T_over_3 && ((*ci - *cv.T_over_3) % 2 == 0);
    return cv;
}

/// Checks the closed forms of T_x(alpha) according to the 3-adic valuation of ord(x):
///  ord = 3m, 3 !| m:       T = 0 if psi(m x) = 1, else T = +-3 C_{3x}
///  ord = 3^t m, t >= 2:    T = 0 if psi((ord/3) x) != 1,
///                          else T = 3 i sqrt3 sum_{r in G^1_{ord/3,3}(1)} (psi(r x) - psi(-r x))
inline bool certificate_case_law_holds(const GroupSpec& g, const CertificateValues& cv) {
    const std::int64_t k = order_of(g, cv.x);
    std::int64_t m = k;
    int t = 0;
    while (m % 3 == 0) {
        m /= 3;
        ++t;
    }
    if (t == 1) {
        const bool trivial = character_exponent(g, cv.alpha, g.scale(m, cv.x)) == 0;
        if (trivial) return cv.t_value == 0;
        const auto c3 = as_integer(atom_character_sum(g, g.scale(3, cv.x), cv.alpha));
        if (!c3) return false;
        return cv.t_value == 3 * *c3 || cv.t_value == -3 * *c3;
    }
    const bool trivial = character_exponent(g, cv.alpha, g.scale(k / 3, cv.x)) == 0;
    if (!trivial) return cv.t_value == 0;
    detail::CountBuilder b(g, cv.alpha);
    for (auto r : g_units_mod3(k / 3, 1)) b.add_i_sqrt3_difference(g.scale(r, cv.x), 3);
    const auto rhs = as_integer(b.value());
    return rhs && *rhs == cv.t_value;
}

// ---------------------------------------------------------------------------
// f_alpha, g_alpha
// ---------------------------------------------------------------------------

struct FGValues {
    CycloNum f;
    CycloNum g;
};

/// f = sum_{S \ S_bar} psi(s); g = sum_{S_bar} (w psi(s) + conj(w) psi(-s)), w = (1 + w_6^5)/3.
inline FGValues f_g_values(const ConnectionSet& cs, const GroupElement& alpha) {
    const GroupSpec& grp = cs.group();
    const std::int64_t n = grp.root_order();
    detail::CountBuilder f(grp, alpha), g3(grp, alpha);
    for (auto& s : cs.sym_part()) f.add(s, +1, 0);
    for (auto& s : cs.skew_part()) {
        g3.add(s, +1, 0);
        g3.add(s, +1, 5 * n / 6);
        g3.add(s, -1, 0);
        g3.add(s, -1, n / 6);
    }
    return {f.value(), (Rational(1, 3) * g3.value()).reduce()};
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

struct ClassificationReport {
    GroupSpec group;
    ConnectionSet set;
    std::optional<AtomDecomposition> sym_decomposition{};
    std::optional<AtomDecomposition> skew_decomposition{};
    bool hs_verdict_characterization = false;
    bool hs_verdict_spectral = false;
    bool eisenstein_verdict_spectral = false;
    ExactSpectrum hs_spectrum{};
    ExactSpectrum a_spectrum{};
    bool consistency = false;
};

inline bool all_integers(const ExactSpectrum& sp) {
    return std::all_of(sp.entries.begin(), sp.entries.end(), [](auto& e) { return as_integer(e.second).has_value(); });
}

inline bool all_eisenstein(const ExactSpectrum& sp) {
    return std::all_of(sp.entries.begin(), sp.entries.end(),
                       [](auto& e) { return as_eisenstein(e.second).has_value(); });
}

inline ClassificationReport classify(const GroupSpec& g, const ElementSet& s) {
    ConnectionSet cs(g, s);
    ClassificationReport r{g, cs};
    r.sym_decomposition = in_boolean_algebra(g, cs.sym_part());
    r.skew_decomposition = in_skew_family(g, cs.skew_part());
    r.hs_verdict_characterization = r.sym_decomposition.has_value() && r.skew_decomposition.has_value();
    r.hs_spectrum = exact_spectrum(cs, SpectrumKind::hs);
    r.a_spectrum = exact_spectrum(cs, SpectrumKind::adjacency);
    r.hs_verdict_spectral = all_integers(r.hs_spectrum);
    r.eisenstein_verdict_spectral = all_eisenstein(r.a_spectrum);
    r.consistency = r.hs_verdict_characterization == r.hs_verdict_spectral &&
                    r.hs_verdict_spectral == r.eisenstein_verdict_spectral;
    return r;
}

// ---------------------------------------------------------------------------
// Constructive enumeration of HS-integral connection sets
// ---------------------------------------------------------------------------

struct EnumerationResult {
    std::uint64_t emitted = 0;
    /// Number of HS-integral sets, saturated at uint64 max.
    std::uint64_t total = 0;
    bool truncated = false;
};

/// Calls emit(S) for every S with S \ S_bar in B(G) and S_bar in E(G), at most
/// `budget` times. Each atom [x] contributes one of {absent, [x]} or, for x in
/// Gamma(3), one of {absent, [x], <<x>>, <<-x>>}; the first atom varies fastest.
inline EnumerationResult enumerate_hs_integral(const GroupSpec& g, std::uint64_t budget,
                                               const std::function<void(const ElementSet&)>& emit) {
    struct Choice {
        std::vector<ElementSet> options;
    };
    std::vector<Choice> choices;
    for (auto& atom : nonzero_atoms(g)) {
        const GroupElement& x = *atom.begin();
        Choice c;
        c.options.push_back({});
        c.options.push_back(atom);
        if (in_gamma3(g, x)) {
            c.options.push_back(eclass_of(g, x));
            c.options.push_back(eclass_of(g, g.neg(x)));
        }
        choices.push_back(std::move(c));
    }

    EnumerationResult res;
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    res.total = 1;
    for (auto& c : choices) {
        const std::uint64_t k = c.options.size();
        res.total = res.total > cap / k ? cap : res.total * k;
    }
    res.truncated = res.total > budget;

    std::vector<std::size_t> digit(choices.size(), 0);
    const std::uint64_t limit = std::min(res.total, budget);
    for (std::uint64_t i = 0; i < limit; ++i) {
        ElementSet s;
        for (std::size_t j = 0; j < choices.size(); ++j) {
            auto& opt = choices[j].options[digit[j]];
            s.insert(opt.begin(), opt.end());
        }
        emit(s);
        ++res.emitted;
        for (std::size_t j = 0; j < choices.size(); ++j) {
            if (++digit[j] < choices[j].options.size()) break;
            digit[j] = 0;
        }
    }
    return res;
}

inline std::vector<ElementSet> enumerate_hs_integral(const GroupSpec& g, std::uint64_t budget = 1u << 20) {
    std::vector<ElementSet> out;
    enumerate_hs_integral(g, budget, [&](const ElementSet& s) { out.push_back(s); });
    return out;
}

// ---------------------------------------------------------------------------
// Theorem verification sweep
// ---------------------------------------------------------------------------

struct Counterexample {
    ElementSet set;
    std::string check;
    std::string detail;
};

struct VerificationReport {
    GroupSpec group;
    std::uint64_t subsets_tested = 0;
    std::uint64_t hs_integral_count = 0;
    std::uint64_t certificates_checked = 0;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::vector<Counterexample> counterexamples{};
};

struct SubsetVerdict {
    bool hs_integral = false;
    std::vector<Counterexample> failures;
};

/// Per-subset equivalences: spectral HS <=> characterization; Eisenstein <=> HS;
/// HS <=> (simple part integral and skew part HS-integral); Eisenstein <=> f, g integral.
inline SubsetVerdict verify_subset(const GroupSpec& g, const ElementSet& s) {
    SubsetVerdict v;
    const ClassificationReport r = classify(g, s);
    v.hs_integral = r.hs_verdict_spectral;
    auto fail = [&](const char* check, const std::string& detail) { v.failures.push_back({s, check, detail}); };
    if (r.hs_verdict_spectral != r.hs_verdict_characterization) {
        fail("hs_spectral_vs_characterization", r.hs_verdict_spectral ? "spectral true, characterization false"
                                                                      : "spectral false, characterization true");
    }
    if (r.eisenstein_verdict_spectral != r.hs_verdict_spectral) {
        fail("eisenstein_vs_hs", r.eisenstein_verdict_spectral ? "Eisenstein true, HS false" : "Eisenstein false, HS true");
    }
    bool lambda_int = true, mu_int = true, fg_int = true;
    for (auto& alpha : g.elements()) {
        const HsEigenvalue parts = hs_eigenvalue_parts(r.set, alpha);
        lambda_int = lambda_int && as_integer(parts.lambda).has_value();
        mu_int = mu_int && as_integer(parts.mu).has_value();
        const FGValues fg = f_g_values(r.set, alpha);
        fg_int = fg_int && as_integer(fg.f).has_value() && as_integer(fg.g).has_value();
    }
    if ((lambda_int && mu_int) != r.hs_verdict_spectral) {
        fail("split_lemma", "simple part integral=" + std::to_string(lambda_int) +
                                ", skew part HS-integral=" + std::to_string(mu_int));
    }
    if (fg_int != r.eisenstein_verdict_spectral) {
        fail("f_g_integrality", "f,g integral=" + std::to_string(fg_int));
    }
    return v;
}

/// Checks every certificate identity for all x in Gamma(3) and all alpha.
inline std::uint64_t verify_certificates(const GroupSpec& g, std::vector<Counterexample>& failures) {
    std::uint64_t checked = 0;
    const auto elems = g.elements();
    for (auto& x : gamma3(g)) {
        for (auto& alpha : elems) {
            ++checked;
            const std::string where = "x=" + to_string(x) + " alpha=" + to_string(alpha);
            try {
                const CertificateValues cv = certificate(g, x, alpha);
                if (2 * cv.z_value != cv.c_value + cv.t_value) failures.push_back({{x}, "certificate_2Z_eq_C_plus_T", where});
                if (!cv.T_over_3) failures.push_back({{x}, "certificate_3_divides_T", where});
                if (!cv.parity_ok) failures.push_back({{x}, "certificate_parity", where});
                if (!certificate_case_law_holds(g, cv)) failures.push_back({{x}, "certificate_case_law", where});
            } catch (const theorem_violation& e) {
                failures.push_back({{x}, "certificate_integrality", e.what()});
            }
        }
    }
    return checked;
}

/// Connection set for sweep index i: exhaustive bitmask over G \ {0}, or a
/// seeded uniform sample when the powerset exceeds the budget.
inline ElementSet sweep_subset(const GroupSpec& g, std::uint64_t index, bool exhaustive, std::uint64_t seed) {
    ElementSet s;
    const std::int64_t n = g.order();
    if (exhaustive) {
        for (std::int64_t i = 1; i < n; ++i) {
            if ((index >> (i - 1)) & 1u) s.insert(g.element_at(i));
        }
        return s;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    std::uint64_t bits = 0;
    int left = 0;
    for (std::int64_t i = 1; i < n; ++i) {
        if (left == 0) {
            bits = rng();
            left = 64;
        }
        if (bits & 1u) s.insert(g.element_at(i));
        bits >>= 1;
        --left;
    }
    return s;
}

inline VerificationReport verify_theorems(const GroupSpec& g, std::uint64_t budget, std::uint64_t seed = 0,
                                          unsigned parallelism = 1) {
    VerificationReport rep{g};
    rep.seed = seed;
    const std::int64_t free_elems = g.order() - 1;
    rep.exhaustive = free_elems < 63 && (std::uint64_t{1} << free_elems) <= budget;
    const std::uint64_t count = rep.exhaustive ? (std::uint64_t{1} << free_elems) : budget;

    rep.certificates_checked = verify_certificates(g, rep.counterexamples);

    constexpr std::uint64_t chunk = 64;
    const std::uint64_t chunks = (count + chunk - 1) / chunk;
    std::vector<std::vector<SubsetVerdict>> results(chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
            const std::uint64_t lo = c * chunk, hi = std::min(count, lo + chunk);
            auto& out = results[c];
            out.reserve(hi - lo);
            for (std::uint64_t i = lo; i < hi; ++i) out.push_back(verify_subset(g, sweep_subset(g, i, rep.exhaustive, seed)));
        }
    };
    const unsigned workers = std::max(1u, parallelism);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    for (auto& block : results) {
        for (auto& v : block) {
            ++rep.subsets_tested;
            if (v.hs_integral) ++rep.hs_integral_count;
            for (auto& f : v.failures) rep.counterexamples.push_back(std::move(f));
        }
    }
    return rep;
}

}  // namespace hsint
