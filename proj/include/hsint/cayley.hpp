#pragma once

/**
 * @file cayley.hpp
 * @brief Mixed Cayley graphs Cay(G, S) over finite abelian groups.
 *
 * Vertices are the group elements in lexicographic order; (u, v) is an arc
 * iff v - u lies in S. Undirected edges come from the symmetric part of S,
 * arcs from the skew part S_bar = { s in S : -s not in S }.
 *
 * Both spectra are diagonalized by the characters psi_alpha:
 *   adjacency:   sum_{s in S} psi_alpha(s)
 *   Hermitian:   lambda_alpha + mu_alpha, where
 *     lambda_alpha = sum_{s in S \ S_bar} psi_alpha(s)
 *     mu_alpha     = sum_{s in S_bar} (w_6 psi_alpha(s) + w_6^5 psi_alpha(-s))
 * and are computed here exactly in Q(w_N). A dense Jacobi eigensolver on the
 * explicit Hermitian matrix serves as an independent numeric cross-check.
 */

#include <hsint/abelian_group.hpp>
#include <hsint/cyclotomic.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsint {

/// Raised when the numeric eigensolver cannot produce a trustworthy answer.
class oracle_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConnectionSet {
public:
    ConnectionSet(GroupSpec group, ElementSet members) : group_(std::move(group)), members_(std::move(members)) {
        for (auto& s : members_) {
            if (!group_.contains(s)) throw invalid_input("element " + to_string(s) + " is not a reduced element of " + group_.to_string());
            if (group_.is_zero(s)) throw invalid_input("connection set must not contain the identity element");
        }
        for (auto& s : members_) {
            if (members_.contains(group_.neg(s))) {
                sym_part_.insert(s);
            } else {
                skew_part_.insert(s);
            }
        }
    }

    const GroupSpec& group() const noexcept { return group_; }
    const ElementSet& members() const noexcept { return members_; }
    /// S \ S_bar, closed under negation.
    const ElementSet& sym_part() const noexcept { return sym_part_; }
    /// S_bar, disjoint from its negation.
    const ElementSet& skew_part() const noexcept { return skew_part_; }

    bool contains(const GroupElement& x) const { return members_.contains(x); }

private:
    GroupSpec group_;
    ElementSet members_;
    ElementSet sym_part_;
    ElementSet skew_part_;
};

inline ConnectionSet make_connection_set(const GroupSpec& g, ElementSet members) {
    return ConnectionSet(g, std::move(members));
}

// ---------------------------------------------------------------------------
// Explicit matrices
// ---------------------------------------------------------------------------

/// Entries of the second-kind Hermitian adjacency matrix.
enum class HEntry : std::uint8_t { zero, one, w6, w6_5 };

inline HEntry conj(HEntry e) {
    switch (e) {
        case HEntry::w6: return HEntry::w6_5;
        case HEntry::w6_5: return HEntry::w6;
        default: return e;
    }
}

inline const char* entry_code(HEntry e) {
    switch (e) {
        case HEntry::zero: return "0";
        case HEntry::one: return "1";
        case HEntry::w6: return "w6";
        case HEntry::w6_5: return "w6^5";
    }
    return "?";
}

struct MixedGraphMatrices {
    std::size_t n = 0;
    std::vector<std::vector<std::uint8_t>> adjacency;
    std::vector<std::vector<HEntry>> hermitian2;
};

inline MixedGraphMatrices build_matrices(const ConnectionSet& cs) {
    const GroupSpec& g = cs.group();
    const auto n = static_cast<std::size_t>(g.order());
    MixedGraphMatrices m;
    m.n = n;
    m.adjacency.assign(n, std::vector<std::uint8_t>(n, 0));
    m.hermitian2.assign(n, std::vector<HEntry>(n, HEntry::zero));
    const auto elems = g.elements();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            const GroupElement d = g.add(elems[v], g.neg(elems[u]));
            const bool fwd = cs.contains(d);
            const bool back = cs.contains(g.neg(d));
            m.adjacency[u][v] = fwd ? 1 : 0;
            if (fwd && back) {
                m.hermitian2[u][v] = HEntry::one;
            } else if (fwd) {
                m.hermitian2[u][v] = HEntry::w6;
            } else if (back) {
                m.hermitian2[u][v] = HEntry::w6_5;
            }
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Exact eigenvalues via characters
// ---------------------------------------------------------------------------

namespace detail {

/// Adds sum_{s in set} w_N^{sign * e(alpha, s) + shift} into counts.
inline void accumulate_characters(const GroupSpec& g, const GroupElement& alpha, const ElementSet& set,
                                  std::int64_t shift, int sign, std::vector<std::int64_t>& counts) {
    const std::int64_t n = g.root_order();
    for (auto& s : set) {
        std::int64_t e = character_exponent(g, alpha, s);
        if (sign < 0) e = (n - e) % n;
        counts[static_cast<std::size_t>((e + shift) % n)] += 1;
    }
}

}  // namespace detail

/// lambda_alpha (symmetric part), mu_alpha (skew part) and gamma = lambda + mu.
struct HsEigenvalue {
    CycloNum lambda;
    CycloNum mu;
    CycloNum gamma;
};

inline HsEigenvalue hs_eigenvalue_parts(const ConnectionSet& cs, const GroupElement& alpha) {
    const GroupSpec& g = cs.group();
    const std::int64_t n = g.root_order();
    std::vector<std::int64_t> lam(static_cast<std::size_t>(n), 0), mu(static_cast<std::size_t>(n), 0);
    detail::accumulate_characters(g, alpha, cs.sym_part(), 0, +1, lam);
    // w_6 psi(s) + w_6^5 psi(-s)
    detail::accumulate_characters(g, alpha, cs.skew_part(), n / 6, +1, mu);
    detail::accumulate_characters(g, alpha, cs.skew_part(), 5 * n / 6, -1, mu);
    HsEigenvalue r;
    r.lambda = CycloNum::from_counts(n, lam).reduce();
    r.mu = CycloNum::from_counts(n, mu).reduce();
    r.gamma = (r.lambda + r.mu).reduce();
    return r;
}

inline CycloNum hs_eigenvalue(const ConnectionSet& cs, const GroupElement& alpha) {
    return hs_eigenvalue_parts(cs, alpha).gamma;
}

/// sum_{s in S} psi_alpha(s), an eigenvalue of the (0,1)-adjacency matrix.
inline CycloNum a_eigenvalue(const ConnectionSet& cs, const GroupElement& alpha) {
    const GroupSpec& g = cs.group();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(g.root_order()), 0);
    detail::accumulate_characters(g, alpha, cs.members(), 0, +1, counts);
    return CycloNum::from_counts(g.root_order(), counts).reduce();
}

enum class SpectrumKind { hs, adjacency, simple_part, skew_part };

inline const char* to_string(SpectrumKind k) {
    switch (k) {
        case SpectrumKind::hs: return "hs";
        case SpectrumKind::adjacency: return "adjacency";
        case SpectrumKind::simple_part: return "simple_part";
        case SpectrumKind::skew_part: return "skew_part";
    }
    return "?";
}

struct ExactSpectrum {
    SpectrumKind kind = SpectrumKind::hs;
    /// (alpha, eigenvalue) in lexicographic alpha order; values reduced.
    std::vector<std::pair<GroupElement, CycloNum>> entries;
};

inline ExactSpectrum exact_spectrum(const ConnectionSet& cs, SpectrumKind kind) {
    ExactSpectrum sp;
    sp.kind = kind;
    for (auto& alpha : cs.group().elements()) {
        CycloNum value;
        if (kind == SpectrumKind::adjacency) {
            value = a_eigenvalue(cs, alpha);
        } else {
            HsEigenvalue parts = hs_eigenvalue_parts(cs, alpha);
            value = kind == SpectrumKind::hs            ? std::move(parts.gamma)
                    : kind == SpectrumKind::simple_part ? std::move(parts.lambda)
                                                        : std::move(parts.mu);
        }
        sp.entries.emplace_back(alpha, std::move(value));
    }
    return sp;
}

// ---------------------------------------------------------------------------
// Numeric oracle
// ---------------------------------------------------------------------------

namespace detail {

/// Cyclic Jacobi eigenvalues of a dense real symmetric matrix (row-major).
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n, double tol = 1e-12,
                                              int max_sweeps = 100) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) s += at(i, j) * at(i, j);
            }
        }
        return std::sqrt(s);
    };
    int sweep = 0;
    while (off_norm() >= tol) {
        if (sweep++ >= max_sweeps) throw oracle_failure("Jacobi eigensolver did not converge in 100 sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = 0.0;
                at(q, p) = 0.0;
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace detail

inline constexpr std::size_t numeric_oracle_max_vertices = 128;

/// Eigenvalues of the Hermitian matrix, ascending, from the real embedding
/// [[Re, -Im], [Im, Re]] whose spectrum is that of H with doubled multiplicities.
inline std::vector<double> numeric_hermitian_eigenvalues(const MixedGraphMatrices& m) {
    if (m.n > numeric_oracle_max_vertices) throw oracle_failure("numeric oracle limited to 128 vertices");
    const std::size_t n = m.n;
    const double half_sqrt3 = std::sqrt(3.0) / 2.0;
    const std::size_t dim = 2 * n;
    std::vector<double> a(dim * dim, 0.0);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            double re = 0.0, im = 0.0;
            switch (m.hermitian2[u][v]) {
                case HEntry::zero: break;
                case HEntry::one: re = 1.0; break;
                case HEntry::w6: re = 0.5; im = half_sqrt3; break;
                case HEntry::w6_5: re = 0.5; im = -half_sqrt3; break;
            }
            a[u * dim + v] = re;
            a[(u + n) * dim + (v + n)] = re;
            a[u * dim + (v + n)] = -im;
            a[(u + n) * dim + v] = im;
        }
    }
    const std::vector<double> doubled = detail::jacobi_eigenvalues(std::move(a), dim);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = doubled[2 * i], y = doubled[2 * i + 1];
        if (std::abs(x - y) > 1e-9) {
            std::ostringstream msg;
            msg << "unpaired eigenvalues in real embedding: " << x << " vs " << y;
            throw oracle_failure(msg.str());
        }
        out.push_back(0.5 * (x + y));
    }
    return out;
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

/// Undirected edges for the symmetric part, arcs for the skew part.
inline std::string to_dot(const ConnectionSet& cs) {
    const GroupSpec& g = cs.group();
    std::ostringstream out;
    out << "digraph \"Cay(" << g.to_string() << ")\" {\n";
    const auto elems = g.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        out << "  v" << i << " [label=\"" << to_string(elems[i]) << "\"];\n";
    }
    for (std::size_t u = 0; u < elems.size(); ++u) {
        for (auto& s : cs.sym_part()) {
            const std::size_t v = static_cast<std::size_t>(g.index_of(g.add(elems[u], s)));
            if (u < v) out << "  v" << u << " -> v" << v << " [dir=none];\n";
        }
        for (auto& s : cs.skew_part()) {
            const std::size_t v = static_cast<std::size_t>(g.index_of(g.add(elems[u], s)));
            out << "  v" << u << " -> v" << v << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace hsint
