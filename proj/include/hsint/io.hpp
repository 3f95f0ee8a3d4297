#pragma once

/**
 * @file io.hpp
 * @brief Text parsing of groups/connection sets and JSON serialization of reports.
 *
 * Group strings are "n1xn2x...xnk" ("12", "3x3"). Connection sets are
 * comma-separated tuples "(a,b),(c,d)" or, for cyclic groups, bare integers
 * "1,5". Values are reduced modulo the factor unless strict parsing is asked for.
 */

#include <hsint/abelian_group.hpp>
#include <hsint/atoms.hpp>
#include <hsint/cayley.hpp>
#include <hsint/cyclotomic.hpp>
#include <hsint/integrality.hpp>

#include <nlohmann/json.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hsint {

/// Malformed text input; position() is the 0-based character offset.
class parse_error : public invalid_input {
public:
    parse_error(const std::string& what, std::size_t pos)
        : invalid_input(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) throw parse_error(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    std::int64_t integer(bool allow_sign = true) {
        skip_ws();
        const std::size_t start = pos_;
        bool neg = false;
        if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw parse_error("expected integer", start);
        }
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > (std::int64_t{1} << 40)) throw parse_error("integer too large", start);
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }
    std::size_t pos() const noexcept { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline GroupSpec parse_group(std::string_view text, std::int64_t size_cap = default_group_size_cap) {
    detail::Scanner sc(text);
    std::vector<std::int64_t> moduli;
    for (;;) {
        const std::size_t at = (sc.skip_ws(), sc.pos());
        const std::int64_t n = sc.integer(false);
        if (n < 1) throw parse_error("cyclic modulus must be >= 1", at);
        moduli.push_back(n);
        if (sc.done()) break;
        if (sc.peek('x') || sc.peek('X')) {
            sc.expect(sc.peek('x') ? 'x' : 'X');
            continue;
        }
        throw parse_error("expected 'x' between cyclic factors", sc.pos());
    }
    return GroupSpec(std::move(moduli), size_cap);
}

/// Parses a connection set; rejects the identity, arity mismatches and, when
/// strict, coordinates outside [0, n_j).
inline ElementSet parse_set(std::string_view text, const GroupSpec& g, bool strict = false) {
    detail::Scanner sc(text);
    ElementSet out;
    if (sc.done()) return out;
    for (;;) {
        const std::size_t start = (sc.skip_ws(), sc.pos());
        std::vector<std::int64_t> coords;
        if (sc.peek('(')) {
            sc.expect('(');
            coords.push_back(sc.integer());
            while (sc.peek(',')) {
                sc.expect(',');
                coords.push_back(sc.integer());
            }
            sc.expect(')');
        } else {
            coords.push_back(sc.integer());
        }
        if (coords.size() != g.rank()) {
            throw parse_error("element has " + std::to_string(coords.size()) + " coordinates but group " +
                                  g.to_string() + " has rank " + std::to_string(g.rank()),
                              start);
        }
        if (strict) {
            for (std::size_t j = 0; j < coords.size(); ++j) {
                if (coords[j] < 0 || coords[j] >= g.moduli()[j]) {
                    throw parse_error("coordinate " + std::to_string(coords[j]) + " out of range for Z_" +
                                          std::to_string(g.moduli()[j]),
                                      start);
                }
            }
        }
        GroupElement x = g.element(std::move(coords));
        if (g.is_zero(x)) throw parse_error("identity element excluded from connection sets", start);
        out.insert(std::move(x));
        if (sc.done()) break;
        sc.expect(',');
    }
    return out;
}

/// Inverse of parse_set: "(a,b),(c,d)" or "1,5" for cyclic groups.
inline std::string format_set(const GroupSpec& g, const ElementSet& s) {
    std::string out;
    for (auto& x : s) {
        if (!out.empty()) out += ',';
        out += g.rank() == 1 ? std::to_string(x.coords[0]) : to_string(x);
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

using json = nlohmann::ordered_json;

inline double round12(double v) {
    const double r = std::round(v * 1e12) / 1e12;
    return r == 0.0 ? 0.0 : r;
}

inline json to_json(const GroupElement& x) { return json(x.coords); }

inline json to_json(const ElementSet& s) {
    json arr = json::array();
    for (auto& x : s) arr.push_back(to_json(x));
    return arr;
}

/// {"order": N, "coeffs": ["p/q", ...], "decimal": [re, im]} in canonical form.
inline json to_json(const CycloNum& z) {
    const CycloNum r = z.reduce();
    const std::int64_t deg = euler_phi(r.order());
    json coeffs = json::array();
    for (std::int64_t j = 0; j < deg; ++j) coeffs.push_back(rational_string(r.coeff(j)));
    const auto v = r.evaluate();
    return json{{"order", r.order()}, {"coeffs", coeffs}, {"decimal", {round12(v.real()), round12(v.imag())}}};
}

inline json to_json(const std::optional<AtomDecomposition>& d) {
    if (!d) return nullptr;
    json arr = json::array();
    for (std::size_t i = 0; i < d->classes.size(); ++i) {
        arr.push_back({{"representative", to_json(d->representatives[i])}, {"members", to_json(d->classes[i])}});
    }
    return arr;
}

inline json to_json(const ExactSpectrum& sp) {
    json entries = json::array();
    for (auto& [alpha, value] : sp.entries) {
        json e{{"alpha", to_json(alpha)}, {"value", to_json(value)}};
        if (auto n = as_integer(value)) {
            e["integer"] = *n;
        } else {
            e["integer"] = nullptr;
        }
        if (auto ab = as_eisenstein(value)) {
            e["eisenstein"] = {ab->first, ab->second};
        } else {
            e["eisenstein"] = nullptr;
        }
        entries.push_back(std::move(e));
    }
    return json{{"kind", to_string(sp.kind)}, {"entries", entries}};
}

inline json to_json(const ClassificationReport& r) {
    return json{
        {"group", r.group.to_string()},
        {"set", to_json(r.set.members())},
        {"hs_integral", r.hs_verdict_spectral},
        {"eisenstein_integral", r.eisenstein_verdict_spectral},
        {"sym_atoms", to_json(r.sym_decomposition)},
        {"skew_classes", to_json(r.skew_decomposition)},
        {"hs_spectrum", to_json(r.hs_spectrum)},
        {"a_spectrum", to_json(r.a_spectrum)},
        {"consistent", r.consistency},
        {"verdicts",
         {{"characterization", r.hs_verdict_characterization},
          {"hs_spectral", r.hs_verdict_spectral},
          {"eisenstein_spectral", r.eisenstein_verdict_spectral}}},
    };
}

inline json to_json(const VerificationReport& r) {
    json ces = json::array();
    for (auto& c : r.counterexamples) {
        ces.push_back({{"set", to_json(c.set)}, {"check", c.check}, {"detail", c.detail}});
    }
    return json{
        {"group", r.group.to_string()},
        {"subsets_tested", r.subsets_tested},
        {"hs_integral_count", r.hs_integral_count},
        {"counterexamples", ces},
        {"seed", r.seed},
        {"exhaustive", r.exhaustive},
        {"certificates_checked", r.certificates_checked},
    };
}

/// {"adjacency": [["0","1",...],...], "hermitian2": [["0","w6","w6^5","1",...],...]}
inline json to_json(const MixedGraphMatrices& m) {
    json adj = json::array(), herm = json::array();
    for (std::size_t u = 0; u < m.n; ++u) {
        json ar = json::array(), hr = json::array();
        for (std::size_t v = 0; v < m.n; ++v) {
            ar.push_back(m.adjacency[u][v] ? "1" : "0");
            hr.push_back(entry_code(m.hermitian2[u][v]));
        }
        adj.push_back(std::move(ar));
        herm.push_back(std::move(hr));
    }
    return json{{"adjacency", adj}, {"hermitian2", herm}};
}

}  // namespace hsint
