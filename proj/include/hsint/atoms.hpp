#pragma once

/**
 * @file atoms.hpp
 * @brief Atoms of the Boolean algebra generated by subgroups, and the finer
 *        classes <<x>> = { k x : gcd(k, ord x) = 1, k = 1 mod 3 }.
 *
 * An atom [x] is the set of generators of the cyclic subgroup <x>. For x in
 * Gamma(3) it splits as [x] = <<x>> u <<-x>>. Unions of atoms form B(G);
 * skew-symmetric unions of classes <<x>> form E(G).
 */

#include <hsint/abelian_group.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace hsint {

/// G_m(1) = { k : 1 <= k < m, gcd(k, m) = 1 }.
inline std::vector<std::int64_t> g_units(std::int64_t m) {
    if (m < 2) throw domain_error("g_units requires m >= 2");
    std::vector<std::int64_t> out;
    for (std::int64_t k = 1; k < m; ++k) {
        if (std::gcd(k, m) == 1) out.push_back(k);
    }
    return out;
}

/// G^r_{m,3}(1): units of Z_m congruent to r mod 3.
inline std::vector<std::int64_t> g_units_mod3(std::int64_t m, int r) {
    if (m < 3 || m % 3 != 0) throw domain_error("g_units_mod3 requires m divisible by 3");
    if (r != 1 && r != 2) throw domain_error("g_units_mod3 residue must be 1 or 2");
    std::vector<std::int64_t> out;
    for (auto k : g_units(m)) {
        if (k % 3 == r) out.push_back(k);
    }
    return out;
}

/// D_{g,3}: divisors of g not divisible by 3.
inline std::vector<std::int64_t> divisors_not3(std::int64_t g) {
    if (g < 1) throw domain_error("divisors_not3 requires g >= 1");
    std::vector<std::int64_t> out;
    for (std::int64_t k = 1; k <= g; ++k) {
        if (g % k == 0 && k % 3 != 0) out.push_back(k);
    }
    return out;
}

/// D^r_{g,3}: divisors of g congruent to r mod 3.
inline std::vector<std::int64_t> divisors_mod3(std::int64_t g, int r) {
    if (r != 1 && r != 2) throw domain_error("divisors_mod3 residue must be 1 or 2");
    std::vector<std::int64_t> out;
    for (auto k : divisors_not3(g)) {
        if (k % 3 == r) out.push_back(k);
    }
    return out;
}

/// [x] = { k x : k in G_{ord x}(1) }, with [0] = {0}.
inline ElementSet atom_of(const GroupSpec& g, const GroupElement& x) {
    const std::int64_t ord = order_of(g, x);
    if (ord == 1) return ElementSet{x};
    ElementSet out;
    for (auto k : g_units(ord)) out.insert(g.scale(k, x));
    return out;
}

/// <<x>> = { k x : k in G^1_{ord x,3}(1) }; x must lie in Gamma(3).
inline ElementSet eclass_of(const GroupSpec& g, const GroupElement& x) {
    const std::int64_t ord = order_of(g, x);
    if (ord % 3 != 0) throw domain_error("eclass_of requires an element of Gamma(3), got " + to_string(x));
    ElementSet out;
    for (auto k : g_units_mod3(ord, 1)) out.insert(g.scale(k, x));
    return out;
}

struct AtomDecomposition {
    enum class Kind { boolean_atoms, skew_classes };

    Kind kind = Kind::boolean_atoms;
    /// Lexicographically smallest element of each class, ascending.
    std::vector<GroupElement> representatives;
    std::vector<ElementSet> classes;
};

namespace detail {

/// Greedy closure: peel off the class of the smallest remaining element.
template <typename ClassOf>
std::optional<AtomDecomposition> decompose(const ElementSet& s, AtomDecomposition::Kind kind, ClassOf class_of) {
    AtomDecomposition d;
    d.kind = kind;
    ElementSet remaining = s;
    while (!remaining.empty()) {
        const GroupElement x = *remaining.begin();
        ElementSet cls = class_of(x);
        for (auto& y : cls) {
            if (remaining.erase(y) == 0) return std::nullopt;
        }
        d.representatives.push_back(*cls.begin());
        d.classes.push_back(std::move(cls));
    }
    return d;
}

}  // namespace detail

/// Decomposition of S into atoms when S lies in B(G).
inline std::optional<AtomDecomposition> in_boolean_algebra(const GroupSpec& g, const ElementSet& s) {
    return detail::decompose(s, AtomDecomposition::Kind::boolean_atoms,
                             [&](const GroupElement& x) { return atom_of(g, x); });
}

/// Decomposition of S into classes <<x>> when S lies in E(G).
inline std::optional<AtomDecomposition> in_skew_family(const GroupSpec& g, const ElementSet& s) {
    for (auto& x : s) {
        if (!in_gamma3(g, x)) return std::nullopt;
        if (s.contains(g.neg(x))) return std::nullopt;
    }
    return detail::decompose(s, AtomDecomposition::Kind::skew_classes,
                             [&](const GroupElement& x) { return eclass_of(g, x); });
}

/// Atoms partitioning G \ {0}, ordered by representative.
inline std::vector<ElementSet> nonzero_atoms(const GroupSpec& g) {
    std::vector<ElementSet> out;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (std::int64_t i = 1; i < g.order(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ElementSet a = atom_of(g, g.element_at(i));
        for (auto& y : a) seen[static_cast<std::size_t>(g.index_of(y))] = true;
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace hsint
