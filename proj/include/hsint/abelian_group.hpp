#pragma once

/**
 * @file abelian_group.hpp
 * @brief Finite abelian groups Z_{n_1} x ... x Z_{n_k} and their characters.
 *
 * Elements are coordinate vectors reduced modulo the cyclic factors. Every
 * character value psi_alpha(x) is a root of unity, represented here by its
 * exponent with respect to one common root order N = lcm(6, exp(G)), so all
 * character sums (and their products with sixth roots of unity) live in the
 * single field Q(w_N).
 */

#include <cstddef>
#include <cstdint>
#include <compare>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsint {

/// Thrown for malformed user input (bad moduli, bad element tuples, ...).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation is called outside its mathematical domain.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr std::int64_t default_group_size_cap = 4096;

struct GroupElement {
    std::vector<std::int64_t> coords;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

using ElementSet = std::set<GroupElement>;

class GroupSpec {
public:
    explicit GroupSpec(std::vector<std::int64_t> moduli,
                       std::int64_t size_cap = default_group_size_cap)
        : moduli_(std::move(moduli)) {
        if (moduli_.empty()) throw invalid_input("group needs at least one cyclic factor");
        order_ = 1;
        exponent_ = 1;
        for (auto n : moduli_) {
            if (n < 1) throw invalid_input("cyclic modulus must be >= 1, got " + std::to_string(n));
            if (order_ > size_cap / n) {
                throw invalid_input("group order exceeds size cap " + std::to_string(size_cap));
            }
            order_ *= n;
            exponent_ = std::lcm(exponent_, n);
        }
        if (order_ > size_cap) throw invalid_input("group order exceeds size cap " + std::to_string(size_cap));
        root_order_ = std::lcm<std::int64_t>(6, exponent_);
    }

    const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
    std::size_t rank() const noexcept { return moduli_.size(); }
    std::int64_t order() const noexcept { return order_; }
    std::int64_t exponent() const noexcept { return exponent_; }
    /// N = lcm(6, exponent); every character value is a power of w_N.
    std::int64_t root_order() const noexcept { return root_order_; }

    GroupElement zero() const { return GroupElement{std::vector<std::int64_t>(rank(), 0)}; }

    /// Reduces arbitrary integer coordinates into canonical form.
    GroupElement element(std::vector<std::int64_t> coords) const {
        if (coords.size() != rank()) {
            throw invalid_input("element arity " + std::to_string(coords.size()) +
                                " does not match group rank " + std::to_string(rank()));
        }
        for (std::size_t j = 0; j < rank(); ++j) {
            coords[j] %= moduli_[j];
            if (coords[j] < 0) coords[j] += moduli_[j];
        }
        return GroupElement{std::move(coords)};
    }

    bool contains(const GroupElement& x) const noexcept {
        if (x.coords.size() != rank()) return false;
        for (std::size_t j = 0; j < rank(); ++j) {
            if (x.coords[j] < 0 || x.coords[j] >= moduli_[j]) return false;
        }
        return true;
    }

    /// Position of x in lexicographic order (first coordinate most significant).
    std::int64_t index_of(const GroupElement& x) const {
        std::int64_t idx = 0;
        for (std::size_t j = 0; j < rank(); ++j) idx = idx * moduli_[j] + x.coords[j];
        return idx;
    }

    GroupElement element_at(std::int64_t index) const {
        std::vector<std::int64_t> c(rank());
        for (std::size_t j = rank(); j-- > 0;) {
            c[j] = index % moduli_[j];
            index /= moduli_[j];
        }
        return GroupElement{std::move(c)};
    }

    /// All elements in lexicographic order.
    std::vector<GroupElement> elements() const {
        std::vector<GroupElement> out;
        out.reserve(static_cast<std::size_t>(order_));
        for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
        return out;
    }

    GroupElement add(const GroupElement& a, const GroupElement& b) const {
        GroupElement r = a;
        for (std::size_t j = 0; j < rank(); ++j) {
            r.coords[j] += b.coords[j];
            if (r.coords[j] >= moduli_[j]) r.coords[j] -= moduli_[j];
        }
        return r;
    }

    GroupElement neg(const GroupElement& a) const {
        GroupElement r = a;
        for (std::size_t j = 0; j < rank(); ++j) {
            if (r.coords[j] != 0) r.coords[j] = moduli_[j] - r.coords[j];
        }
        return r;
    }

    /// k-fold sum k*x; negative k gives multiples of -x.
    GroupElement scale(std::int64_t k, const GroupElement& x) const {
        GroupElement r = x;
        for (std::size_t j = 0; j < rank(); ++j) {
            const std::int64_t n = moduli_[j];
            r.coords[j] = static_cast<std::int64_t>((static_cast<__int128>(k % n) * x.coords[j]) % n);
            if (r.coords[j] < 0) r.coords[j] += n;
        }
        return r;
    }

    bool is_zero(const GroupElement& x) const noexcept {
        for (auto c : x.coords) {
            if (c != 0) return false;
        }
        return true;
    }

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) noexcept { return a.moduli_ == b.moduli_; }

    /// "n1xn2x...xnk"
    std::string to_string() const {
        std::string s;
        for (std::size_t j = 0; j < rank(); ++j) {
            if (j) s += 'x';
            s += std::to_string(moduli_[j]);
        }
        return s;
    }

private:
    std::vector<std::int64_t> moduli_;
    std::int64_t order_ = 1;
    std::int64_t exponent_ = 1;
    std::int64_t root_order_ = 6;
};

inline GroupSpec make_group(std::vector<std::int64_t> moduli,
                            std::int64_t size_cap = default_group_size_cap) {
    return GroupSpec(std::move(moduli), size_cap);
}

/// Least m >= 1 with m*x = 0, i.e. lcm_j n_j / gcd(n_j, x_j).
inline std::int64_t order_of(const GroupSpec& g, const GroupElement& x) {
    std::int64_t ord = 1;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        const std::int64_t n = g.moduli()[j];
        ord = std::lcm(ord, n / std::gcd(n, x.coords[j]));
    }
    return ord;
}

inline bool in_gamma3(const GroupSpec& g, const GroupElement& x) { return order_of(g, x) % 3 == 0; }

/// Gamma(3): elements whose order is divisible by 3.
inline ElementSet gamma3(const GroupSpec& g) {
    ElementSet out;
    for (auto& x : g.elements()) {
        if (in_gamma3(g, x)) out.insert(x);
    }
    return out;
}

/// M_r(x) = { k*x : 1 <= k <= ord(x), k = r mod 3 }.
inline ElementSet m_class(const GroupSpec& g, const GroupElement& x, int r) {
    if (r < 0 || r > 2) throw domain_error("m_class residue must be 0, 1 or 2");
    const std::int64_t ord = order_of(g, x);
    if (ord % 3 != 0) throw domain_error("m_class requires an element whose order is divisible by 3");
    ElementSet out;
    for (std::int64_t k = 1; k <= ord; ++k) {
        if (k % 3 == r) out.insert(g.scale(k, x));
    }
    return out;
}

/// Exponent e in [0, N) with psi_alpha(x) = w_N^e, N = g.root_order().
inline std::int64_t character_exponent(const GroupSpec& g, const GroupElement& alpha, const GroupElement& x) {
    const std::int64_t big_n = g.root_order();
    std::int64_t e = 0;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        const std::int64_t n = g.moduli()[j];
        const std::int64_t prod = (alpha.coords[j] * x.coords[j]) % n;
        e = (e + (big_n / n) * prod) % big_n;
    }
    return e;
}

/// Set negation -S.
inline ElementSet negate(const GroupSpec& g, const ElementSet& s) {
    ElementSet out;
    for (auto& x : s) out.insert(g.neg(x));
    return out;
}

inline std::string to_string(const GroupElement& x) {
    std::string s = "(";
    for (std::size_t j = 0; j < x.coords.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(x.coords[j]);
    }
    return s + ")";
}

}  // namespace hsint
