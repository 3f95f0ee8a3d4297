#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(w_N).
 *
 * A CycloNum of order N stores a rational coefficient vector c of length N
 * with value sum_j c[j] w_N^j. Storage is not canonical (w_N^0..w_N^{N-1}
 * are linearly dependent); reduce() returns the remainder modulo the N-th
 * cyclotomic polynomial, which is the unique representation on the power
 * basis 1, w_N, ..., w_N^{phi(N)-1}. Equality and membership tests go
 * through that canonical form.
 *
 * Mixed-order operands are lifted to the lcm of the orders by the exponent
 * map j -> j * (L / N).
 */

#include <hsint/abelian_group.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hsint {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rational_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline bool is_integral(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

inline std::int64_t euler_phi(std::int64_t m) {
    std::int64_t result = m;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// ---------------------------------------------------------------------------
// Polynomials with rational coefficients (index = degree).
// ---------------------------------------------------------------------------

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPolynomial monomial(std::int64_t degree, Rational c = 1) {
        std::vector<Rational> v(static_cast<std::size_t>(degree + 1));
        v.back() = std::move(c);
        return IntPolynomial(std::move(v));
    }

    /// Degree of the zero polynomial is -1.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(std::int64_t k) const {
        return (k >= 0 && k <= degree()) ? coeffs_[static_cast<std::size_t>(k)] : Rational(0);
    }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool has_integer_coeffs() const {
        for (auto& c : coeffs_) {
            if (!is_integral(c)) return false;
        }
        return true;
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
        return IntPolynomial(std::move(v));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPolynomial(std::move(v));
    }

    /// Quotient and remainder by a nonzero divisor.
    std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& d) const {
        if (d.coeffs_.empty()) throw domain_error("polynomial division by zero");
        std::vector<Rational> rem = coeffs_;
        const std::int64_t dd = d.degree();
        if (degree() < dd) return {IntPolynomial{}, *this};
        std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
        const Rational& lead = d.coeffs_.back();
        for (std::int64_t k = degree(); k >= dd; --k) {
            Rational c = rem[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            if (lead != 1) c /= lead;
            quot[static_cast<std::size_t>(k - dd)] = c;
            for (std::int64_t i = 0; i <= dd; ++i) {
                rem[static_cast<std::size_t>(k - dd + i)] -= c * d.coeffs_[static_cast<std::size_t>(i)];
            }
        }
        return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

namespace detail {

struct PhiCache {
    std::mutex mutex;
    std::map<std::int64_t, IntPolynomial> table;
};

inline PhiCache& phi_cache() {
    static PhiCache cache;
    return cache;
}

}  // namespace detail

/// m-th cyclotomic polynomial, (x^m - 1) / prod_{d | m, d < m} Phi_d.
/// Memoized; safe to call from several threads.
inline const IntPolynomial& cyclotomic_poly(std::int64_t m) {
    if (m < 1) throw domain_error("cyclotomic_poly requires m >= 1");
    auto& cache = detail::phi_cache();
    {
        std::lock_guard lock(cache.mutex);
        if (auto it = cache.table.find(m); it != cache.table.end()) return it->second;
    }
    IntPolynomial p = IntPolynomial::monomial(m) - IntPolynomial::monomial(0);
    for (std::int64_t d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = p.divmod(cyclotomic_poly(d));
        if (r.degree() >= 0) throw std::logic_error("non-exact cyclotomic division");
        p = std::move(q);
    }
    std::lock_guard lock(cache.mutex);
    return cache.table.emplace(m, std::move(p)).first->second;
}

// ---------------------------------------------------------------------------
// CycloNum
// ---------------------------------------------------------------------------

class CycloNum {
public:
    /// Zero of Q(w_1) = Q.
    CycloNum() : CycloNum(1) {}

    explicit CycloNum(std::int64_t order) : order_(order) {
        if (order < 1) throw invalid_input("cyclotomic order must be >= 1");
        coeffs_.assign(static_cast<std::size_t>(order), Rational(0));
    }

    CycloNum(std::int64_t order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
        if (order < 1) throw invalid_input("cyclotomic order must be >= 1");
        if (coeffs_.size() != static_cast<std::size_t>(order)) {
            throw invalid_input("coefficient vector length must equal the cyclotomic order");
        }
    }

    /// Integer-weighted sum of N-th roots of unity, counts[j] * w_N^j.
    static CycloNum from_counts(std::int64_t order, const std::vector<std::int64_t>& counts) {
        CycloNum z(order);
        for (std::size_t j = 0; j < counts.size(); ++j) {
            if (counts[j] != 0) z.coeffs_[j % z.coeffs_.size()] += counts[j];
        }
        return z;
    }

    static CycloNum rational(std::int64_t order, const Rational& value) {
        CycloNum z(order);
        z.coeffs_[0] = value;
        return z;
    }

    std::int64_t order() const noexcept { return order_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& coeff(std::int64_t j) const { return coeffs_[static_cast<std::size_t>(j)]; }

    /// Same value in Q(w_L) for a multiple L of the order.
    CycloNum lift(std::int64_t target) const {
        if (target == order_) return *this;
        if (target % order_ != 0) throw domain_error("lift target must be a multiple of the order");
        const std::int64_t step = target / order_;
        CycloNum z(target);
        for (std::int64_t j = 0; j < order_; ++j) z.coeffs_[static_cast<std::size_t>(j * step)] = coeffs_[j];
        return z;
    }

    CycloNum& operator+=(const CycloNum& o) {
        if (o.order_ != order_) return *this = *this + o;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
        return *this;
    }

    CycloNum& operator-=(const CycloNum& o) {
        if (o.order_ != order_) return *this = *this - o;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
        return *this;
    }

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b) {
        const std::int64_t l = std::lcm(a.order_, b.order_);
        CycloNum r = a.lift(l);
        const CycloNum bl = b.lift(l);
        for (std::size_t j = 0; j < r.coeffs_.size(); ++j) r.coeffs_[j] += bl.coeffs_[j];
        return r;
    }

    friend CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

    friend CycloNum operator-(const CycloNum& a) {
        CycloNum r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    /// Product in Z[x]/(x^L - 1), then not reduced.
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        const std::int64_t l = std::lcm(a.order_, b.order_);
        const CycloNum al = a.lift(l), bl = b.lift(l);
        CycloNum r(l);
        const auto n = static_cast<std::size_t>(l);
        for (std::size_t i = 0; i < n; ++i) {
            if (al.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (bl.coeffs_[j] == 0) continue;
                r.coeffs_[(i + j) % n] += al.coeffs_[i] * bl.coeffs_[j];
            }
        }
        return r;
    }

    friend CycloNum operator*(const Rational& s, const CycloNum& z) {
        CycloNum r = z;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }

    /// Complex conjugate: w_N^j -> w_N^{N-j}.
    CycloNum conj() const {
        CycloNum r(order_);
        for (std::int64_t j = 0; j < order_; ++j) {
            r.coeffs_[static_cast<std::size_t>((order_ - j) % order_)] = coeffs_[static_cast<std::size_t>(j)];
        }
        return r;
    }

    /// Canonical form: remainder modulo Phi_N, supported on exponents < phi(N).
    CycloNum reduce() const {
        const IntPolynomial& phi = cyclotomic_poly(order_);
        const std::int64_t deg = phi.degree();
        std::vector<std::pair<std::int64_t, Rational>> terms;
        for (std::int64_t i = 0; i < deg; ++i) {
            if (phi.coeff(i) != 0) terms.emplace_back(i, phi.coeff(i));
        }
        CycloNum r = *this;
        // Phi_N is monic: x^deg = -sum_i phi_i x^i.
        for (std::int64_t k = order_ - 1; k >= deg; --k) {
            Rational c = r.coeffs_[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            r.coeffs_[static_cast<std::size_t>(k)] = 0;
            for (auto& [i, p] : terms) r.coeffs_[static_cast<std::size_t>(k - deg + i)] -= c * p;
        }
        return r;
    }

    bool is_zero() const {
        const CycloNum r = reduce();
        for (auto& c : r.coeffs_) {
            if (c != 0) return false;
        }
        return true;
    }

    friend bool operator==(const CycloNum& a, const CycloNum& b) { return (a - b).is_zero(); }

    /// Floating-point value at w_N = exp(2 pi i / N).
    std::complex<double> evaluate() const {
        std::complex<double> acc = 0.0;
        for (std::int64_t j = 0; j < order_; ++j) {
            const Rational& c = coeffs_[static_cast<std::size_t>(j)];
            if (c == 0) continue;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(order_);
            acc += static_cast<double>(c) * std::polar(1.0, angle);
        }
        return acc;
    }

private:
    std::int64_t order_;
    std::vector<Rational> coeffs_;
};

/// w_N^{j mod N}
inline CycloNum root(std::int64_t order, std::int64_t j) {
    if (order < 1) throw invalid_input("root order must be >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(order));
    j %= order;
    if (j < 0) j += order;
    c[static_cast<std::size_t>(j)] = 1;
    return CycloNum(order, std::move(c));
}

inline CycloNum reduce(const CycloNum& z) { return z.reduce(); }
inline CycloNum conj(const CycloNum& z) { return z.conj(); }

/// The rational value of z if z lies in Q.
inline std::optional<Rational> as_rational(const CycloNum& z) {
    const CycloNum r = z.reduce();
    for (std::int64_t j = 1; j < r.order(); ++j) {
        if (r.coeff(j) != 0) return std::nullopt;
    }
    return r.coeff(0);
}

/// The integer value of z if z lies in Z.
inline std::optional<std::int64_t> as_integer(const CycloNum& z) {
    auto q = as_rational(z);
    if (!q || !is_integral(*q)) return std::nullopt;
    return static_cast<std::int64_t>(boost::multiprecision::numerator(*q));
}

/// Rational (a, b) with z = a + b w_3, if z lies in Q(w_3).
inline std::optional<std::pair<Rational, Rational>> as_eisenstein_rational(const CycloNum& z) {
    const std::int64_t l = std::lcm<std::int64_t>(z.order(), 3);
    const CycloNum zr = z.lift(l).reduce();
    const CycloNum w3 = root(l, l / 3).reduce();
    // w_3 is irrational, so its canonical form has some nonzero coefficient at j >= 1.
    std::int64_t pivot = -1;
    for (std::int64_t j = 1; j < l; ++j) {
        if (w3.coeff(j) != 0) {
            pivot = j;
            break;
        }
    }
    if (pivot < 0) throw std::logic_error("w_3 reduced to a rational");
    const Rational b = zr.coeff(pivot) / w3.coeff(pivot);
    const Rational a = zr.coeff(0) - b * w3.coeff(0);
    for (std::int64_t j = 1; j < l; ++j) {
        if (zr.coeff(j) != b * w3.coeff(j)) return std::nullopt;
    }
    return std::pair{a, b};
}

/// Integers (a, b) with z = a + b w_3, if z is an Eisenstein integer.
inline std::optional<std::pair<std::int64_t, std::int64_t>> as_eisenstein(const CycloNum& z) {
    auto ab = as_eisenstein_rational(z);
    if (!ab || !is_integral(ab->first) || !is_integral(ab->second)) return std::nullopt;
    return std::pair{static_cast<std::int64_t>(boost::multiprecision::numerator(ab->first)),
                     static_cast<std::int64_t>(boost::multiprecision::numerator(ab->second))};
}

// ---------------------------------------------------------------------------
// Factorization Phi_m = Phi^1_{m,3} Phi^2_{m,3} over Q(w_3), for 3 | m.
// ---------------------------------------------------------------------------

/// Polynomial with coefficients in Q(w_N), index = degree.
using CycloPolynomial = std::vector<CycloNum>;

inline CycloPolynomial multiply(const CycloPolynomial& a, const CycloPolynomial& b) {
    if (a.empty() || b.empty()) return {};
    CycloPolynomial out(a.size() + b.size() - 1, CycloNum(a.front().order()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    for (auto& c : out) c = c.reduce();
    return out;
}

/// prod_{a in G^r_{m,3}(1)} (x - w_m^a) for r = 1, 2, expanded in Q(w_N).
inline std::pair<CycloPolynomial, CycloPolynomial> phi3_factors(std::int64_t m, std::int64_t big_n) {
    if (m < 3 || m % 3 != 0) throw domain_error("phi3_factors requires m divisible by 3");
    if (big_n < 1 || big_n % m != 0) throw domain_error("phi3_factors requires m to divide N");
    auto build = [&](std::int64_t residue) {
        CycloPolynomial p{CycloNum::rational(big_n, 1)};
        for (std::int64_t a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1 || a % 3 != residue) continue;
            CycloPolynomial linear{-root(big_n, a * (big_n / m)), CycloNum::rational(big_n, 1)};
            p = multiply(p, linear);
        }
        return p;
    };
    return {build(1), build(2)};
}

/// Phi_m with coefficients embedded in Q(w_N).
inline CycloPolynomial lift_polynomial(const IntPolynomial& p, std::int64_t big_n) {
    CycloPolynomial out;
    for (auto& c : p.coeffs()) out.push_back(CycloNum::rational(big_n, c));
    return out;
}

inline bool equal(const CycloPolynomial& a, const CycloPolynomial& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] == b[i])) return false;
    }
    return true;
}

}  // namespace hsint
