#include <hsint/integrality.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>

using namespace hsint;

namespace {

GroupElement el(std::initializer_list<std::int64_t> c) { return GroupElement{std::vector<std::int64_t>(c)}; }

ElementSet cyc(std::initializer_list<std::int64_t> xs) {
    ElementSet s;
    for (auto x : xs) s.insert(el({x}));
    return s;
}

std::complex<double> psi(const GroupSpec& g, const GroupElement& alpha, const GroupElement& x) {
    double angle = 0.0;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        angle += 2 * std::numbers::pi * static_cast<double>(alpha.coords[j] * x.coords[j]) / static_cast<double>(g.moduli()[j]);
    }
    return std::polar(1.0, angle);
}

const std::complex<double> kW6 = std::polar(1.0, std::numbers::pi / 3);
const std::complex<double> kISqrt3{0.0, std::sqrt(3.0)};

ElementSet subset_from_mask(const GroupSpec& g, std::uint64_t mask) {
    ElementSet s;
    for (std::int64_t i = 1; i < g.order(); ++i) {
        if ((mask >> (i - 1)) & 1u) s.insert(g.element_at(i));
    }
    return s;
}

const std::vector<std::vector<std::int64_t>> kCertificateGroups{{9}, {12}, {18}, {3, 9}};

}  // namespace

TEST(Certificate, Example) {
    auto g = make_group({3, 3});
    auto cv = certificate(g, el({0, 1}), el({2, 1}));
    EXPECT_EQ(cv.z_value, -2);
    EXPECT_EQ(cv.c_value, -1);
    EXPECT_EQ(cv.t_value, -3);
    EXPECT_EQ(cv.T_over_3, -1);
    EXPECT_TRUE(cv.parity_ok);
}

TEST(Certificate, TrivialCharacter) {
    for (auto& moduli : kCertificateGroups) {
        auto g = make_group(moduli);
        for (auto& x : gamma3(g)) {
            auto cv = certificate(g, x, g.zero());
            const auto k = static_cast<std::int64_t>(eclass_of(g, x).size());
            EXPECT_EQ(cv.z_value, k);
            EXPECT_EQ(cv.c_value, 2 * k);
            EXPECT_EQ(cv.t_value, 0);
            EXPECT_TRUE(cv.parity_ok);
        }
    }
}

TEST(Certificate, Z9HigherPowerOfThree) {
    // ord(1) = 9: psi_3(3) = 1, so T = 3 i sqrt3 (psi_3(1) - psi_3(-1)) = 3 (i sqrt3)^2 = -9.
    auto g = make_group({9});
    auto cv = certificate(g, el({1}), el({3}));
    EXPECT_EQ(cv.t_value, -9);
    EXPECT_TRUE(certificate_case_law_holds(g, cv));
    // psi_1(3) != 1 forces T = 0.
    EXPECT_EQ(certificate(g, el({1}), el({1})).t_value, 0);
}

TEST(Certificate, DomainError) {
    EXPECT_THROW(certificate(make_group({4}), el({1}), el({1})), domain_error);
    EXPECT_THROW(certificate(make_group({12}), el({4 * 1 + 2}), el({1})), domain_error);
}

// Numeric evaluation of the defining sums is an independent route to every value.
TEST(Certificate, MatchesNumericSumsAndIdentities) {
    for (auto& moduli : kCertificateGroups) {
        auto g = make_group(moduli);
        for (auto& x : gamma3(g)) {
            for (auto& alpha : g.elements()) {
                std::complex<double> z = 0.0, c = 0.0, t = 0.0;
                for (auto& s : eclass_of(g, x)) {
                    z += kW6 * psi(g, alpha, s) + std::conj(kW6) * psi(g, alpha, g.neg(s));
                    t += kISqrt3 * (psi(g, alpha, s) - psi(g, alpha, g.neg(s)));
                }
                for (auto& s : atom_of(g, x)) c += psi(g, alpha, s);
                auto cv = certificate(g, x, alpha);
                EXPECT_LT(std::abs(z - static_cast<double>(cv.z_value)), 1e-9);
                EXPECT_LT(std::abs(c - static_cast<double>(cv.c_value)), 1e-9);
                EXPECT_LT(std::abs(t - static_cast<double>(cv.t_value)), 1e-9);
                EXPECT_EQ(2 * cv.z_value, cv.c_value + cv.t_value);
                ASSERT_TRUE(cv.T_over_3);
                EXPECT_TRUE(cv.parity_ok);
                EXPECT_TRUE(certificate_case_law_holds(g, cv)) << g.to_string() << " x=" << to_string(x)
                                                                << " alpha=" << to_string(alpha);
            }
        }
    }
}

// For ord(x) = 3m, 3 !| m and psi_alpha(m x) = w_3^e (e = 1, 2):
// T = -3 C_{3x} when (m mod 3, e) is (1, 1) or (2, 2), and +3 C_{3x} otherwise.
TEST(Certificate, SignedCaseLawForOrderThreeTimesCoprime) {
    for (auto moduli : std::vector<std::vector<std::int64_t>>{{12}, {6}, {15}, {3, 4}, {2, 21}}) {
        auto g = make_group(moduli);
        const auto n = g.root_order();
        for (auto& x : gamma3(g)) {
            const auto k = order_of(g, x);
            if (k % 9 == 0) continue;
            const auto m = k / 3;
            for (auto& alpha : g.elements()) {
                const auto e = character_exponent(g, alpha, g.scale(m, x));
                const auto cv = certificate(g, x, alpha);
                if (e == 0) {
                    EXPECT_EQ(cv.t_value, 0);
                    continue;
                }
                const int cube = static_cast<int>(e / (n / 3));
                const auto c3 = *as_integer(atom_character_sum(g, g.scale(3, x), alpha));
                const int sign = ((m % 3 == 1) == (cube == 1)) ? -1 : 1;
                EXPECT_EQ(cv.t_value, sign * 3 * c3) << g.to_string() << " x=" << to_string(x);
            }
        }
    }
}

TEST(FGValues, Examples) {
    auto g = make_group({3, 3});
    ConnectionSet b(g, {el({0, 1}), el({1, 0}), el({2, 0})});
    auto fg = f_g_values(b, g.zero());
    EXPECT_EQ(as_integer(fg.f), 2);
    EXPECT_EQ(as_integer(fg.g), 1);
    EXPECT_EQ(as_integer(hs_eigenvalue(b, g.zero())), 3);

    auto z12 = make_group({12});
    ConnectionSet sym(z12, cyc({1, 11, 4, 8}));
    for (auto& alpha : z12.elements()) {
        auto v = f_g_values(sym, alpha);
        EXPECT_TRUE(v.g.is_zero());
        EXPECT_EQ(v.f, a_eigenvalue(sym, alpha));
    }
}

TEST(FGValues, RealAndRecombineToAdjacencyEigenvalue) {
    std::mt19937 rng(41);
    for (auto moduli : std::vector<std::vector<std::int64_t>>{{9}, {12}, {2, 6}, {3, 3}}) {
        auto g = make_group(moduli);
        for (int t = 0; t < 20; ++t) {
            ElementSet s;
            for (auto& x : g.elements()) {
                if (!g.is_zero(x) && rng() % 2) s.insert(x);
            }
            ConnectionSet cs(g, s);
            for (auto& alpha : g.elements()) {
                auto fg = f_g_values(cs, alpha);
                auto fg_neg = f_g_values(cs, g.neg(alpha));
                EXPECT_TRUE((fg.f - conj(fg.f)).is_zero());
                EXPECT_TRUE((fg.g - conj(fg.g)).is_zero());
                EXPECT_EQ(fg.f, fg_neg.f);
                const CycloNum rebuilt = fg.f + fg.g + root(3, 1) * (fg.g - fg_neg.g);
                EXPECT_EQ(rebuilt, a_eigenvalue(cs, alpha));
            }
        }
    }
}

TEST(FGValues, OrientedHsIntegralSetsOnZ9) {
    auto g = make_group({9});
    int oriented = 0;
    for (auto& s : enumerate_hs_integral(g)) {
        ConnectionSet cs(g, s);
        if (!cs.sym_part().empty()) continue;
        ++oriented;
        for (auto& alpha : g.elements()) {
            auto fg = f_g_values(cs, alpha);
            EXPECT_TRUE(fg.f.is_zero());
            EXPECT_TRUE(as_integer(fg.g));
        }
    }
    EXPECT_EQ(oriented, 9);  // 3 skew choices per atom, two atoms
}

TEST(Classify, Examples) {
    auto g = make_group({3, 3});
    auto r = classify(g, {el({0, 1}), el({1, 0}), el({2, 0})});
    EXPECT_TRUE(r.hs_verdict_characterization);
    EXPECT_TRUE(r.hs_verdict_spectral);
    EXPECT_TRUE(r.eisenstein_verdict_spectral);
    EXPECT_TRUE(r.consistency);
    std::multiset<std::int64_t> values;
    for (auto& [a, z] : r.hs_spectrum.entries) values.insert(*as_integer(z));
    EXPECT_EQ(values, (std::multiset<std::int64_t>{3, 3, 0, 0, 0, 0, 0, -3, -3}));
    ASSERT_TRUE(r.sym_decomposition);
    EXPECT_EQ(r.sym_decomposition->representatives, (std::vector<GroupElement>{el({1, 0})}));
    ASSERT_TRUE(r.skew_decomposition);
    EXPECT_EQ(r.skew_decomposition->representatives, (std::vector<GroupElement>{el({0, 1})}));

    auto z4 = classify(make_group({4}), cyc({1}));
    EXPECT_FALSE(z4.hs_verdict_characterization);
    EXPECT_FALSE(z4.hs_verdict_spectral);
    EXPECT_FALSE(z4.eisenstein_verdict_spectral);
    EXPECT_TRUE(z4.consistency);

    auto z12 = classify(make_group({12}), cyc({1, 5}));
    EXPECT_FALSE(z12.skew_decomposition);
    EXPECT_FALSE(z12.hs_verdict_spectral);
    bool non_integer = false;
    for (auto& [a, z] : z12.hs_spectrum.entries) non_integer = non_integer || !as_integer(z);
    EXPECT_TRUE(non_integer);
    EXPECT_TRUE(z12.consistency);

    EXPECT_THROW(classify(g, {g.zero()}), invalid_input);
}

TEST(Classify, OrientedWithoutGamma3OnlyEmptySet) {
    for (auto moduli : std::vector<std::vector<std::int64_t>>{{4}, {8}, {2, 4}, {5}, {10}}) {
        auto g = make_group(moduli);
        ASSERT_TRUE(gamma3(g).empty());
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (g.order() - 1)); ++mask) {
            ElementSet s = subset_from_mask(g, mask);
            if (!ConnectionSet(g, s).sym_part().empty()) continue;
            auto r = classify(g, s);
            EXPECT_EQ(r.hs_verdict_spectral, s.empty());
            EXPECT_TRUE(r.consistency);
        }
    }
}

TEST(Enumerate, Counts) {
    EXPECT_EQ(enumerate_hs_integral(make_group({9})).size(), 16u);
    EXPECT_EQ(enumerate_hs_integral(make_group({3, 3})).size(), 256u);
    auto z4 = enumerate_hs_integral(make_group({4}));
    EXPECT_EQ(z4, (std::vector<ElementSet>{{}, cyc({1, 3}), cyc({2}), cyc({1, 2, 3})}));
}

TEST(Enumerate, MatchesExhaustiveClassification) {
    for (std::int64_t n = 1; n <= 12; ++n) {
        for (auto moduli : std::vector<std::vector<std::int64_t>>{{n}, {2, n}, {3, n}}) {
            auto g = make_group(moduli);
            if (g.order() > 12) continue;
            std::set<ElementSet> constructive;
            for (auto& s : enumerate_hs_integral(g)) EXPECT_TRUE(constructive.insert(s).second) << "duplicate";
            std::set<ElementSet> swept;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (g.order() - 1)); ++mask) {
                ElementSet s = subset_from_mask(g, mask);
                if (classify(g, s).hs_verdict_spectral) swept.insert(s);
            }
            EXPECT_EQ(constructive, swept) << g.to_string();
        }
    }
}

TEST(Enumerate, BudgetTruncates) {
    std::vector<ElementSet> got;
    auto res = enumerate_hs_integral(make_group({3, 3}), 10, [&](const ElementSet& s) { got.push_back(s); });
    EXPECT_TRUE(res.truncated);
    EXPECT_EQ(res.emitted, 10u);
    EXPECT_EQ(res.total, 256u);
    EXPECT_EQ(got.size(), 10u);
    auto full = enumerate_hs_integral(make_group({9}), 16, [](const ElementSet&) {});
    EXPECT_FALSE(full.truncated);
    EXPECT_EQ(full.emitted, 16u);
}

TEST(Verify, ExhaustiveSmallGroups) {
    auto z6 = verify_theorems(make_group({6}), 4096);
    EXPECT_TRUE(z6.exhaustive);
    EXPECT_EQ(z6.subsets_tested, 32u);
    EXPECT_TRUE(z6.counterexamples.empty());
    auto z9 = verify_theorems(make_group({9}), 4096);
    EXPECT_EQ(z9.subsets_tested, 256u);
    EXPECT_EQ(z9.hs_integral_count, 16u);
    EXPECT_TRUE(z9.counterexamples.empty());
    EXPECT_GT(z9.certificates_checked, 0u);
}

TEST(Verify, SampledSweepIsDeterministicAndParallelSafe) {
    auto g = make_group({5, 5});
    auto a = verify_theorems(g, 60, 1234, 1);
    auto b = verify_theorems(g, 60, 1234, 4);
    EXPECT_FALSE(a.exhaustive);
    EXPECT_EQ(a.subsets_tested, 60u);
    EXPECT_EQ(a.seed, 1234u);
    EXPECT_EQ(a.hs_integral_count, b.hs_integral_count);
    EXPECT_TRUE(a.counterexamples.empty());
    for (std::uint64_t i = 0; i < 5; ++i) EXPECT_EQ(sweep_subset(g, i, false, 1234), sweep_subset(g, i, false, 1234));
    EXPECT_NE(sweep_subset(g, 0, false, 1234), sweep_subset(g, 0, false, 99));
}

TEST(Verify, SubsetDetectsNothingOnHsIntegralSets) {
    auto g = make_group({3, 6});
    for (auto& s : enumerate_hs_integral(g, 200)) {
        auto v = verify_subset(g, s);
        EXPECT_TRUE(v.hs_integral);
        EXPECT_TRUE(v.failures.empty());
    }
}
