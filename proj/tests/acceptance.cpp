// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <hsint/hsint.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace hsint;

namespace {

using Clock = std::chrono::steady_clock;

GroupElement el(std::initializer_list<std::int64_t> c) { return GroupElement{std::vector<std::int64_t>(c)}; }

struct Outcome {
    bool ok = true;
    std::string note;
    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (o.ok && secs >= limit_seconds) o.fail("time limit " + std::to_string(limit_seconds) + " s exceeded");
    if (!o.ok) ++failures;
    std::printf("%s criterion %d: %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, secs, o.note.empty() ? "" : " - ",
                o.note.c_str());
    std::fflush(stdout);
}

// Eigenvalue at alpha within a spectrum listed in lex order.
const CycloNum& at(const ExactSpectrum& sp, const GroupElement& alpha) {
    for (auto& [a, z] : sp.entries) {
        if (a == alpha) return z;
    }
    throw std::logic_error("alpha missing from spectrum");
}

}  // namespace

int main() {
    const GroupSpec z33 = make_group({3, 3});

    criterion(1, "Example A mu values and HS verdicts", 1.0, [&](Outcome& o) {
        const ElementSet s{el({0, 1}), el({2, 0})};
        const auto r = classify(z33, s);
        const std::vector<std::int64_t> expected{2, -1, 2, 2, -1, 2, -1, -4, -1};
        const ConnectionSet cs(z33, s);
        const auto elems = z33.elements();
        for (std::size_t i = 0; i < elems.size(); ++i) {
            const auto mu = as_integer(hs_eigenvalue_parts(cs, elems[i]).mu);
            if (!mu || *mu != expected[i]) o.fail("mu mismatch at " + to_string(elems[i]));
            const auto gamma = as_integer(at(r.hs_spectrum, elems[i]));
            if (!gamma) o.fail("non-integer gamma at " + to_string(elems[i]));
        }
        if (!r.hs_verdict_spectral || !r.hs_verdict_characterization) o.fail("verdict not true by both routes");
    });

    const ElementSet example_b{el({0, 1}), el({1, 0}), el({2, 0})};

    criterion(2, "Example B HS spectrum multiset", 1.0, [&](Outcome& o) {
        const auto r = classify(z33, example_b);
        std::multiset<std::int64_t> values;
        for (auto& [a, z] : r.hs_spectrum.entries) {
            const auto v = as_integer(z);
            if (!v) o.fail("non-integer eigenvalue at " + to_string(a));
            else values.insert(*v);
        }
        if (values != std::multiset<std::int64_t>{3, 3, 0, 0, 0, 0, 0, -3, -3}) o.fail("multiset mismatch");
        if (*as_integer(at(r.hs_spectrum, el({0, 0}))) != 3 || *as_integer(at(r.hs_spectrum, el({0, 2}))) != 3) {
            o.fail("gamma(0,0) or gamma(0,2) differs from 3");
        }
    });

    criterion(3, "Example B adjacency spectrum in Eisenstein integers", 1.0, [&](Outcome& o) {
        const ExactSpectrum sp = exact_spectrum(ConnectionSet(z33, example_b), SpectrumKind::adjacency);
        const std::map<GroupElement, std::pair<std::int64_t, std::int64_t>> expected{
            {el({0, 0}), {3, 0}},  {el({0, 1}), {2, 1}},  {el({0, 2}), {1, -1}},
            {el({1, 0}), {0, 0}},  {el({1, 1}), {-1, 1}}, {el({1, 2}), {-2, -1}},
            {el({2, 0}), {0, 0}},  {el({2, 1}), {-1, 1}}, {el({2, 2}), {-2, -1}}};
        for (auto& [alpha, z] : sp.entries) {
            const auto ab = as_eisenstein(z);
            if (!ab) o.fail("as_eisenstein failed at " + to_string(alpha));
            else if (*ab != expected.at(alpha)) o.fail("value mismatch at " + to_string(alpha));
            // Independent numeric check of a + b w3.
            const auto w3 = std::polar(1.0, 2 * std::acos(-1.0) / 3);
            const auto& [a, b] = expected.at(alpha);
            if (std::abs(z.evaluate() - (static_cast<double>(a) + static_cast<double>(b) * w3)) > 1e-9) {
                o.fail("numeric mismatch at " + to_string(alpha));
            }
        }
    });

    criterion(4, "theorem sweep on Z6, Z9, Z3xZ3, Z12, Z2xZ6", 300.0, [&](Outcome& o) {
        const std::vector<std::pair<std::vector<std::int64_t>, std::uint64_t>> sweeps{
            {{6}, 32}, {{9}, 256}, {{3, 3}, 256}, {{12}, 2048}, {{2, 6}, 2048}};
        for (auto& [moduli, count] : sweeps) {
            const GroupSpec g = make_group(moduli);
            const auto rep = verify_theorems(g, 4096, 0, 1);
            if (!rep.exhaustive || rep.subsets_tested != count) o.fail(g.to_string() + ": wrong subset count");
            if (!rep.counterexamples.empty()) {
                o.fail(g.to_string() + ": " + rep.counterexamples.front().check + " " + rep.counterexamples.front().detail);
            }
        }
    });

    criterion(5, "enumeration counts 16, 256, 4 cross-checked by sweep", 60.0, [&](Outcome& o) {
        const std::vector<std::pair<std::vector<std::int64_t>, std::size_t>> cases{{{9}, 16}, {{3, 3}, 256}, {{4}, 4}};
        for (auto& [moduli, count] : cases) {
            const GroupSpec g = make_group(moduli);
            const auto sets = enumerate_hs_integral(g);
            if (sets.size() != count) o.fail(g.to_string() + ": got " + std::to_string(sets.size()));
            const auto rep = verify_theorems(g, 4096, 0, 1);
            if (rep.hs_integral_count != count) o.fail(g.to_string() + ": sweep count differs");
        }
    });

    criterion(6, "certificate suite on Z9, Z12, Z18, Z3xZ9", 60.0, [&](Outcome& o) {
        for (auto moduli : std::vector<std::vector<std::int64_t>>{{9}, {12}, {18}, {3, 9}}) {
            const GroupSpec g = make_group(moduli);
            for (auto& x : gamma3(g)) {
                for (auto& alpha : g.elements()) {
                    const auto cv = certificate(g, x, alpha);
                    const std::string where = g.to_string() + " x=" + to_string(x) + " alpha=" + to_string(alpha);
                    if (!cv.T_over_3) o.fail("3 does not divide T at " + where);
                    if (!cv.parity_ok) o.fail("parity mismatch at " + where);
                    if (2 * cv.z_value != cv.c_value + cv.t_value) o.fail("2Z != C + T at " + where);
                    if (!certificate_case_law_holds(g, cv)) o.fail("case law fails at " + where);
                }
            }
        }
    });

    criterion(7, "numeric oracle agrees with exact spectra on 200 random sets", 120.0, [&](Outcome& o) {
        std::vector<std::vector<std::int64_t>> groups;
        for (std::int64_t n = 2; n <= 36; ++n) groups.push_back({n});
        for (std::int64_t a = 2; a <= 6; ++a) {
            for (std::int64_t b = a; a * b <= 36; ++b) groups.push_back({a, b});
        }
        groups.push_back({2, 2, 2});
        groups.push_back({2, 2, 3});
        groups.push_back({3, 3, 3});
        groups.push_back({2, 3, 6});
        std::mt19937 rng(20261016);
        std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const GroupSpec g = make_group(groups[pick(rng)]);
            ElementSet s;
            for (auto& x : g.elements()) {
                if (!g.is_zero(x) && rng() % 2) s.insert(x);
            }
            const ConnectionSet cs(g, s);
            const auto sp = exact_spectrum(cs, SpectrumKind::hs);
            std::vector<double> exact;
            for (auto& [a, z] : sp.entries) exact.push_back(z.evaluate().real());
            std::sort(exact.begin(), exact.end());
            const auto numeric = numeric_hermitian_eigenvalues(build_matrices(cs));
            for (std::size_t i = 0; i < exact.size(); ++i) {
                if (std::abs(exact[i] - numeric[i]) > 1e-9) {
                    o.fail("trial " + std::to_string(trial) + " on " + g.to_string());
                    break;
                }
            }
        }
    });

    criterion(8, "Phi_m = Phi1 * Phi2 for 3 | m <= 60", 30.0, [&](Outcome& o) {
        for (std::int64_t m = 3; m <= 60; m += 3) {
            const auto [p1, p2] = phi3_factors(m, m);
            if (!equal(multiply(p1, p2), lift_polynomial(cyclotomic_poly(m), m))) {
                o.fail("m = " + std::to_string(m));
            }
        }
    });

    std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
