#pragma once

// Command-line front end. run() is separate from main() so tests can drive it
// with in-memory streams.

#include <hsint/hsint.hpp>

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hsint::cli {

enum ExitCode : int { ok = 0, input_error = 1, inconsistency = 2 };

struct Options {
    std::string group;
    std::string set;
    std::string output;
    std::string format = "json";
    std::string kind = "hs";
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    unsigned parallelism = 1;
    std::int64_t size_cap = default_group_size_cap;
    bool strict = false;
    bool matrices = false;
};

namespace detail {

inline SpectrumKind parse_kind(const std::string& k) {
    if (k == "hs") return SpectrumKind::hs;
    if (k == "adjacency") return SpectrumKind::adjacency;
    if (k == "simple_part") return SpectrumKind::simple_part;
    if (k == "skew_part") return SpectrumKind::skew_part;
    throw invalid_input("unknown spectrum kind '" + k + "'");
}

inline std::string value_text(const CycloNum& z) {
    if (auto n = as_integer(z)) return std::to_string(*n);
    if (auto ab = as_eisenstein(z)) return std::to_string(ab->first) + " + " + std::to_string(ab->second) + "*w3";
    const auto v = z.evaluate();
    std::ostringstream s;
    s.precision(12);
    s << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
    return s.str();
}

inline void print_spectrum_text(std::ostream& out, const ExactSpectrum& sp) {
    out << "spectrum (" << to_string(sp.kind) << ")\n";
    for (auto& [alpha, value] : sp.entries) out << "  " << to_string(alpha) << "  " << value_text(value) << "\n";
}

inline int do_classify(const Options& o, std::ostream& out) {
    const GroupSpec g = parse_group(o.group, o.size_cap);
    const ElementSet s = parse_set(o.set, g, o.strict);
    if (o.format == "dot") {
        out << to_dot(ConnectionSet(g, s));
        return ok;
    }
    const ClassificationReport r = classify(g, s);
    if (o.format == "text") {
        out << "group " << g.to_string() << ", S = {" << format_set(g, s) << "}\n";
        out << "HS-integral: " << (r.hs_verdict_spectral ? "yes" : "no")
            << " (characterization: " << (r.hs_verdict_characterization ? "yes" : "no") << ")\n";
        out << "Eisenstein integral: " << (r.eisenstein_verdict_spectral ? "yes" : "no") << "\n";
        print_spectrum_text(out, r.hs_spectrum);
        print_spectrum_text(out, r.a_spectrum);
        out << "consistent: " << (r.consistency ? "yes" : "no") << "\n";
    } else {
        out << to_json(r).dump(2) << "\n";
    }
    return r.consistency ? ok : inconsistency;
}

inline int do_spectrum(const Options& o, std::ostream& out) {
    const GroupSpec g = parse_group(o.group, o.size_cap);
    const ConnectionSet cs(g, parse_set(o.set, g, o.strict));
    const ExactSpectrum sp = exact_spectrum(cs, parse_kind(o.kind));
    if (o.format == "text") {
        print_spectrum_text(out, sp);
        return ok;
    }
    if (o.format == "dot") {
        out << to_dot(cs);
        return ok;
    }
    json j = to_json(sp);
    if (o.matrices) j["matrices"] = to_json(build_matrices(cs));
    out << j.dump(2) << "\n";
    return ok;
}

inline int do_atoms(const Options& o, std::ostream& out) {
    const GroupSpec g = parse_group(o.group, o.size_cap);
    json atoms = json::array();
    for (auto& atom : nonzero_atoms(g)) {
        const GroupElement& x = *atom.begin();
        json a{{"representative", to_json(x)}, {"order", order_of(g, x)}, {"members", to_json(atom)}};
        if (in_gamma3(g, x)) {
            a["classes"] = {to_json(eclass_of(g, x)), to_json(eclass_of(g, g.neg(x)))};
        } else {
            a["classes"] = json::array();
        }
        atoms.push_back(std::move(a));
    }
    if (o.format == "text") {
        for (auto& a : atoms) out << a["representative"].dump() << " ord " << a["order"] << ": " << a["members"].dump() << "\n";
        return ok;
    }
    out << json{{"group", g.to_string()}, {"gamma3", to_json(gamma3(g))}, {"atoms", atoms}}.dump(2) << "\n";
    return ok;
}

inline int do_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
    const GroupSpec g = parse_group(o.group, o.size_cap);
    const std::uint64_t budget = o.budget ? o.budget : (std::uint64_t{1} << 20);
    const EnumerationResult res = enumerate_hs_integral(g, budget, [&](const ElementSet& s) {
        out << json{{"set", to_json(s)}, {"spec", format_set(g, s)}}.dump() << "\n";
    });
    if (res.truncated) {
        out << json{{"truncated", true}, {"emitted", res.emitted}, {"total", res.total}}.dump() << "\n";
        err << "enumeration truncated after " << res.emitted << " of " << res.total << " sets\n";
    }
    return ok;
}

inline int do_verify(const Options& o, std::ostream& out) {
    const GroupSpec g = parse_group(o.group, o.size_cap);
    const VerificationReport r = verify_theorems(g, o.budget ? o.budget : 4096, o.seed, o.parallelism);
    out << to_json(r).dump(2) << "\n";
    return r.counterexamples.empty() ? ok : inconsistency;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact HS-integrality and Eisenstein integrality of mixed Cayley graphs over abelian groups"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool needs_set) {
        sub->add_option("-g,--group", o.group, "group as n1xn2x...xnk, e.g. 3x3")->required();
        if (needs_set) sub->add_option("-s,--set", o.set, "connection set, e.g. \"(0,1),(2,0)\" or \"1,5\"")->required();
        sub->add_option("-o,--output", o.output, "write output to this file instead of stdout");
        sub->add_option("--size-cap", o.size_cap, "maximum group order")->check(CLI::PositiveNumber);
    };
    auto* classify_cmd = app.add_subcommand("classify", "decide HS and Eisenstein integrality of Cay(G,S)");
    add_common(classify_cmd, true);
    classify_cmd->add_option("-f,--format", o.format)->check(CLI::IsMember({"json", "dot", "text"}));
    classify_cmd->add_flag("--strict", o.strict, "reject coordinates outside [0, n_j)");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "exact spectrum of Cay(G,S)");
    add_common(spectrum_cmd, true);
    spectrum_cmd->add_option("-f,--format", o.format)->check(CLI::IsMember({"json", "dot", "text"}));
    spectrum_cmd->add_option("-k,--kind", o.kind)->check(CLI::IsMember({"hs", "adjacency", "simple_part", "skew_part"}));
    spectrum_cmd->add_flag("--matrices", o.matrices, "include adjacency and Hermitian matrix dumps");
    spectrum_cmd->add_flag("--strict", o.strict, "reject coordinates outside [0, n_j)");

    auto* atoms_cmd = app.add_subcommand("atoms", "list atoms [x] and classes <<x>> of the group");
    add_common(atoms_cmd, false);
    atoms_cmd->add_option("-f,--format", o.format)->check(CLI::IsMember({"json", "text"}));

    auto* enumerate_cmd = app.add_subcommand("enumerate", "stream all HS-integral connection sets");
    add_common(enumerate_cmd, false);
    enumerate_cmd->add_option("-b,--budget", o.budget, "maximum number of sets to emit");

    auto* verify_cmd = app.add_subcommand("verify", "sweep subsets and cross-check every characterization");
    add_common(verify_cmd, false);
    verify_cmd->add_option("-b,--budget", o.budget, "maximum number of subsets (sampled beyond this)");
    verify_cmd->add_option("--seed", o.seed, "seed for sampled sweeps");
    verify_cmd->add_option("-j,--parallelism", o.parallelism, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : input_error;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.output.empty()) {
        file.open(o.output);
        if (!file) {
            err << "error: cannot open " << o.output << " for writing\n";
            return input_error;
        }
        sink = &file;
    }

    try {
        if (*classify_cmd) return detail::do_classify(o, *sink);
        if (*spectrum_cmd) return detail::do_spectrum(o, *sink);
        if (*atoms_cmd) return detail::do_atoms(o, *sink);
        if (*enumerate_cmd) return detail::do_enumerate(o, *sink, err);
        if (*verify_cmd) return detail::do_verify(o, *sink);
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const theorem_violation& e) {
        err << "consistency violation: " << e.what() << "\n";
        return inconsistency;
    }
    return input_error;
}

}  // namespace hsint::cli
