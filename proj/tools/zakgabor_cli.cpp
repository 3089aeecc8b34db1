// Command-line front end: group/lattice/window parsing, per-H analysis
// reports (JSON/CSV), admissible-H search, and the oracle cross-check suite.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "zakgabor/checks.hpp"
#include "zakgabor/fiber_analysis.hpp"
#include "zakgabor/gabor.hpp"
#include "zakgabor/oracle.hpp"
#include "zakgabor/rng.hpp"
#include "zakgabor/zak_analysis.hpp"

namespace {

using namespace zakgabor;

// ---------------------------------------------------------------------------
// deterministic serialization helpers

std::string fmt(double v) {
    // JSON has no inf/nan token; an unbounded condition number becomes null
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string json_residues(const FiniteAbelianGroup& g, std::int64_t index) {
    const GroupElement e = g.element_at(index);
    std::string out = "[";
    for (std::size_t i = 0; i < e.residues.size(); ++i)
        out += (i ? "," : "") + std::to_string(e.residues[i]);
    return out + "]";
}

std::string json_subgroup(const Subgroup& s) {
    std::string out = "[";
    bool first = true;
    for (auto idx : s.element_indices()) {
        if (!first) out += ",";
        out += json_residues(s.parent(), idx);
        first = false;
    }
    return out + "]";
}

std::string json_factors(const FiniteAbelianGroup& g) {
    std::string out = "[";
    for (std::size_t i = 0; i < g.factors().size(); ++i)
        out += (i ? "," : "") + std::to_string(g.factors()[i]);
    return out + "]";
}

std::string json_int_list(const std::vector<std::int64_t>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + "]";
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// spec grammars

struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FiniteAbelianGroup parse_group(const std::string& spec) {
    std::vector<std::int64_t> factors;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        if (spec[pos] != 'Z')
            throw ParseFailure("--group: expected 'Z' at position " + std::to_string(pos) +
                               " in '" + spec + "'");
        ++pos;
        std::size_t start = pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
        if (pos == start)
            throw ParseFailure("--group: expected digits after 'Z' in '" + spec + "'");
        factors.push_back(std::stoll(spec.substr(start, pos - start)));
        if (pos < spec.size()) {
            if (spec[pos] != 'x')
                throw ParseFailure("--group: expected 'x' between factors in '" + spec + "'");
            ++pos;
            if (pos == spec.size())
                throw ParseFailure("--group: trailing 'x' in '" + spec + "'");
        }
    }
    if (factors.empty()) throw ParseFailure("--group: empty group spec");
    for (auto f : factors)
        if (f < 1) throw ParseFailure("--group: factors must be >= 1");
    return FiniteAbelianGroup(factors);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

GroupElement parse_element(const std::string& flag, const std::string& text,
                           const FiniteAbelianGroup& g) {
    const auto parts = split(text, ',');
    if (parts.size() != g.num_factors())
        throw ParseFailure(flag + ": element '" + text + "' needs " +
                           std::to_string(g.num_factors()) + " component(s)");
    GroupElement e;
    for (const auto& p : parts) {
        try {
            std::size_t used = 0;
            const std::int64_t v = std::stoll(p, &used);
            if (used != p.size()) throw std::invalid_argument("trailing junk");
            e.residues.push_back(v);
        } catch (const std::exception&) {
            throw ParseFailure(flag + ": bad integer '" + p + "' in element '" + text + "'");
        }
    }
    return g.reduce(e);
}

Subgroup parse_subgroup(const std::string& flag, const std::string& spec,
                        const FiniteAbelianGroup& g) {
    const auto parse_list = [&](const std::string& body) {
        std::vector<GroupElement> elems;
        for (const auto& tok : split(body, ';')) elems.push_back(parse_element(flag, tok, g));
        return elems;
    };
    if (spec.rfind("gen:", 0) == 0)
        return subgroup_from_generators(g, parse_list(spec.substr(4)));
    if (spec.rfind("elems:", 0) == 0) {
        try {
            return subgroup_from_elements(g, parse_list(spec.substr(6)));
        } catch (const std::invalid_argument& e) {
            throw ParseFailure(flag + ": " + e.what());
        }
    }
    throw ParseFailure(flag + ": subgroup spec must start with 'gen:' or 'elems:', got '" +
                       spec + "'");
}

Window parse_window(const std::string& spec, const FiniteAbelianGroup& g) {
    if (spec == "delta") return delta_window(g);
    if (spec == "uniform") return constant_window(g);
    if (spec.rfind("random:", 0) == 0) {
        std::uint64_t seed = 0;
        try {
            seed = std::stoull(spec.substr(7));
        } catch (const std::exception&) {
            throw ParseFailure("--window: bad seed in '" + spec + "'");
        }
        Xoshiro256StarStar rng(seed);
        return random_window(g, rng);
    }
    Window w = [&] {
        try {
            return read_window_json(spec);
        } catch (const std::exception& e) {
            throw ParseFailure(std::string("--window: ") + e.what());
        }
    }();
    if (!(w.group == g))
        throw ParseFailure("--window: file group " + json_factors(w.group) +
                           " does not match --group " + json_factors(g));
    return w;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + out_path);
    os << text;
}

// Prints an element of Gammaperp \ Lambda proving that no admissible H exists.
std::string containment_witness(const FiniteAbelianGroup& g, const Subgroup& lambda,
                                const Subgroup& gammaperp) {
    for (auto idx : gammaperp.element_indices())
        if (!lambda.contains_index(idx)) return json_residues(g, idx);
    return "[]";
}

// ---------------------------------------------------------------------------
// analyze

struct PerH {
    AdmissibleH adm;
    double eigMin = 0, eigMax = 0;
    std::pair<double, double> zakBounds, directBounds;
    std::pair<double, double> fiberPrinted, fiberModulated;
    FrameReport flags;
    double conversionFactor = 1;
    double maxDeviation = 0;
};

PerH analyze_one_h(const Window& w, const Subgroup& lambda, const Subgroup& gamma,
                   const AdmissibleH& adm, Convention conv, double tol) {
    PerH r{adm};
    const GaborSystem chain_sys =
        make_gabor_system(w, lambda, gamma, Convention::zak_chain, adm.h);
    const EigenvalueFunction m = eigenvalue_function(chain_sys, adm);
    r.eigMin = m.min;
    r.eigMax = m.max;
    r.zakBounds = {std::max(0.0, m.min), m.max};
    r.flags = zak_frame_bounds(chain_sys, adm, tol);
    r.conversionFactor = static_cast<double>(gamma.size()) / static_cast<double>(adm.hperp.size());

    const GaborSystem direct_sys = make_gabor_system(w, lambda, gamma, conv,
                                                     conv == Convention::zak_chain
                                                         ? std::optional<Subgroup>(adm.h)
                                                         : std::nullopt);
    r.directBounds = frame_bounds(direct_sys);
    const FiberFrameReport pr = gabor_fiber_bounds(chain_sys, adm, FiberReading::printed);
    const FiberFrameReport mo = gabor_fiber_bounds(chain_sys, adm, FiberReading::modulated);
    r.fiberPrinted = {pr.globalA, pr.globalB};
    r.fiberModulated = {mo.globalA, mo.globalB};

    // Agreement diagnostics: zak and modulated-fiber routes against the direct
    // spectrum, in the requested convention.
    const double scale = conv == Convention::zak_chain ? 1.0 : 1.0 / r.conversionFactor;
    r.maxDeviation = std::max({std::abs(r.zakBounds.first * scale - r.directBounds.first),
                               std::abs(r.zakBounds.second * scale - r.directBounds.second),
                               std::abs(r.fiberModulated.first * scale - r.directBounds.first),
                               std::abs(r.fiberModulated.second * scale - r.directBounds.second)});
    return r;
}

std::string pair_json(const std::pair<double, double>& p) {
    return "[" + fmt(p.first) + "," + fmt(p.second) + "]";
}

int cmd_analyze(const std::string& group_spec, const std::string& lambda_spec,
                const std::string& gamma_spec, const std::string& window_spec,
                const std::string& h_spec, const std::string& convention_name, double tol,
                const std::string& format, const std::string& out_path) {
    const FiniteAbelianGroup g = parse_group(group_spec);
    const Subgroup lambda = parse_subgroup("--lambda", lambda_spec, g);
    const Subgroup gamma = parse_subgroup("--gamma", gamma_spec, g.dual());
    const Window w = parse_window(window_spec, g);
    Convention conv;
    if (convention_name == "zak-chain")
        conv = Convention::zak_chain;
    else if (convention_name == "plancherel")
        conv = Convention::plancherel;
    else
        throw ParseFailure("--convention: expected 'zak-chain' or 'plancherel', got '" +
                           convention_name + "'");
    if (format != "json" && format != "csv")
        throw ParseFailure("--format: expected 'json' or 'csv', got '" + format + "'");

    const auto subs = all_subgroups(g);
    auto admissible = admissible_h(g, lambda, gamma, subs);
    if (admissible.empty()) {
        const Subgroup gammaperp = annihilator(g.dual(), gamma);
        std::cerr << "no admissible H: the annihilator of gamma is not contained in lambda; "
                  << "witness element " << containment_witness(g, lambda, gammaperp) << "\n";
        return 3;
    }
    if (h_spec != "auto") {
        const Subgroup h = parse_subgroup("--h", h_spec, g);
        std::vector<AdmissibleH> picked;
        for (auto& a : admissible)
            if (a.h == h) picked.push_back(std::move(a));
        if (picked.empty()) {
            const Subgroup gammaperp = annihilator(g.dual(), gamma);
            std::cerr << "requested H is not admissible for this (lambda, gamma) pair; "
                      << "need gammaperp <= H <= lambda with gammaperp = "
                      << json_subgroup(gammaperp) << "\n";
            return 3;
        }
        admissible = std::move(picked);
    }

    std::vector<PerH> rows;
    rows.reserve(admissible.size());
    for (const auto& adm : admissible)
        rows.push_back(analyze_one_h(w, lambda, gamma, adm, conv, tol));

    std::ostringstream os;
    if (format == "json") {
        os << "{\"schema\": 1, \"command\": \"analyze\", \"group\": " << json_factors(g)
           << ", \"lambda\": " << json_subgroup(lambda) << ", \"gamma\": "
           << json_subgroup(gamma) << ", \"window\": \"" << json_escape(window_spec)
           << "\", \"convention\": \"" << convention_name << "\", \"tol\": " << fmt(tol)
           << ", \"perH\": [";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const PerH& r = rows[i];
            os << (i ? ", " : "") << "{\"h\": " << json_subgroup(r.adm.h)
               << ", \"hperp\": " << json_subgroup(r.adm.hperp)
               << ", \"eigMin\": " << fmt(r.eigMin) << ", \"eigMax\": " << fmt(r.eigMax)
               << ", \"zakBounds\": " << pair_json(r.zakBounds)
               << ", \"directBounds\": " << pair_json(r.directBounds)
               << ", \"fiberPrinted\": " << pair_json(r.fiberPrinted)
               << ", \"fiberModulated\": " << pair_json(r.fiberModulated)
               << ", \"conversionFactor\": " << fmt(r.conversionFactor)
               << ", \"isFrame\": " << (r.flags.isFrame ? "true" : "false")
               << ", \"isTight\": " << (r.flags.isTight ? "true" : "false")
               << ", \"isParseval\": " << (r.flags.isParseval ? "true" : "false")
               << ", \"isComplete\": " << (r.flags.isComplete ? "true" : "false")
               << ", \"isMinimal\": " << (r.flags.isMinimal ? "true" : "false")
               << ", \"isONB\": " << (r.flags.isONB ? "true" : "false")
               << ", \"conditionNumber\": " << fmt(r.flags.conditionNumber)
               << ", \"maxDeviation\": " << fmt(r.maxDeviation) << "}";
        }
        os << "]}\n";
    } else {
        os << "hSize,eigMin,eigMax,zakA,zakB,directA,directB,fiberPrintedA,fiberPrintedB,"
              "fiberModulatedA,fiberModulatedB,conversionFactor,isFrame,isTight,isParseval,"
              "isComplete,isMinimal,isONB,conditionNumber,maxDeviation\n";
        for (const PerH& r : rows) {
            os << r.adm.h.size() << "," << fmt(r.eigMin) << "," << fmt(r.eigMax) << ","
               << fmt(r.zakBounds.first) << "," << fmt(r.zakBounds.second) << ","
               << fmt(r.directBounds.first) << "," << fmt(r.directBounds.second) << ","
               << fmt(r.fiberPrinted.first) << "," << fmt(r.fiberPrinted.second) << ","
               << fmt(r.fiberModulated.first) << "," << fmt(r.fiberModulated.second) << ","
               << fmt(r.conversionFactor) << "," << r.flags.isFrame << "," << r.flags.isTight
               << "," << r.flags.isParseval << "," << r.flags.isComplete << ","
               << r.flags.isMinimal << "," << r.flags.isONB << ","
               << fmt(r.flags.conditionNumber) << "," << fmt(r.maxDeviation) << "\n";
        }
    }
    emit(os.str(), out_path);
    return 0;
}

// ---------------------------------------------------------------------------
// search-h

int cmd_search_h(const std::string& group_spec, const std::string& lambda_spec,
                 const std::string& gamma_spec, const std::string& out_path) {
    const FiniteAbelianGroup g = parse_group(group_spec);
    const Subgroup lambda = parse_subgroup("--lambda", lambda_spec, g);
    const Subgroup gamma = parse_subgroup("--gamma", gamma_spec, g.dual());
    const auto subs = all_subgroups(g);
    const auto admissible = admissible_h(g, lambda, gamma, subs);

    std::ostringstream os;
    os << "{\"schema\": 1, \"command\": \"search-h\", \"group\": " << json_factors(g)
       << ", \"lambda\": " << json_subgroup(lambda) << ", \"gamma\": " << json_subgroup(gamma)
       << ", \"rows\": [";
    for (std::size_t i = 0; i < admissible.size(); ++i) {
        const auto& a = admissible[i];
        const auto left = quotient_invariant_factors(g, lambda, a.h);
        const auto right = quotient_invariant_factors(g.dual(), gamma, a.hperp);
        os << (i ? ", " : "") << "{\"h\": " << json_subgroup(a.h)
           << ", \"hSize\": " << a.h.size()
           << ", \"invariantFactorsLambdaModH\": " << json_int_list(left)
           << ", \"invariantFactorsGammaModHperp\": " << json_int_list(right);
        if (g.num_factors() == 1) {
            const std::int64_t l = g.factors()[0];
            os << ", \"divisorCertificate\": {\"L\": " << l
               << ", \"N\": " << l / lambda.size() << ", \"M\": " << l / gamma.size()
               << ", \"R\": " << l / a.h.size() << "}";
        }
        os << "}";
    }
    os << "]}\n";
    if (admissible.empty())
        std::cerr << "warning: no admissible H (the annihilator of gamma is not contained in "
                     "lambda)\n";
    emit(os.str(), out_path);
    return 0;
}

// ---------------------------------------------------------------------------
// oracle-check

int cmd_oracle_check(std::int64_t max_order, std::uint64_t seed, double tol,
                     const std::string& out_path) {
    CheckConfig cfg;
    cfg.max_order = max_order;
    cfg.seed = seed;
    cfg.tol = tol;
    const auto results = run_all_checks(cfg);

    bool all_passed = true;
    std::string reading_note;
    std::ostringstream os;
    os << "{\"schema\": 1, \"command\": \"oracle-check\", \"maxOrder\": " << max_order
       << ", \"seed\": " << seed << ", \"tol\": " << fmt(tol) << ", \"suites\": [";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        all_passed = all_passed && r.passed;
        if (r.name == "reading-disambiguation") reading_note = r.note;
        os << (i ? ", " : "") << "{\"name\": \"" << r.name << "\", \"passed\": "
           << (r.passed ? "true" : "false") << ", \"maxDeviation\": " << fmt(r.max_dev)
           << ", \"instances\": " << r.instances << ", \"note\": \"" << json_escape(r.note)
           << "\", \"counterexample\": "
           << (r.counterexample.empty() ? "null" : r.counterexample) << "}";
    }
    os << "], \"allPassed\": " << (all_passed ? "true" : "false") << "}\n";
    if (!reading_note.empty()) os << "fiber-reading: " << reading_note << "\n";
    emit(os.str(), out_path);
    return all_passed ? 0 : 1;
}

// ---------------------------------------------------------------------------
// window gen

int cmd_window_gen(const std::string& group_spec, const std::string& window_spec,
                   const std::string& out_path) {
    const FiniteAbelianGroup g = parse_group(group_spec);
    const Window w = parse_window(window_spec, g);
    if (out_path.empty())
        std::cout << window_to_json(w);
    else
        write_window_json(w, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gabor frame analysis on finite abelian groups"};
    // long-form help only: the analyze subcommand takes a --h option, which
    // would clash with the default -h,--help flag
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    std::string group_spec, lambda_spec, gamma_spec, window_spec = "delta";
    std::string h_spec = "auto", convention_name = "zak-chain", format = "json", out_path;
    double tol = 1e-10;
    std::int64_t max_order = 48;
    std::uint64_t seed = 7;

    auto* analyze = app.add_subcommand("analyze", "Frame analysis over admissible H");
    analyze->set_help_flag("--help", "Print this help message and exit");
    analyze->add_option("--group", group_spec, "Group spec, e.g. Z12 or Z2xZ4")->required();
    analyze->add_option("--lambda", lambda_spec, "Lattice in G: gen:<e>(;<e>)* or elems:<list>")
        ->required();
    analyze->add_option("--gamma", gamma_spec, "Lattice in the dual group")->required();
    analyze->add_option("--window", window_spec,
                        "Window: path | delta | uniform | random:<seed>");
    analyze->add_option("--h", h_spec, "Intermediate subgroup spec, or 'auto'");
    analyze->add_option("--convention", convention_name, "zak-chain | plancherel");
    analyze->add_option("--tol", tol, "Classification tolerance");
    analyze->add_option("--format", format, "json | csv");
    analyze->add_option("--out", out_path, "Output file (default stdout)");

    auto* search = app.add_subcommand("search-h", "List admissible intermediate subgroups");
    search->add_option("--group", group_spec, "Group spec")->required();
    search->add_option("--lambda", lambda_spec, "Lattice in G")->required();
    search->add_option("--gamma", gamma_spec, "Lattice in the dual group")->required();
    search->add_option("--out", out_path, "Output file (default stdout)");

    auto* oracle = app.add_subcommand("oracle-check", "Run the oracle cross-check suites");
    oracle->add_option("--max-order", max_order, "Largest group order to exercise");
    oracle->add_option("--seed", seed, "Random seed");
    oracle->add_option("--tol", tol, "Suite tolerance");
    oracle->add_option("--out", out_path, "Output file (default stdout)");

    auto* window = app.add_subcommand("window", "Window utilities");
    auto* window_gen = window->add_subcommand("gen", "Generate a window JSON file");
    window_gen->add_option("--group", group_spec, "Group spec")->required();
    window_gen->add_option("--window", window_spec, "delta | uniform | random:<seed>");
    window_gen->add_option("--out", out_path, "Output file (default stdout)");
    window->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(group_spec, lambda_spec, gamma_spec, window_spec, h_spec,
                               convention_name, tol, format, out_path);
        if (search->parsed())
            return cmd_search_h(group_spec, lambda_spec, gamma_spec, out_path);
        if (oracle->parsed()) return cmd_oracle_check(max_order, seed, tol, out_path);
        if (window->parsed()) return cmd_window_gen(group_spec, window_spec, out_path);
    } catch (const ParseFailure& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
