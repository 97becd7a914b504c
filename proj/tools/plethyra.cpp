// Command-line front end: ingest JSON descriptors, run any engine operation,
// emit deterministic text or JSON, and execute the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/input errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "plethyra/json_io.hpp"
#include "plethyra/text_format.hpp"
#include "plethyra/verify.hpp"

namespace {

using namespace plethyra;

constexpr unsigned kDefaultMaxDegree = 12;
constexpr unsigned kDefaultHardCap = 32;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned hard_cap() {
    if (const char* env = std::getenv("PLETHYRA_MAX_DEGREE")) {
        try {
            return static_cast<unsigned>(std::stoul(env));
        } catch (...) {
            throw ParseError("PLETHYRA_MAX_DEGREE is not a number");
        }
    }
    return kDefaultHardCap;
}

// Inline JSON if the argument looks like a JSON value, otherwise a file path.
Json load_json(const std::string& arg) {
    std::string text = arg;
    auto first = text.find_first_not_of(" \t\n");
    bool inline_json = first != std::string::npos &&
                       (text[first] == '{' || text[first] == '[' || text[first] == '"');
    if (!inline_json) {
        std::ifstream in(arg);
        if (!in) throw ParseError("cannot open file: " + arg);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError("JSON parse error in '" + arg + "': " + e.what());
    }
}

struct SpaceOptions {
    std::string betti;
    std::string hodge;
    std::string poly;
    std::string space;

    SpaceDescriptor resolve() const {
        int given = !betti.empty() + !hodge.empty() + !poly.empty() + !space.empty();
        if (given != 1)
            throw ParseError("exactly one of --betti/--hodge/--poly/--space is required");
        if (!betti.empty()) return {"space", betti_from_json(load_json(betti))};
        if (!hodge.empty()) return {"space", hodge_from_json(load_json(hodge))};
        if (!poly.empty()) return {"space", laurent_from_json(load_json(poly))};
        return space_from_json(load_json(space));
    }
};

struct OutputOptions {
    std::string format = "text";
    std::string specialize = "none";
    std::vector<std::string> assignments;  // var=value
    std::string z, y, x;

    std::map<std::string, LaurentPoly> assignment_map() const {
        std::map<std::string, LaurentPoly> out;
        auto add = [&](const std::string& var, const std::string& value) {
            if (value.empty()) return;
            out[var] = LaurentPoly(rat_from_string(value));
        };
        add("z", z);
        add("y", y);
        add("x", x);
        for (const auto& a : assignments) {
            auto eq = a.find('=');
            if (eq == std::string::npos) throw ParseError("--assign expects var=value: " + a);
            add(a.substr(0, eq), a.substr(eq + 1));
        }
        return out;
    }

    bool wants_p_specialization() const { return specialize != "none"; }

    LaurentPoly apply_p(const SymFunc& f) const {
        LaurentPoly out;
        if (specialize == "p=1")
            out = f.specialize_p_ones();
        else if (specialize == "p=alt")
            out = f.specialize_p_alternating();
        else if (specialize == "p=forget")
            out = f.specialize_p_forget();
        else if (specialize.rfind("custom:", 0) == 0) {
            Json j = load_json(specialize.substr(7));
            std::map<unsigned, LaurentPoly> rule;
            for (auto it = j.begin(); it != j.end(); ++it)
                rule[static_cast<unsigned>(std::stoul(it.key()))] =
                    it.value().is_object() ? laurent_from_json(it.value())
                                           : LaurentPoly(rat_from_json(it.value()));
            out = f.specialize_p([&](unsigned r) {
                auto found = rule.find(r);
                if (found == rule.end())
                    throw ParseError("custom specialization is missing p_" + std::to_string(r));
                return found->second;
            });
        } else {
            throw ParseError("unknown --specialize selector: " + specialize);
        }
        return out;
    }

    LaurentPoly finish(const LaurentPoly& p) const {
        auto vars = assignment_map();
        return vars.empty() ? p : p.specialize(vars);
    }
};

unsigned validate_degree(unsigned n) {
    unsigned cap = hard_cap();
    if (n > cap)
        throw ParseError("max degree " + std::to_string(n) + " exceeds the cap " +
                         std::to_string(cap) + " (raise PLETHYRA_MAX_DEGREE)");
    return n;
}

void emit_series(const TruncatedSeries& s, const OutputOptions& out) {
    TruncatedSeries shown = s;
    auto vars = out.assignment_map();
    if (out.wants_p_specialization()) {
        for (unsigned n = 0; n <= s.max_degree(); ++n)
            shown.set(n, SymFunc{out.finish(out.apply_p(s.at(n)))});
    } else if (!vars.empty()) {
        for (unsigned n = 0; n <= s.max_degree(); ++n)
            shown.set(n, s.at(n).map_coefficients(
                             [&](const LaurentPoly& c) { return c.specialize(vars); }));
    }
    if (out.format == "json")
        std::cout << to_json(shown).dump() << "\n";
    else
        std::cout << to_text(shown) << "\n";
}

void emit_symfunc(const SymFunc& f, const OutputOptions& out) {
    if (out.wants_p_specialization()) {
        LaurentPoly p = out.finish(out.apply_p(f));
        if (out.format == "json")
            std::cout << to_json(p).dump() << "\n";
        else
            std::cout << to_text(p) << "\n";
        return;
    }
    if (out.format == "json")
        std::cout << to_json(f).dump() << "\n";
    else
        std::cout << to_text(f) << "\n";
}

void emit_poly(const LaurentPoly& p, const OutputOptions& out) {
    LaurentPoly shown = out.finish(p);
    if (out.format == "json")
        std::cout << to_json(shown).dump() << "\n";
    else
        std::cout << to_text(shown) << "\n";
}

void add_space_options(CLI::App* cmd, SpaceOptions& space) {
    cmd->add_option("--betti", space.betti, "Betti profile JSON, e.g. '{\"0\":1,\"2\":1}'");
    cmd->add_option("--hodge", space.hodge, "Hodge entries JSON [[p,q,k,dim],...]");
    cmd->add_option("--poly", space.poly, "Laurent polynomial JSON or file");
    cmd->add_option("--space", space.space, "SpaceDescriptor JSON or file");
}

void add_output_options(CLI::App* cmd, OutputOptions& out, bool with_specialize = true) {
    cmd->add_option("--format", out.format, "Output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_specialize)
        cmd->add_option("--specialize", out.specialize,
                        "Frobenius specialization: none|p=1|p=alt|p=forget|custom:<json>");
    cmd->add_option("--assign", out.assignments, "Variable assignment var=value (repeatable)");
    cmd->add_option("--z", out.z, "Assign z");
    cmd->add_option("--y", out.y, "Assign y");
    cmd->add_option("--x", out.x, "Assign x");
}

int run_cli(int argc, char** argv) {
    CLI::App app{"plethyra: exact generating-series calculus for characters of tensor powers"};
    app.require_subcommand(1);

    unsigned N = kDefaultMaxDegree;
    SpaceOptions space;
    OutputOptions out;
    std::string char_input, profile_input, endo_input, group_input, h_input;
    std::string series_input, outer_input, inner_input, base_input, exponent_input;
    std::string punctual_input, mode = "symmetric";
    unsigned small_n = 1;
    bool ungraded = false;

    auto* series_cmd = app.add_subcommand("series", "Character generating series of tensor powers");
    series_cmd->add_option("-N,--max-degree", N, "Truncation degree");
    add_space_options(series_cmd, space);
    add_output_options(series_cmd, out);

    auto* twist_cmd = app.add_subcommand("twist", "Twisted character cl_n(V ⊗ X^n)");
    twist_cmd->add_option("--char", char_input, "ClassFunction JSON or file")->required();
    add_space_options(twist_cmd, space);
    add_output_options(twist_cmd, out);

    auto* schur_cmd = app.add_subcommand("schur", "Schur functor class S_V([X])");
    schur_cmd->add_option("--char", char_input, "ClassFunction JSON or file")->required();
    add_space_options(schur_cmd, space);
    add_output_options(schur_cmd, out, false);

    auto* decompose_cmd = app.add_subcommand("decompose", "Schur decomposition of cl_n");
    decompose_cmd->add_option("-n", small_n, "Tensor power")->required();
    add_space_options(decompose_cmd, space);
    add_output_options(decompose_cmd, out, false);

    auto* macdonald_cmd = app.add_subcommand("macdonald", "Symmetric-product series");
    macdonald_cmd->add_option("-N,--max-degree", N, "Truncation degree");
    add_space_options(macdonald_cmd, space);
    add_output_options(macdonald_cmd, out, false);

    auto* alternating_cmd = app.add_subcommand("alternating", "Alternating-power series");
    alternating_cmd->add_option("-N,--max-degree", N, "Truncation degree");
    add_space_options(alternating_cmd, space);
    add_output_options(alternating_cmd, out, false);

    auto* kunneth_cmd = app.add_subcommand("kunneth", "Künneth series exp(P·t)");
    kunneth_cmd->add_option("-N,--max-degree", N, "Truncation degree");
    add_space_options(kunneth_cmd, space);
    add_output_options(kunneth_cmd, out, false);

    auto* quotient_cmd = app.add_subcommand("quotient", "Poincaré polynomial of X^n/K");
    quotient_cmd->add_option("--profile", profile_input, "SubgroupProfile JSON or file")->required();
    add_space_options(quotient_cmd, space);
    add_output_options(quotient_cmd, out, false);

    auto* config_cmd = app.add_subcommand("config-space", "Configuration-space series");
    config_cmd->add_option("-N,--max-degree", N, "Truncation degree");
    add_space_options(config_cmd, space);
    add_output_options(config_cmd, out);

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Power-structure Hilbert series");
    hilbert_cmd->add_option("-N,--max-degree", N, "Truncation degree");
    hilbert_cmd->add_option("--punctual", punctual_input, "Punctual series JSON or file")->required();
    hilbert_cmd->add_option("--mode", mode, "ordered|symmetric")
        ->check(CLI::IsMember({"ordered", "symmetric"}));
    add_space_options(hilbert_cmd, space);
    add_output_options(hilbert_cmd, out);

    auto* zeta_cmd = app.add_subcommand("zeta", "Graded Lefschetz zeta function");
    zeta_cmd->add_option("-N,--max-degree", N, "Truncation degree");
    zeta_cmd->add_option("--endo", endo_input, "GradedEndomorphism JSON or file")->required();
    zeta_cmd->add_flag("--ungraded", ungraded, "Set z=1 (classical Lefschetz zeta)");
    add_output_options(zeta_cmd, out, false);

    auto* group_cmd = app.add_subcommand("group-macdonald", "Equivariant Macdonald series per class");
    group_cmd->add_option("-N,--max-degree", N, "Truncation degree");
    group_cmd->add_option("--group", group_input, "FiniteGroupData JSON or file")->required();
    group_cmd->add_option("--values", h_input, "Map class name -> LaurentPoly JSON or file")->required();
    add_output_options(group_cmd, out, false);

    auto* plethysm_cmd = app.add_subcommand("plethysm", "Plethysm of two symmetric functions");
    plethysm_cmd->add_option("-N,--max-degree", N, "Truncation degree");
    plethysm_cmd->add_option("--outer", outer_input, "Outer SymFunc JSON or file")->required();
    plethysm_cmd->add_option("--inner", inner_input, "Inner SymFunc JSON or file")->required();
    add_output_options(plethysm_cmd, out);

    auto* exp_cmd = app.add_subcommand("exp", "Ordinary exponential of a series");
    exp_cmd->add_option("--series", series_input, "TruncatedSeries JSON or file")->required();
    add_output_options(exp_cmd, out);
    auto* log_cmd = app.add_subcommand("log", "Ordinary logarithm of a series");
    log_cmd->add_option("--series", series_input, "TruncatedSeries JSON or file")->required();
    add_output_options(log_cmd, out);
    auto* pexp_cmd = app.add_subcommand("pexp", "Plethystic exponential of a series");
    pexp_cmd->add_option("--series", series_input, "TruncatedSeries JSON or file")->required();
    add_output_options(pexp_cmd, out);
    auto* plog_cmd = app.add_subcommand("plog", "Plethystic logarithm of a series");
    plog_cmd->add_option("--series", series_input, "TruncatedSeries JSON or file")->required();
    add_output_options(plog_cmd, out);

    auto* power_cmd = app.add_subcommand("power", "Power structure (1+A)^b");
    power_cmd->add_option("--base", base_input, "Base TruncatedSeries JSON or file")->required();
    power_cmd->add_option("--exponent", exponent_input, "Exponent LaurentPoly JSON or file")
        ->required();
    add_output_options(power_cmd, out);

    auto* verify_cmd = app.add_subcommand("verify", "Run the full invariant and acceptance suite");
    verify_cmd->add_option("-N,--max-degree", N, "Accepted for symmetry; ranges are pinned");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (series_cmd->parsed()) {
        emit_series(char_series(space.resolve(), validate_degree(N)), out);
    } else if (twist_cmd->parsed()) {
        ClassFunction v = class_function_from_json(load_json(char_input));
        emit_symfunc(twisted_character(v, space.resolve()), out);
    } else if (schur_cmd->parsed()) {
        ClassFunction v = class_function_from_json(load_json(char_input));
        emit_poly(schur_value(v, space.resolve()), out);
    } else if (decompose_cmd->parsed()) {
        auto decomposition = schur_decomposition(space.resolve(), validate_degree(small_n));
        if (out.format == "json") {
            Json j = Json::array();
            for (const auto& [mu, value] : decomposition) {
                Json entry;
                entry["partition"] = to_json(mu);
                entry["value"] = to_json(out.finish(value));
                j.push_back(std::move(entry));
            }
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& [mu, value] : decomposition) {
                std::string label = "s[";
                for (std::size_t i = 0; i < mu.parts().size(); ++i)
                    label += (i ? "," : "") + std::to_string(mu.parts()[i]);
                std::cout << label << "]: " << to_text(out.finish(value)) << "\n";
            }
        }
    } else if (macdonald_cmd->parsed()) {
        emit_series(macdonald_series(space.resolve(), validate_degree(N)), out);
    } else if (alternating_cmd->parsed()) {
        emit_series(alternating_series(space.resolve(), validate_degree(N)), out);
    } else if (kunneth_cmd->parsed()) {
        emit_series(kunneth_series(space.resolve(), validate_degree(N)), out);
    } else if (quotient_cmd->parsed()) {
        SubgroupProfile k = subgroup_profile_from_json(load_json(profile_input));
        emit_poly(quotient_polynomial(k, space.resolve()), out);
    } else if (config_cmd->parsed()) {
        emit_series(configuration_series(space.resolve(), validate_degree(N)), out);
    } else if (hilbert_cmd->parsed()) {
        TruncatedSeries punctual = series_from_json(load_json(punctual_input));
        HilbertMode m = mode == "ordered" ? HilbertMode::ordered : HilbertMode::symmetric;
        emit_series(hilbert_series(space.resolve(), punctual, validate_degree(N), m), out);
    } else if (zeta_cmd->parsed()) {
        GradedEndomorphism g = endo_from_json(load_json(endo_input));
        bool graded = !ungraded;
        if (!out.z.empty() && rat_from_string(out.z) == 1) {
            graded = false;
            out.z.clear();
        }
        emit_series(lefschetz_zeta(g, validate_degree(N), graded), out);
    } else if (group_cmd->parsed()) {
        FiniteGroupData g = group_from_json(load_json(group_input));
        Json hj = load_json(h_input);
        std::map<std::string, LaurentPoly> h;
        for (auto it = hj.begin(); it != hj.end(); ++it) h[it.key()] = laurent_from_json(it.value());
        auto result = group_macdonald(g, h, validate_degree(N));
        if (out.format == "json") {
            Json j;
            for (const auto& [name, s] : result) j[name] = to_json(s);
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& [name, s] : result) std::cout << name << ": " << to_text(s) << "\n";
        }
    } else if (plethysm_cmd->parsed()) {
        SymFunc f = symfunc_from_json(load_json(outer_input));
        SymFunc g = symfunc_from_json(load_json(inner_input));
        emit_symfunc(plethysm(f, g, static_cast<int>(validate_degree(N))), out);
    } else if (exp_cmd->parsed()) {
        emit_series(exp(series_from_json(load_json(series_input))), out);
    } else if (log_cmd->parsed()) {
        emit_series(log(series_from_json(load_json(series_input))), out);
    } else if (pexp_cmd->parsed()) {
        emit_series(plethystic_exp(series_from_json(load_json(series_input))), out);
    } else if (plog_cmd->parsed()) {
        emit_series(plethystic_log(series_from_json(load_json(series_input))), out);
    } else if (power_cmd->parsed()) {
        TruncatedSeries base = series_from_json(load_json(base_input));
        Json ej = load_json(exponent_input);
        LaurentPoly exponent =
            ej.is_object() ? laurent_from_json(ej) : LaurentPoly(rat_from_json(ej));
        emit_series(power_structure(base, exponent), out);
    } else if (verify_cmd->parsed()) {
        auto results = verify::run_all_checks();
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name;
            if (!r.pass) std::cout << "\n     " << r.detail;
            std::cout << "\n";
        }
        if (!verify::all_passed(results)) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
