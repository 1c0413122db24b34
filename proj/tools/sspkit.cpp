#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssp/ssp.hpp"

namespace {

using namespace ssp;
using nlohmann::json;

// Exit codes beyond the decision codes 0/1/2.
constexpr int exit_usage = 3;
constexpr int exit_input = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TransitionSystem load_ts(const std::string& path, bool as_json) {
    auto text = read_input(path);
    return as_json ? parse_ts_json(text) : parse_ts(text);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

std::string render_ts(const TransitionSystem& ts, const std::string& format) {
    if (format == "json") return ts_to_json(ts).dump(2) + "\n";
    if (format == "dot") return to_dot(ts);
    return serialize_ts(ts);
}

SearchBudget make_budget(long long budget) {
    return budget < 0 ? SearchBudget::unlimited() : SearchBudget{static_cast<std::uint64_t>(budget)};
}

Atom parse_atom(const TransitionSystem& ts, const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw InvalidAtom("atom must look like 's,t'");
    auto a = ts.find_state(text.substr(0, comma));
    auto b = ts.find_state(text.substr(comma + 1));
    if (!a || !b) throw InvalidAtom("atom '" + text + "' names an unknown state");
    if (*a == *b) throw InvalidAtom("atom states must differ");
    return {*a, *b};
}

std::string region_text(const TransitionSystem& ts, const Region& r) {
    std::string sup, sig;
    for (StateId s = 0; s < ts.num_states(); ++s) {
        if (!r.sup[s]) continue;
        if (!sup.empty()) sup += ' ';
        sup += ts.state_name(s);
    }
    for (EventId e = 0; e < ts.num_events(); ++e) {
        if (!sig.empty()) sig += ' ';
        sig += ts.event_name(e) + "=" + std::string(name(r.sig[e]));
    }
    return "  sup: {" + sup + "}\n  sig: " + sig + "\n";
}

int decision_code(Decision d) {
    switch (d) {
    case Decision::HasSSP: return 0;
    case Decision::LacksSSP: return 1;
    case Decision::Unknown: return 2;
    }
    return 2;
}

int status_code(AtomStatus s) {
    switch (s) {
    case AtomStatus::Solved: return 0;
    case AtomStatus::Unsolvable: return 1;
    case AtomStatus::Exhausted: return 2;
    }
    return 2;
}

struct Args {
    std::string type, file = "-", out, format = "text", output_format = "ts";
    std::string atom, reduction = "nop-inp", kind, model, suite = "all", scale = "full";
    long long budget = static_cast<long long>(SearchBudget{}.max_nodes);
    unsigned threads = 0, seed = 1;
    bool json_in = false, alpha_only = false, slow = false;
};

int cmd_classify(const Args& a) {
    auto tau = BooleanType::parse(a.type);
    auto c = classify_type(tau);
    if (a.format == "json") std::cout << classification_to_json(tau, c).dump(2) << "\n";
    else std::cout << c.to_string() << "\n";
    return 0;
}

int cmd_check_ssp(const Args& a) {
    auto ts = load_ts(a.file, a.json_in);
    auto tau = BooleanType::parse(a.type);
    auto rep = decide_ssp(ts, tau, make_budget(a.budget), DecideOptions{a.threads});
    if (a.format == "json") {
        std::cout << report_to_json(ts, rep).dump(2) << "\n";
    } else {
        std::cout << to_string(rep.decision);
        if (rep.witness_atom)
            std::cout << " (" << ts.state_name(rep.witness_atom->first) << ","
                      << ts.state_name(rep.witness_atom->second) << ")";
        std::cout << "\n" << rep.stats.atoms_checked << " atoms, " << rep.regions.size() << " regions, "
                  << rep.stats.nodes_expanded << " nodes\n";
        for (std::size_t i = 0; i < rep.regions.size(); ++i)
            std::cout << "R" << i << ":\n" << region_text(ts, rep.regions[i]);
    }
    return decision_code(rep.decision);
}

int cmd_solve_atom(const Args& a) {
    auto ts = load_ts(a.file, a.json_in);
    auto tau = BooleanType::parse(a.type);
    auto atom = parse_atom(ts, a.atom);
    auto v = solve_atom(ts, tau, atom, make_budget(a.budget));
    if (a.format == "json") {
        std::cout << verdict_to_json(ts, atom, v).dump(2) << "\n";
    } else {
        std::cout << to_string(v.status) << " after " << v.nodes << " nodes\n";
        if (v.region) std::cout << region_text(ts, *v.region);
    }
    return status_code(v.status);
}

int cmd_gen(const Args& a) {
    auto f = parse_formula(read_input(a.file));
    auto g = a.reduction == "nop-free" ? gen_nop_free(f) : gen_nop_inp(f);
    write_output(a.out, render_ts(g.ts, a.output_format));
    const auto& key = g.key_atom;
    json meta{{"reduction", a.reduction},
              {"key_atom", {key.first, key.second}},
              {"states", g.ts.num_states()},
              {"events", g.ts.num_events()},
              {"edges", g.ts.edges().size()}};
    // metadata goes to stderr when the TS itself is on stdout
    auto& os = a.out.empty() || a.out == "-" ? std::cerr : std::cout;
    if (a.format == "json") os << meta.dump(2) << "\n";
    else
        os << "key atom: " << key.first << "," << key.second << "\n"
           << "states: " << g.ts.num_states() << "\nevents: " << g.ts.num_events()
           << "\nedges: " << g.ts.edges().size() << "\n";
    return 0;
}

int cmd_transform(const Args& a) {
    auto ts = load_ts(a.file, a.json_in);
    auto kind = extension_from_name(a.kind);
    if (!kind) throw std::invalid_argument("unknown extension kind '" + a.kind + "'");
    write_output(a.out, render_ts(extend(ts, *kind), a.output_format));
    return 0;
}

int cmd_witness(const Args& a) {
    auto f = parse_formula(read_input(a.file));
    auto model = parse_model(f, a.model);
    require_model(f, model);
    const bool free = a.reduction == "nop-free";
    auto g = free ? gen_nop_free(f) : gen_nop_inp(f);
    const BooleanType tau = free ? swap_free_type : BooleanType{Interaction::nop, Interaction::inp};

    std::vector<NamedRegion> regions;
    if (a.alpha_only) {
        if (!free) throw std::invalid_argument("--alpha-only applies to the nop-free reduction");
        regions.push_back({"R_alpha", gen_nop_free_alpha_region(f, model, g.ts)});
    } else {
        regions = free ? gen_nop_free_witness(f, model, g.ts) : gen_nop_inp_witness(f, model);
    }

    std::size_t valid = 0;
    std::vector<Region> plain;
    for (const auto& nr : regions) {
        valid += is_region(g.ts, tau, nr.region);
        plain.push_back(nr.region);
    }
    const bool separates_alpha = detail::covering_region(plain, g.alpha()) >= 0;
    const bool separative = is_separative(g.ts, plain);
    const bool ok = valid == regions.size() && (a.alpha_only ? separates_alpha : separative);

    write_output(a.out, named_regions_to_json(g.ts, regions).dump(2) + "\n");
    auto& os = a.out.empty() || a.out == "-" ? std::cerr : std::cout;
    if (a.format == "json") {
        os << json{{"regions", regions.size()},
                   {"valid", valid},
                   {"solves_key_atom", separates_alpha},
                   {"separative", separative}}
                  .dump(2)
           << "\n";
    } else {
        os << regions.size() << " regions, " << valid << " valid {" << tau.to_string() << "}-regions\n"
           << "key atom " << (separates_alpha ? "solved" : "not solved") << "\n";
        if (!a.alpha_only) os << (separative ? "separative" : "not separative") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_verify(const Args& a) {
    VerifyOptions opt;
    opt.seed = a.seed;
    opt.scale = a.scale == "small" ? Scale::Small : Scale::Full;
    opt.slow = a.slow;
    bool all_ok = true;
    for (const auto& r : run_suite(a.suite, opt)) {
        std::printf("%s %s [%.0f ms] %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.ms, r.detail.c_str());
        all_ok = all_ok && r.passed;
    }
    return all_ok ? 0 : 1;
}

int cmd_oracle(const Args& a) {
    auto f = parse_formula(read_input(a.file));
    auto m = cm_oracle(f);
    if (a.format == "json") {
        std::cout << json{{"satisfiable", m.has_value()},
                          {"model", m ? json(model_to_string(f, *m)) : json(nullptr)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << (m ? model_to_string(f, *m) : "unsatisfiable") << "\n";
    }
    return m ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sspkit: state separation for Boolean types of nets"};
    app.require_subcommand(1);
    Args a;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", a.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_ts_input = [&](CLI::App* c) {
        c->add_option("file", a.file, "TS file, '-' for stdin");
        c->add_flag("--json", a.json_in, "input is a JSON TS");
    };
    auto add_budget = [&](CLI::App* c) {
        c->add_option("--budget", a.budget, "search nodes per atom, -1 for unlimited")->capture_default_str();
    };
    auto add_out = [&](CLI::App* c, bool ts_output) {
        c->add_option("-o,--out", a.out, "output file (default stdout)");
        if (ts_output)
            c->add_option("--output-format", a.output_format, "ts, json or dot")
                ->check(CLI::IsMember({"ts", "json", "dot"}));
    };

    auto* classify = app.add_subcommand("classify", "row and complexity of a type");
    classify->add_option("--type", a.type, "e.g. nop,inp")->required();
    add_format(classify);

    auto* check = app.add_subcommand("check-ssp", "decide the tau-SSP");
    add_ts_input(check);
    check->add_option("--type", a.type)->required();
    add_budget(check);
    check->add_option("--threads", a.threads, "workers (default SSP_KIT_THREADS or all cores)");
    add_format(check);

    auto* solve = app.add_subcommand("solve-atom", "search a region solving one atom");
    add_ts_input(solve);
    solve->add_option("--type", a.type)->required();
    solve->add_option("--atom", a.atom, "s,t")->required();
    add_budget(solve);
    add_format(solve);

    auto* gen = app.add_subcommand("gen", "build a reduction instance from a formula");
    gen->add_option("--reduction", a.reduction)->check(CLI::IsMember({"nop-inp", "nop-free"}))->capture_default_str();
    gen->add_option("formula", a.file, "formula file, '-' for stdin");
    add_out(gen, true);
    add_format(gen);

    auto* transform = app.add_subcommand("transform", "backward, oneway-loop or loop extension");
    add_ts_input(transform);
    transform->add_option("--kind", a.kind)->required()->check(CLI::IsMember({"backward", "oneway-loop", "loop"}));
    add_out(transform, true);

    auto* witness = app.add_subcommand("witness", "region set for a model");
    witness->add_option("--reduction", a.reduction)->check(CLI::IsMember({"nop-inp", "nop-free"}))->capture_default_str();
    witness->add_option("formula", a.file, "formula file, '-' for stdin");
    witness->add_option("--model", a.model, "e.g. X0,X4")->required();
    witness->add_flag("--alpha-only", a.alpha_only, "only the region for the key atom");
    add_out(witness, false);
    add_format(witness);

    auto* verify = app.add_subcommand("verify", "run property suites");
    verify->add_option("--suite", a.suite)->check(CLI::IsMember(suite_names()))->capture_default_str();
    verify->add_option("--seed", a.seed)->capture_default_str();
    verify->add_option("--scale", a.scale)->check(CLI::IsMember({"small", "full"}))->capture_default_str();
    verify->add_flag("--slow", a.slow, "include the nop-free unsolvability search");

    auto* oracle = app.add_subcommand("oracle", "one-in-three model of a formula");
    oracle->add_option("formula", a.file, "formula file, '-' for stdin");
    add_format(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*classify) return cmd_classify(a);
        if (*check) return cmd_check_ssp(a);
        if (*solve) return cmd_solve_atom(a);
        if (*gen) return cmd_gen(a);
        if (*transform) return cmd_transform(a);
        if (*witness) return cmd_witness(a);
        if (*verify) return cmd_verify(a);
        if (*oracle) return cmd_oracle(a);
    } catch (const ssp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_usage;
}
