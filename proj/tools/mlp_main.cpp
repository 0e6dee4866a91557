// mlp: solve, compose, join and compare answer-set program modules.

#include "mlp/compose.hpp"
#include "mlp/equivalence.hpp"
#include "mlp/error.hpp"
#include "mlp/harness.hpp"
#include "mlp/join.hpp"
#include "mlp/parser.hpp"
#include "mlp/printer.hpp"
#include "mlp/semantics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { ok = 0, verdict_fail = 1, usage = 2, cap = 3 };

struct Common {
    std::size_t max_atoms = mlp::default_max_atoms;
    bool allow_reserved = false;
    bool json = false;
    bool visible_only = false;
    bool count = false;

    mlp::SolveOptions solve() const { return {max_atoms}; }
    mlp::ParseOptions parse() const { return {allow_reserved}; }
};

struct Loaded {
    std::string name;
    mlp::ProgramModule module;
};

Loaded load(const std::string& path, const Common& c) {
    Loaded l;
    l.module = mlp::load_module_file(path, c.parse(), &l.name);
    return l;
}

mlp::AtomSet parse_atom_list(const std::string& text, const Common& c) {
    // Reuse the module parser so atoms are canonicalised the same way.
    auto src = mlp::parse_module("module s\ninput: " + (text.empty() ? std::string("-") : text) + "\n", c.parse());
    return {src.input.begin(), src.input.end()};
}

std::string render_collection(const std::string& name, mlp::AnswerSetCollection c, const Common& opt) {
    if (opt.visible_only) c.models = mlp::restrict_models(c.models, c.visible());
    if (opt.json) return mlp::collection_json(name, c) + "\n";
    if (opt.count) return std::to_string(c.models.size()) + "\n";
    return mlp::format_models(c.models);
}

void add_common(CLI::App* cmd, Common& c, bool models = true) {
    cmd->add_option("--max-atoms", c.max_atoms, "Largest |At| an enumeration accepts (env MLP_MAX_ATOMS)");
    cmd->add_flag("--allow-reserved", c.allow_reserved, "Accept atoms using the reserved `__` infix");
    cmd->add_flag("--json", c.json, "Emit JSON records");
    if (models) {
        cmd->add_flag("--visible-only", c.visible_only, "Project models onto input and output atoms");
        cmd->add_flag("--count", c.count, "Print only the number of models");
    }
}

std::string op_token(const std::string& op) {
    std::string s = op;
    for (auto& ch : s)
        if (ch == '-') ch = '_';
    return s;
}

mlp::ProgramModule apply_op(const std::string& op, const mlp::ProgramModule& a, const mlp::ProgramModule& b,
                            mlp::RenameScope scope) {
    if (op == "plus") return mlp::compose_plus(a, b);
    if (op == "sqcup") return mlp::compose_sqcup(a, b);
    if (op == "relaxed") return mlp::compose_relaxed(a, b);
    if (op == "relaxed-rt") return mlp::compose_relaxed_rt(a, b, scope);
    return mlp::compose_conservative(a, b, scope);
}

mlp::SolveOptions campaign_options(const Common& c, const CLI::Option* explicit_cap) {
    return {explicit_cap->count() > 0 || std::getenv("MLP_MAX_ATOMS") ? c.max_atoms : mlp::campaign_max_atoms};
}

int run(int argc, char** argv) {
    CLI::App app{"Answer-set program modules: solving, composition, join and equivalence"};
    app.require_subcommand(1);

    Common c;
    if (const char* env = std::getenv("MLP_MAX_ATOMS")) {
        try {
            c.max_atoms = std::stoul(env);
        } catch (const std::exception&) {
            std::cerr << "error: MLP_MAX_ATOMS is not a number: " << env << "\n";
            return usage;
        }
    }

    std::vector<std::string> files;
    std::string op, mode = "modular", theorem, set_text, rename_text;
    bool emit = false, solve = false, all_outputs = false, random = false;
    std::size_t trials = 100;
    mlp::GeneratorConfig gen;

    auto* solve_cmd = app.add_subcommand("solve", "Print the stable models of each module");
    solve_cmd->add_option("files", files, "Module files")->required()->check(CLI::ExistingFile);
    add_common(solve_cmd, c);

    auto* compose_cmd = app.add_subcommand("compose", "Compose two modules");
    compose_cmd->add_option("files", files, "Two module files")->required()->expected(2)->check(CLI::ExistingFile);
    compose_cmd->add_option("--op", op, "Operator")
        ->required()
        ->check(CLI::IsMember({"plus", "sqcup", "relaxed", "relaxed-rt", "conservative"}));
    compose_cmd->add_flag("--emit-module", emit, "Print the composed module (default)");
    compose_cmd->add_flag("--solve", solve, "Print the composed module's stable models");
    compose_cmd->add_flag("--rename-all-outputs", all_outputs, "Rename O1 u O2 instead of O1 n O2");
    add_common(compose_cmd, c);

    auto* join_cmd = app.add_subcommand("join", "Natural join of the answer sets of two modules");
    join_cmd->add_option("files", files, "Two module files")->required()->expected(2)->check(CLI::ExistingFile);
    add_common(join_cmd, c);

    auto* check_cmd = app.add_subcommand("check", "Check a compositionality claim");
    check_cmd->add_option("theorem", theorem, "module | relaxed-rt | conservative | hide-project | rename-recovery | lemma2-demo")
        ->required()
        ->check(CLI::IsMember({"module", "relaxed-rt", "conservative", "hide-project", "rename-recovery", "lemma2-demo"}));
    check_cmd->add_option("files", files, "Module files")->check(CLI::ExistingFile);
    check_cmd->add_flag("--random", random, "Run a seeded campaign on generated modules");
    check_cmd->add_option("--trials", trials, "Campaign trials");
    check_cmd->add_option("--seed", gen.seed, "Campaign seed");
    check_cmd->add_option("--atoms", gen.atom_budget, "Atom budget per generated instance");
    check_cmd->add_option("--rules", gen.rule_budget, "Rule budget per generated module");
    check_cmd->add_option("--set", set_text, "hide-project: comma-separated atoms of S");
    check_cmd->add_option("--rename", rename_text, "rename-recovery: outputs to rename (default all)");
    check_cmd->add_flag("--rename-all-outputs", all_outputs, "relaxed-rt: rename O1 u O2");
    add_common(check_cmd, c, false);
    const CLI::Option* check_cap = check_cmd->get_option("--max-atoms");

    auto* equiv_cmd = app.add_subcommand("equiv", "Visible or modular equivalence of two modules");
    equiv_cmd->add_option("files", files, "Two module files")->required()->expected(2)->check(CLI::ExistingFile);
    equiv_cmd->add_option("--mode", mode, "visible | modular")->check(CLI::IsMember({"visible", "modular"}));
    add_common(equiv_cmd, c, false);

    auto* random_cmd = app.add_subcommand("random", "Print a generated module");
    random_cmd->add_option("--seed", gen.seed, "Generator seed");
    random_cmd->add_option("--atoms", gen.atom_budget, "Atom budget");
    random_cmd->add_option("--rules", gen.rule_budget, "Rule budget");
    random_cmd->add_option("--input-fraction", gen.input_fraction, "Share of input atoms");
    random_cmd->add_option("--output-fraction", gen.output_fraction, "Share of output atoms");
    random_cmd->add_option("--choice-probability", gen.choice_probability, "Chance of a choice rule");
    random_cmd->add_option("--negation-probability", gen.negation_probability, "Chance of a negative literal");
    random_cmd->add_option("--constraint-probability", gen.constraint_probability, "Chance of a constraint");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    const auto scope = all_outputs ? mlp::RenameScope::all_outputs : mlp::RenameScope::common_outputs;
    std::ostringstream out;
    int status = ok;

    try {
        if (*solve_cmd) {
            std::vector<std::pair<std::string, mlp::AnswerSetCollection>> results;
            for (const auto& f : files) {
                auto l = load(f, c);
                results.emplace_back(l.name, mlp::stable_models_module(l.module, c.solve()));
            }
            for (const auto& [name, coll] : results) {
                if (results.size() > 1 && !c.json) out << "module " << name << "\n";
                out << render_collection(name, coll, c);
            }
        } else if (*compose_cmd) {
            auto a = load(files[0], c), b = load(files[1], c);
            auto m = apply_op(op, a.module, b.module, scope);
            const std::string name = a.name + "_" + op_token(op) + "_" + b.name;
            if (!solve || emit) out << mlp::format_module(m, name);
            if (solve) out << render_collection(name, mlp::stable_models_module(m, c.solve()), c);
        } else if (*join_cmd) {
            auto a = load(files[0], c), b = load(files[1], c);
            auto joined = mlp::natural_join(mlp::stable_models_module(a.module, c.solve()),
                                            mlp::stable_models_module(b.module, c.solve()));
            out << render_collection(a.name + "_join_" + b.name, joined, c);
        } else if (*check_cmd) {
            auto id = *mlp::parse_theorem_id(theorem);
            std::vector<mlp::TheoremReport> reports;
            if (id == mlp::TheoremId::lemma2_demo) {
                reports.push_back(mlp::check_lemma2_demo(c.solve()));
            } else if (random) {
                gen.validate();
                reports = mlp::run_campaign(id, gen, trials, campaign_options(c, check_cap));
            } else {
                const bool pair = id == mlp::TheoremId::module || id == mlp::TheoremId::relaxed_rt ||
                                  id == mlp::TheoremId::conservative;
                if (files.size() != (pair ? 2u : 1u)) {
                    std::cerr << "error: check " << theorem << " takes " << (pair ? 2 : 1)
                              << " module file(s) or --random\n";
                    return usage;
                }
                std::vector<Loaded> ms;
                for (const auto& f : files) ms.push_back(load(f, c));
                switch (id) {
                case mlp::TheoremId::module:
                    reports.push_back(mlp::check_module_theorem(ms[0].module, ms[1].module, c.solve()));
                    break;
                case mlp::TheoremId::relaxed_rt:
                    reports.push_back(mlp::check_relaxed_rt(ms[0].module, ms[1].module, c.solve(), scope));
                    break;
                case mlp::TheoremId::conservative:
                    reports.push_back(mlp::check_conservative(ms[0].module, ms[1].module, c.solve()));
                    break;
                case mlp::TheoremId::hide_project:
                    reports.push_back(mlp::check_hide_project(ms[0].module, parse_atom_list(set_text, c), c.solve()));
                    break;
                case mlp::TheoremId::rename_recovery: {
                    auto olds = rename_text.empty() ? ms[0].module.output : parse_atom_list(rename_text, c);
                    reports.push_back(mlp::check_rename_recovery(ms[0].module, olds, c.solve()));
                    break;
                }
                case mlp::TheoremId::lemma2_demo: break;
                }
            }
            std::size_t passed = 0;
            for (const auto& r : reports) {
                if (r.passed()) ++passed;
                if (c.json) out << mlp::report_json(r) << "\n";
                else if (!random || !r.passed()) out << mlp::format_report(r);
            }
            if (!c.json)
                out << (passed == reports.size() ? "PASS" : "FAIL") << " " << theorem << ": " << passed << "/"
                    << reports.size() << "\n";
            status = passed == reports.size() ? ok : verdict_fail;
        } else if (*equiv_cmd) {
            auto a = load(files[0], c), b = load(files[1], c);
            auto res = mode == "visible" ? mlp::visibly_equivalent(a.module, b.module, c.solve())
                                         : mlp::modularly_equivalent(a.module, b.module, c.solve());
            if (c.json) {
                nlohmann::ordered_json j{{"mode", mode}, {"equivalent", res.equivalent}, {"reason", res.reason}};
                out << j.dump() << "\n";
            } else {
                out << (res.equivalent ? "equivalent" : "not equivalent");
                if (!res.equivalent && !res.reason.empty()) out << ": " << res.reason;
                out << "\n";
            }
            status = res.equivalent ? ok : verdict_fail;
        } else if (*random_cmd) {
            out << mlp::format_module(mlp::random_module(gen), "random");
        }
    } catch (const mlp::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cap;
    } catch (const mlp::CompositionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const mlp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }

    std::cout << out.str();
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
}
