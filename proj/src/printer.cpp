#include "mlp/printer.hpp"

#include <json.hpp>

namespace mlp {

namespace {

std::string join_atoms(const AtomSet& atoms, const char* sep = ", ") {
    std::string s;
    for (const auto& a : atoms) {
        if (!s.empty()) s += sep;
        s += a.str();
    }
    return s;
}

std::string declaration(const char* section, const AtomSet& atoms) {
    return std::string(section) + ": " + (atoms.empty() ? "-" : join_atoms(atoms)) + "\n";
}

nlohmann::json atom_list(const AtomSet& atoms) {
    auto arr = nlohmann::json::array();
    for (const auto& a : atoms) arr.push_back(a.str());
    return arr;
}

}  // namespace

std::string format_rule(const Rule& r) {
    std::string s;
    switch (r.kind) {
        case RuleKind::normal: s = r.head_atom().str(); break;
        case RuleKind::choice: s = "{" + join_atoms(r.head) + "}"; break;
        case RuleKind::constraint: break;
    }
    std::string body = join_atoms(r.body_pos);
    for (const auto& a : r.body_neg) {
        if (!body.empty()) body += ", ";
        body += "not " + a.str();
    }
    if (r.kind == RuleKind::constraint) return ":- " + body + ".";
    if (!body.empty()) s += " :- " + body;
    return s + ".";
}

std::string format_module(const ProgramModule& m, std::string_view name) {
    std::string s = "module " + std::string(name) + "\n";
    s += declaration("input", m.input);
    s += declaration("output", m.output);
    s += declaration("hidden", m.hidden);
    s += "rules:\n";
    for (const auto& r : m.rules) s += format_rule(r) + "\n";
    return s;
}

std::string format_models(const ModelSet& models) {
    std::string s;
    for (const auto& m : models) s += to_string(m) + "\n";
    return s;
}

std::string collection_json(std::string_view name, const AnswerSetCollection& c) {
    nlohmann::ordered_json j;
    j["module"] = std::string(name);
    j["input"] = atom_list(c.input);
    j["output"] = atom_list(c.output);
    j["hidden"] = atom_list(c.hidden);
    auto models = nlohmann::json::array();
    for (const auto& m : c.models) models.push_back(atom_list(m));
    j["models"] = std::move(models);
    return j.dump();
}

}  // namespace mlp
