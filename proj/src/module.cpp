#include "mlp/module.hpp"

namespace mlp {

AtomSet ProgramModule::atoms() const { return set_union(set_union(input, output), hidden); }

AtomSet visible_atoms(const ProgramModule& m) { return set_union(m.input, m.output); }

ValidationResult validate_module(const ProgramModule& m) {
    ValidationResult res;
    auto overlap = [&](const AtomSet& a, const AtomSet& b, const char* what) {
        auto common = set_intersection(a, b);
        if (!common.empty()) res.violations.push_back(std::string(what) + " overlap: " + to_string(common));
    };
    overlap(m.input, m.output, "input and output");
    overlap(m.input, m.hidden, "input and hidden");
    overlap(m.output, m.hidden, "output and hidden");

    auto stray = set_difference(m.rules.atoms(), m.atoms());
    for (const auto& a : stray) res.violations.push_back("atom " + a.str() + " is not in the signature");

    auto headed_inputs = set_intersection(m.rules.head_atoms(), m.input);
    for (const auto& a : headed_inputs) res.violations.push_back("head atom " + a.str() + " is an input");
    return res;
}

}  // namespace mlp
