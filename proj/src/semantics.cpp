#include "mlp/semantics.hpp"

#include "enumerator.hpp"
#include "mlp/error.hpp"

#include <stdexcept>

namespace mlp {

bool PositiveProgram::operator==(const PositiveProgram& other) const {
    return std::set<Rule>(rules.begin(), rules.end()) == std::set<Rule>(other.rules.begin(), other.rules.end());
}

Atom choice_aux_atom(const Atom& a) { return Atom::make(std::string(a.predicate()) + "__aux", a.arguments()); }

Program translate_choice(const Program& p, AtomSet& hidden_sink) {
    if (!p.has_choice()) return p;
    const AtomSet existing = p.atoms();
    Program out;
    for (const auto& r : p) {
        if (r.kind != RuleKind::choice) {
            out.add(r);
            continue;
        }
        for (const auto& a : r.head) {
            Atom aux = choice_aux_atom(a);
            if (existing.contains(aux)) throw CompositionError(CompositionError::Kind::fresh_collision, {aux});
            AtomSet neg = r.body_neg;
            neg.insert(aux);
            out.add(Rule::normal(a, r.body_pos, std::move(neg)));
            out.add(Rule::normal(aux, {}, {a}));
            hidden_sink.insert(std::move(aux));
        }
    }
    return out;
}

PositiveProgram reduct(const Program& p, const Interpretation& m) {
    PositiveProgram out;
    for (const auto& r : p) {
        if (r.kind == RuleKind::choice) throw std::invalid_argument("reduct expects a choice-free program");
        if (!disjoint(r.body_neg, m)) continue;
        Rule kept = r;
        kept.body_neg.clear();
        out.rules.push_back(std::move(kept));
    }
    return out;
}

std::optional<Interpretation> least_model(const PositiveProgram& p) {
    Interpretation m;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : p.rules) {
            if (!subset_of(r.body_pos, m)) continue;
            if (r.kind == RuleKind::constraint) return std::nullopt;
            changed = m.insert(r.head_atom()).second || changed;
        }
    }
    return m;
}

namespace {

void check_cap(std::size_t atoms, const SolveOptions& options) {
    if (atoms > options.max_atoms) throw CapExceeded(atoms, options.max_atoms);
}

ModelSet solve(const Program& rules, const AtomSet& universe, const AtomSet& inputs) {
    AtomSet aux;
    Program normal = translate_choice(rules, aux);
    ModelSet full = detail::enumerate_stable_models(normal, set_union(universe, aux), inputs);
    if (aux.empty()) return full;
    ModelSet out;
    for (const auto& m : full) out.insert(set_difference(m, aux));
    return out;
}

}  // namespace

ModelSet stable_models_program(const Program& p, const SolveOptions& options) {
    AtomSet universe = p.atoms();
    check_cap(universe.size(), options);
    return solve(p, universe, {});
}

AnswerSetCollection stable_models_module(const ProgramModule& m, const SolveOptions& options) {
    AtomSet universe = m.atoms();
    check_cap(universe.size(), options);
    if (auto v = validate_module(m); !v) throw Error("module is not well-formed: " + v.violations.front());
    AnswerSetCollection out{m.input, m.output, m.hidden, {}};
    out.models = solve(m.rules, universe, m.input);
    return out;
}

}  // namespace mlp
