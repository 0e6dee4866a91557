#include "mlp/compose.hpp"

#include "mlp/depgraph.hpp"
#include "mlp/error.hpp"

#include <stdexcept>

namespace mlp {

namespace {

using Kind = CompositionError::Kind;

std::vector<Atom> as_vector(const AtomSet& s) { return {s.begin(), s.end()}; }

void check_hidden(const ProgramModule& p1, const ProgramModule& p2) {
    auto leak = set_union(set_intersection(p1.hidden, p2.atoms()), set_intersection(p2.hidden, p1.atoms()));
    if (!leak.empty()) throw CompositionError(Kind::hidden_leak, as_vector(leak));
}

Program union_rules(const ProgramModule& p1, const ProgramModule& p2) {
    Program r = p1.rules;
    r.append(p2.rules);
    return r;
}

ProgramModule rename_impl(const ProgramModule& p, const RenameMap& map, bool adopt) {
    AtomSet not_outputs;
    AtomSet collisions;
    const AtomSet at = p.atoms();
    for (const auto& [old, fresh] : map.pairs()) {
        if (!p.output.contains(old) && (!adopt || p.hidden.contains(old))) not_outputs.insert(old);
        if (at.contains(fresh)) collisions.insert(fresh);
    }
    if (!not_outputs.empty()) throw CompositionError(Kind::old_not_output, as_vector(not_outputs));
    if (!collisions.empty()) throw CompositionError(Kind::fresh_collision, as_vector(collisions));

    ProgramModule out;
    for (Rule r : p.rules) {
        AtomSet head;
        for (const auto& h : r.head) head.insert(map.contains(h) ? map[h] : h);
        r.head = std::move(head);
        out.rules.add(std::move(r));
    }
    for (const auto& [old, fresh] : map.pairs()) out.rules.add(Rule::constraint({fresh}, {old}));
    out.input = set_union(p.input, map.olds());
    out.output = set_union(set_difference(p.output, map.olds()), map.freshes());
    out.hidden = p.hidden;
    return out;
}

void check_coverage(const AtomSet& common, const RenameMap& map) {
    auto olds = map.olds();
    if (olds == common) return;
    auto diff = set_union(set_difference(olds, common), set_difference(common, olds));
    throw CompositionError(Kind::coverage_mismatch, as_vector(diff));
}

TransformedComposition transform(const ProgramModule& p1, const ProgramModule& p2, RenameScope scope,
                                 bool with_filter) {
    TransformedComposition t;
    t.renamed_atoms = scope == RenameScope::common_outputs ? set_intersection(p1.output, p2.output)
                                                           : set_union(p1.output, p2.output);
    AtomSet avoid = set_union(p1.atoms(), p2.atoms());
    t.primed = make_rename_map(t.renamed_atoms, "r1", avoid);
    avoid = set_union(avoid, t.primed.freshes());
    t.double_primed = make_rename_map(t.renamed_atoms, "r2", avoid);

    const bool adopt = scope == RenameScope::all_outputs;
    t.renamed1 = rename_impl(p1, t.primed, adopt);
    t.renamed2 = rename_impl(p2, t.double_primed, adopt);
    t.union_module = build_union_module(t.renamed_atoms, t.primed, t.double_primed);
    t.composite = compose_sqcup(compose_sqcup(t.renamed1, t.renamed2), t.union_module);
    if (with_filter) {
        t.filter_module = build_filter_module(t.primed, t.double_primed);
        t.composite = compose_sqcup(t.composite, t.filter_module);
    }
    // The fresh atoms are outputs of the composite, so hiding adds no choice rules.
    t.result = hide(t.composite, set_union(t.primed.freshes(), t.double_primed.freshes()));
    return t;
}

}  // namespace

void RenameMap::add(Atom old, Atom fresh) {
    if (pairs_.contains(old)) throw std::invalid_argument("atom " + old.str() + " renamed twice");
    if (freshes_.contains(fresh)) throw std::invalid_argument("fresh atom " + fresh.str() + " used twice");
    freshes_.insert(fresh);
    pairs_.emplace(std::move(old), std::move(fresh));
}

AtomSet RenameMap::olds() const {
    AtomSet out;
    for (const auto& [o, f] : pairs_) out.insert(o);
    return out;
}

AtomSet RenameMap::freshes() const { return freshes_; }

Atom fresh_atom(const Atom& base, std::string_view tag, const AtomSet& avoid) {
    const std::string stem = std::string(base.predicate()) + "__" + std::string(tag);
    const auto args = base.arguments();
    Atom candidate = Atom::make(stem, args);
    for (int bump = 2; avoid.contains(candidate); ++bump) candidate = Atom::make(stem + "_" + std::to_string(bump), args);
    return candidate;
}

RenameMap make_rename_map(const AtomSet& olds, std::string_view tag, const AtomSet& avoid) {
    RenameMap map;
    AtomSet taken = avoid;
    for (const auto& o : olds) {
        Atom f = fresh_atom(o, tag, taken);
        taken.insert(f);
        map.add(o, std::move(f));
    }
    return map;
}

ProgramModule compose_plus(const ProgramModule& p1, const ProgramModule& p2) {
    auto overlap = set_intersection(p1.output, p2.output);
    if (!overlap.empty()) throw CompositionError(Kind::outputs_overlap, as_vector(overlap));
    check_hidden(p1, p2);
    ProgramModule out;
    out.rules = union_rules(p1, p2);
    out.input = set_union(set_difference(p1.input, p2.output), set_difference(p2.input, p1.output));
    out.output = set_union(p1.output, p2.output);
    out.hidden = set_union(p1.hidden, p2.hidden);
    return out;
}

ProgramModule compose_sqcup(const ProgramModule& p1, const ProgramModule& p2) {
    ProgramModule out = compose_plus(p1, p2);
    auto check = check_mutual_independence(p1, p2);
    if (!check.independent) throw CompositionError(Kind::mutual_dependence, std::move(check.witness));
    return out;
}

ProgramModule compose_relaxed(const ProgramModule& p1, const ProgramModule& p2) {
    check_hidden(p1, p2);
    ProgramModule out;
    out.rules = union_rules(p1, p2);
    out.output = set_union(p1.output, p2.output);
    out.input = set_difference(set_union(p1.input, p2.input), out.output);
    out.hidden = set_union(p1.hidden, p2.hidden);
    return out;
}

ProgramModule rename_output(const ProgramModule& p, const RenameMap& map) { return rename_impl(p, map, false); }

ProgramModule hide(const ProgramModule& p, const AtomSet& s) {
    ProgramModule out;
    out.rules = p.rules;
    for (const auto& i : set_intersection(p.input, s)) out.rules.add(Rule::choice({i}));
    out.input = set_difference(p.input, s);
    out.output = set_difference(p.output, s);
    out.hidden = set_union(p.hidden, set_intersection(visible_atoms(p), s));
    return out;
}

ProgramModule project(const ProgramModule& p, const AtomSet& s) {
    ProgramModule out;
    out.rules = p.rules;
    for (const auto& i : set_difference(p.input, s)) out.rules.add(Rule::choice({i}));
    out.input = set_intersection(p.input, s);
    out.output = set_intersection(p.output, s);
    out.hidden = set_union(p.hidden, set_difference(visible_atoms(p), s));
    return out;
}

ProgramModule build_union_module(const AtomSet& common, const RenameMap& primed, const RenameMap& double_primed) {
    check_coverage(common, primed);
    check_coverage(common, double_primed);
    ProgramModule out;
    for (const auto& o : common) {
        out.rules.add(Rule::normal(o, {primed[o]}));
        out.rules.add(Rule::normal(o, {double_primed[o]}));
    }
    out.input = set_union(primed.freshes(), double_primed.freshes());
    out.output = common;
    return out;
}

ProgramModule build_filter_module(const RenameMap& primed, const RenameMap& double_primed) {
    const AtomSet common = primed.olds();
    check_coverage(common, double_primed);
    ProgramModule out;
    for (const auto& o : common) {
        out.rules.add(Rule::constraint({primed[o]}, {double_primed[o]}));
        out.rules.add(Rule::constraint({double_primed[o]}, {primed[o]}));
    }
    out.input = set_union(primed.freshes(), double_primed.freshes());
    return out;
}

TransformedComposition transform_relaxed_rt(const ProgramModule& p1, const ProgramModule& p2, RenameScope scope) {
    return transform(p1, p2, scope, false);
}

TransformedComposition transform_conservative(const ProgramModule& p1, const ProgramModule& p2, RenameScope scope) {
    return transform(p1, p2, scope, true);
}

ProgramModule compose_relaxed_rt(const ProgramModule& p1, const ProgramModule& p2, RenameScope scope) {
    return transform_relaxed_rt(p1, p2, scope).result;
}

ProgramModule compose_conservative(const ProgramModule& p1, const ProgramModule& p2, RenameScope scope) {
    return transform_conservative(p1, p2, scope).result;
}

}  // namespace mlp
