#include "mlp/program.hpp"

#include <stdexcept>

namespace mlp {

Rule Rule::normal(Atom head, AtomSet pos, AtomSet neg) {
    return Rule{RuleKind::normal, AtomSet{std::move(head)}, std::move(pos), std::move(neg)};
}

Rule Rule::constraint(AtomSet pos, AtomSet neg) {
    return Rule{RuleKind::constraint, {}, std::move(pos), std::move(neg)};
}

Rule Rule::choice(AtomSet head, AtomSet pos, AtomSet neg) {
    if (head.empty()) throw std::invalid_argument("choice rule needs at least one head atom");
    return Rule{RuleKind::choice, std::move(head), std::move(pos), std::move(neg)};
}

const Atom& Rule::head_atom() const {
    if (kind != RuleKind::normal || head.size() != 1) throw std::logic_error("not a normal rule");
    return *head.begin();
}

AtomSet Rule::atoms() const {
    AtomSet out = head;
    out.insert(body_pos.begin(), body_pos.end());
    out.insert(body_neg.begin(), body_neg.end());
    return out;
}

Program::Program(std::initializer_list<Rule> rules) {
    for (const auto& r : rules) add(r);
}

bool Program::add(Rule r) {
    bool shape_ok = (r.kind == RuleKind::normal && r.head.size() == 1) ||
                    (r.kind == RuleKind::constraint && r.head.empty()) ||
                    (r.kind == RuleKind::choice && !r.head.empty());
    if (!shape_ok) throw std::invalid_argument("rule head does not match its kind");
    if (!index_.insert(r).second) return false;
    rules_.push_back(std::move(r));
    return true;
}

void Program::append(const Program& other) {
    for (const auto& r : other) add(r);
}

AtomSet Program::atoms() const {
    AtomSet out;
    for (const auto& r : rules_) {
        out.insert(r.head.begin(), r.head.end());
        out.insert(r.body_pos.begin(), r.body_pos.end());
        out.insert(r.body_neg.begin(), r.body_neg.end());
    }
    return out;
}

AtomSet Program::head_atoms() const {
    AtomSet out;
    for (const auto& r : rules_) out.insert(r.head.begin(), r.head.end());
    return out;
}

bool Program::has_choice() const {
    for (const auto& r : rules_)
        if (r.kind == RuleKind::choice) return true;
    return false;
}

}  // namespace mlp
