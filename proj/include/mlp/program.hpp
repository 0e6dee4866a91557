#pragma once

#include "mlp/atom.hpp"

#include <compare>
#include <cstddef>
#include <set>
#include <vector>

namespace mlp {

enum class RuleKind { normal, constraint, choice };

/// A ground rule `head :- body_pos, not body_neg.`
///
/// Normal rules have exactly one head atom, constraints none, choice rules at
/// least one. A rule whose positive and negative bodies overlap is allowed; it
/// simply never fires.
struct Rule {
    RuleKind kind = RuleKind::normal;
    AtomSet head;
    AtomSet body_pos;
    AtomSet body_neg;

    static Rule normal(Atom head, AtomSet pos = {}, AtomSet neg = {});
    static Rule fact(Atom head) { return normal(std::move(head)); }
    static Rule constraint(AtomSet pos, AtomSet neg = {});
    static Rule choice(AtomSet head, AtomSet pos = {}, AtomSet neg = {});

    /// Head atom of a normal rule.
    const Atom& head_atom() const;
    bool is_fact() const noexcept { return kind == RuleKind::normal && body_pos.empty() && body_neg.empty(); }
    AtomSet atoms() const;

    auto operator<=>(const Rule&) const = default;
    bool operator==(const Rule&) const = default;
};

/// Rules in source order without duplicates. Equality ignores order.
class Program {
public:
    Program() = default;
    Program(std::initializer_list<Rule> rules);

    /// Appends `r` unless an identical rule is already present.
    bool add(Rule r);
    void append(const Program& other);

    const std::vector<Rule>& rules() const noexcept { return rules_; }
    std::size_t size() const noexcept { return rules_.size(); }
    bool empty() const noexcept { return rules_.empty(); }
    bool contains(const Rule& r) const { return index_.contains(r); }
    auto begin() const noexcept { return rules_.begin(); }
    auto end() const noexcept { return rules_.end(); }

    /// At(R): every atom occurring in a head or body.
    AtomSet atoms() const;
    /// Atoms occurring in normal or choice rule heads.
    AtomSet head_atoms() const;
    bool has_choice() const;

    bool operator==(const Program& other) const { return index_ == other.index_; }

private:
    std::vector<Rule> rules_;
    std::set<Rule> index_;
};

}  // namespace mlp
