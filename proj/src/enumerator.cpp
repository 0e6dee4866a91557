#include "enumerator.hpp"

#include <map>
#include <stdexcept>

namespace mlp::detail {

namespace {

enum : signed char { unknown = -1, no = 0, yes = 1 };

struct IndexedRule {
    int head;  // -1 for constraints
    std::vector<int> pos;
    std::vector<int> neg;
};

class Search {
public:
    Search(const Program& program, const AtomSet& universe, const AtomSet& inputs) {
        for (const auto& a : universe) add_atom(a);
        for (const auto& r : program) {
            if (r.kind == RuleKind::choice) throw std::invalid_argument("choice rules must be translated first");
            IndexedRule ir;
            ir.head = r.kind == RuleKind::normal ? add_atom(r.head_atom()) : -1;
            for (const auto& a : r.body_pos) ir.pos.push_back(add_atom(a));
            for (const auto& a : r.body_neg) ir.neg.push_back(add_atom(a));
            rules_.push_back(std::move(ir));
        }
        for (const auto& a : inputs) add_atom(a);
        is_input_.assign(names_.size(), false);
        for (const auto& a : inputs) is_input_[add_atom(a)] = true;
        occurs_.assign(names_.size(), {});
        for (std::size_t r = 0; r < rules_.size(); ++r)
            for (int a : rules_[r].pos) occurs_[a].push_back(static_cast<int>(r));

        std::vector<bool> guess(names_.size(), false);
        for (std::size_t a = 0; a < names_.size(); ++a) guess[a] = is_input_[a];
        for (const auto& r : rules_)
            for (int a : r.neg) guess[a] = true;
        for (std::size_t a = 0; a < names_.size(); ++a)
            if (guess[a]) guess_.push_back(static_cast<int>(a));
    }

    ModelSet run() {
        std::vector<signed char> value(names_.size(), unknown);
        descend(value);
        return std::move(models_);
    }

private:
    int add_atom(const Atom& a) {
        auto [it, fresh] = index_.try_emplace(a, static_cast<int>(names_.size()));
        if (fresh) names_.push_back(a);
        return it->second;
    }

    // Least model of the rules admitted by `admit` plus input facts admitted by
    // `fact`. Returns false if an admitted constraint fires.
    template <class Admit, class Fact>
    bool closure(std::vector<char>& in, Admit admit, Fact fact) const {
        in.assign(names_.size(), 0);
        std::vector<int> missing(rules_.size());
        std::vector<int> queue;
        bool consistent = true;
        auto derive = [&](int a) {
            if (!in[a]) {
                in[a] = 1;
                queue.push_back(a);
            }
        };
        auto fire = [&](std::size_t r) {
            if (rules_[r].head < 0) consistent = false;
            else derive(rules_[r].head);
        };
        for (std::size_t r = 0; r < rules_.size(); ++r) {
            if (!admit(rules_[r])) {
                missing[r] = -1;
                continue;
            }
            missing[r] = static_cast<int>(rules_[r].pos.size());
            if (missing[r] == 0) fire(r);
        }
        for (int a : guess_)
            if (is_input_[a] && fact(a)) derive(a);
        while (!queue.empty()) {
            int a = queue.back();
            queue.pop_back();
            for (int r : occurs_[a])
                if (missing[r] > 0 && --missing[r] == 0) fire(static_cast<std::size_t>(r));
        }
        return consistent;
    }

    bool propagate(std::vector<signed char>& value) const {
        std::vector<char> lower;
        std::vector<char> upper;
        for (;;) {
            auto negatives_false = [&](const IndexedRule& r) {
                for (int a : r.neg)
                    if (value[a] != no) return false;
                return true;
            };
            auto not_blocked = [&](const IndexedRule& r) {
                for (int a : r.neg)
                    if (value[a] == yes) return false;
                return true;
            };
            if (!closure(lower, negatives_false, [&](int a) { return value[a] == yes; })) return false;
            closure(upper, not_blocked, [&](int a) { return value[a] != no; });
            bool changed = false;
            for (int g : guess_) {
                if (value[g] == no && lower[g]) return false;
                if (value[g] == yes && !upper[g]) return false;
                if (value[g] == unknown) {
                    if (lower[g]) value[g] = yes, changed = true;
                    else if (!upper[g]) value[g] = no, changed = true;
                }
            }
            if (!changed) {
                last_lower_ = std::move(lower);
                return true;
            }
        }
    }

    void descend(std::vector<signed char>& value) {
        if (!propagate(value)) return;
        for (int g : guess_) {
            if (value[g] != unknown) continue;
            for (signed char v : {yes, no}) {
                auto next = value;
                next[g] = v;
                descend(next);
            }
            return;
        }
        // Fully assigned: both bounds coincide with LM of the reduct.
        Interpretation m;
        for (std::size_t a = 0; a < names_.size(); ++a)
            if (last_lower_[a]) m.insert(names_[a]);
        models_.insert(std::move(m));
    }

    std::map<Atom, int> index_;
    std::vector<Atom> names_;
    std::vector<IndexedRule> rules_;
    std::vector<bool> is_input_;
    std::vector<std::vector<int>> occurs_;
    std::vector<int> guess_;
    mutable std::vector<char> last_lower_;
    ModelSet models_;
};

}  // namespace

ModelSet enumerate_stable_models(const Program& program, const AtomSet& universe, const AtomSet& inputs) {
    return Search(program, universe, inputs).run();
}

}  // namespace mlp::detail
