#pragma once

// Reference implementations used only by tests. They follow the definitions
// literally and share no code with the library beyond the value types.

#include "mlp/module.hpp"
#include "mlp/parser.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using mlp::Atom;
using mlp::AtomSet;
using mlp::ModelSet;
using mlp::ProgramModule;
using mlp::RuleKind;

inline mlp::ProgramModule mod(const char* text) { return mlp::load_module(text, mlp::ParseOptions{true}); }

struct PosRule {
    bool constraint;
    Atom head;
    AtomSet body;
};

inline bool subset(const AtomSet& a, const AtomSet& b) {
    for (const auto& x : a)
        if (!b.contains(x)) return false;
    return true;
}

// Least model by naive iteration; nullopt if a constraint fires.
inline std::optional<AtomSet> lm(const std::vector<PosRule>& rules) {
    AtomSet m;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : rules)
            if (!r.constraint && subset(r.body, m) && m.insert(r.head).second) changed = true;
    }
    for (const auto& r : rules)
        if (r.constraint && subset(r.body, m)) return std::nullopt;
    return m;
}

// Every M subset of At(P) with M = LM(R^M u {a. | a in M n I}). Choice rules are
// reduced directly: `h :- B+` for each head atom h in M when B- misses M.
inline ModelSet stable_models(const ProgramModule& p) {
    const AtomSet all = p.atoms();
    const std::vector<Atom> atoms(all.begin(), all.end());
    const std::size_t n = atoms.size();
    ModelSet out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        AtomSet m;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) m.insert(atoms[i]);
        std::vector<PosRule> red;
        for (const auto& r : p.rules) {
            bool blocked = false;
            for (const auto& a : r.body_neg) blocked = blocked || m.contains(a);
            if (blocked) continue;
            switch (r.kind) {
            case RuleKind::normal: red.push_back({false, *r.head.begin(), r.body_pos}); break;
            case RuleKind::constraint: red.push_back({true, Atom(), r.body_pos}); break;
            case RuleKind::choice:
                for (const auto& h : r.head)
                    if (m.contains(h)) red.push_back({false, h, r.body_pos});
                break;
            }
        }
        for (const auto& i : p.input)
            if (m.contains(i)) red.push_back({false, i, {}});
        auto least = lm(red);
        if (least && *least == m) out.insert(m);
    }
    return out;
}

// Edge (from, to, label).
struct Edge {
    Atom from, to;
    int label;
};

inline std::vector<Edge> positive_edges(const ProgramModule& p, int label) {
    std::vector<Edge> out;
    for (const auto& r : p.rules)
        for (const auto& h : r.head)
            for (const auto& b : r.body_pos) out.push_back({h, b, label});
    return out;
}

// True iff a closed walk uses edges of both modules: some edge of P1 and some
// edge of P2 reach each other's sources.
inline bool mutually_dependent(const ProgramModule& p1, const ProgramModule& p2) {
    auto edges = positive_edges(p1, 1);
    auto e2 = positive_edges(p2, 2);
    edges.insert(edges.end(), e2.begin(), e2.end());
    std::map<Atom, std::vector<Atom>> succ;
    for (const auto& e : edges) succ[e.from].push_back(e.to);
    auto reaches = [&](const Atom& from, const Atom& to) {
        std::set<Atom> seen{from};
        std::vector<Atom> stack{from};
        while (!stack.empty()) {
            Atom a = stack.back();
            stack.pop_back();
            if (a == to) return true;
            for (const auto& b : succ[a])
                if (seen.insert(b).second) stack.push_back(b);
        }
        return false;
    };
    for (const auto& a : edges)
        for (const auto& b : edges)
            if (a.label == 1 && b.label == 2 && reaches(a.to, b.from) && reaches(b.to, a.from)) return true;
    return false;
}

// Natural join straight from the definition.
inline ModelSet join(const ModelSet& a1, const AtomSet& vis1, const ModelSet& a2, const AtomSet& vis2) {
    ModelSet out;
    for (const auto& m1 : a1)
        for (const auto& m2 : a2) {
            AtomSet l, r, u = m1;
            for (const auto& x : m1)
                if (vis2.contains(x)) l.insert(x);
            for (const auto& x : m2)
                if (vis1.contains(x)) r.insert(x);
            if (l != r) continue;
            u.insert(m2.begin(), m2.end());
            out.insert(u);
        }
    return out;
}

// Explicit search for a bijection f with M n V = f(M) n V.
inline bool bijection_exists(const std::vector<AtomSet>& a, const std::vector<AtomSet>& b, const AtomSet& vis) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    auto proj = [&](const AtomSet& m) {
        AtomSet r;
        for (const auto& x : m)
            if (vis.contains(x)) r.insert(x);
        return r;
    };
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == a.size()) return true;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j] || proj(a[i]) != proj(b[j])) continue;
            used[j] = true;
            if (go(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return go(0);
}

}  // namespace oracle
