#include "mlp/depgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace mlp {

DependencyGraph build_positive_graph(std::span<const LabeledModule> modules) {
    DependencyGraph g;
    for (const auto& lm : modules) {
        auto atoms = lm.module.atoms();
        g.nodes.insert(atoms.begin(), atoms.end());
        for (const auto& r : lm.module.rules) {
            for (const auto& h : r.head) {
                g.nodes.insert(h);
                for (const auto& b : r.body_pos) {
                    g.nodes.insert(b);
                    g.edges.insert({h, b, lm.id});
                }
            }
        }
    }
    return g;
}

namespace {

struct Indexed {
    std::vector<Atom> names;
    std::map<Atom, int> index;
    std::vector<std::vector<int>> succ;

    explicit Indexed(const DependencyGraph& g) {
        for (const auto& a : g.nodes) {
            index.emplace(a, static_cast<int>(names.size()));
            names.push_back(a);
        }
        succ.resize(names.size());
        for (const auto& e : g.edges) succ[index.at(e.from)].push_back(index.at(e.to));
        for (auto& s : succ) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
        }
    }
};

class Tarjan {
public:
    explicit Tarjan(const std::vector<std::vector<int>>& succ)
        : succ_(succ), number_(succ.size(), -1), low_(succ.size(), 0), on_stack_(succ.size(), false) {}

    std::vector<std::vector<int>> run() {
        for (std::size_t v = 0; v < succ_.size(); ++v)
            if (number_[v] < 0) visit(static_cast<int>(v));
        return std::move(sccs_);
    }

private:
    void visit(int v) {
        number_[v] = low_[v] = counter_++;
        stack_.push_back(v);
        on_stack_[v] = true;
        for (int w : succ_[v]) {
            if (number_[w] < 0) {
                visit(w);
                low_[v] = std::min(low_[v], low_[w]);
            } else if (on_stack_[w]) {
                low_[v] = std::min(low_[v], number_[w]);
            }
        }
        if (low_[v] != number_[v]) return;
        std::vector<int> scc;
        int w;
        do {
            w = stack_.back();
            stack_.pop_back();
            on_stack_[w] = false;
            scc.push_back(w);
        } while (w != v);
        sccs_.push_back(std::move(scc));
    }

    const std::vector<std::vector<int>>& succ_;
    std::vector<int> number_;
    std::vector<int> low_;
    std::vector<bool> on_stack_;
    std::vector<int> stack_;
    std::vector<std::vector<int>> sccs_;
    int counter_ = 0;
};

// Shortest path from `from` to `to` inside `component`, both ends included.
std::vector<Atom> path_within(const DependencyGraph& g, const AtomSet& component, const Atom& from, const Atom& to) {
    std::map<Atom, Atom> parent;
    std::deque<Atom> queue{from};
    parent.emplace(from, from);
    while (!queue.empty()) {
        Atom a = queue.front();
        queue.pop_front();
        if (a == to) break;
        for (auto it = g.edges.lower_bound({a, Atom(), ""}); it != g.edges.end() && it->from == a; ++it) {
            if (!component.contains(it->to) || parent.contains(it->to)) continue;
            parent.emplace(it->to, a);
            queue.push_back(it->to);
        }
    }
    std::vector<Atom> path{to};
    while (path.back() != from) path.push_back(parent.at(path.back()));
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::vector<std::vector<Atom>> strongly_connected_components(const DependencyGraph& g) {
    Indexed ix(g);
    std::vector<std::vector<Atom>> out;
    for (const auto& scc : Tarjan(ix.succ).run()) {
        std::vector<Atom> comp;
        for (int v : scc) comp.push_back(ix.names[v]);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

IndependenceCheck check_mutual_independence(const ProgramModule& p1, const ProgramModule& p2) {
    const LabeledModule labeled[] = {{"P1", p1}, {"P2", p2}};
    const auto g = build_positive_graph(labeled);
    for (const auto& comp_list : strongly_connected_components(g)) {
        AtomSet comp(comp_list.begin(), comp_list.end());
        const DependencyEdge* first = nullptr;
        const DependencyEdge* other = nullptr;
        for (const auto& e : g.edges) {
            if (!comp.contains(e.from) || !comp.contains(e.to)) continue;
            if (!first) first = &e;
            else if (e.origin != first->origin) {
                other = &e;
                break;
            }
        }
        if (!other) continue;
        // first: u -> v, other: x -> y; close the walk u -> v ~> x -> y ~> u.
        std::vector<Atom> walk{first->from};
        for (auto& a : path_within(g, comp, first->to, other->from)) walk.push_back(std::move(a));
        for (auto& a : path_within(g, comp, other->to, first->from)) walk.push_back(std::move(a));
        return {false, std::move(walk)};
    }
    return {};
}

bool mutually_independent(const ProgramModule& p1, const ProgramModule& p2) {
    return check_mutual_independence(p1, p2).independent;
}

}  // namespace mlp
