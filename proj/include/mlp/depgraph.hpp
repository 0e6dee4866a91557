#pragma once

#include "mlp/module.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace mlp {

/// Edge `from -> to`: `to` occurs in the positive body of a rule of module
/// `origin` whose head contains `from`.
struct DependencyEdge {
    Atom from;
    Atom to;
    std::string origin;

    auto operator<=>(const DependencyEdge&) const = default;
    bool operator==(const DependencyEdge&) const = default;
};

struct DependencyGraph {
    AtomSet nodes;
    std::set<DependencyEdge> edges;
};

struct LabeledModule {
    std::string id;
    ProgramModule module;
};

/// Positive dependency graph of the given modules. Nodes are all module atoms.
DependencyGraph build_positive_graph(std::span<const LabeledModule> modules);

/// Strongly connected components (Tarjan), each sorted, in reverse topological order.
std::vector<std::vector<Atom>> strongly_connected_components(const DependencyGraph& g);

struct IndependenceCheck {
    bool independent = true;
    /// Closed walk `a -> b -> ... -> a` using edges of both modules, when dependent.
    std::vector<Atom> witness;
};

/// Mutual independence: no strongly connected component carries internal edges
/// originating from both modules. Cycles inside one module are allowed and
/// negative dependencies are ignored.
IndependenceCheck check_mutual_independence(const ProgramModule& p1, const ProgramModule& p2);

bool mutually_independent(const ProgramModule& p1, const ProgramModule& p2);

}  // namespace mlp
