#include "mlp/equivalence.hpp"

#include <map>

namespace mlp {

EquivalenceResult visibly_equivalent(const AnswerSetCollection& p, const AnswerSetCollection& q) {
    const AtomSet vis = p.visible();
    if (vis != q.visible())
        return {false, "visible atoms differ: " + to_string(vis) + " vs " + to_string(q.visible()), std::nullopt};

    std::map<Interpretation, long> balance;
    for (const auto& m : p.models) ++balance[set_intersection(m, vis)];
    for (const auto& n : q.models) --balance[set_intersection(n, vis)];
    for (const auto& [projection, diff] : balance) {
        if (diff == 0) continue;
        return {false,
                "visible projection " + to_string(projection) + " occurs " + std::to_string(diff > 0 ? diff : -diff) +
                    " more time(s) on the " + (diff > 0 ? "left" : "right"),
                projection};
    }
    return {};
}

EquivalenceResult visibly_equivalent(const ProgramModule& p, const ProgramModule& q, const SolveOptions& options) {
    if (visible_atoms(p) != visible_atoms(q))
        return {false, "visible atoms differ: " + to_string(visible_atoms(p)) + " vs " + to_string(visible_atoms(q)),
                std::nullopt};
    return visibly_equivalent(stable_models_module(p, options), stable_models_module(q, options));
}

EquivalenceResult modularly_equivalent(const ProgramModule& p, const ProgramModule& q, const SolveOptions& options) {
    if (p.input != q.input)
        return {false, "input atoms differ: " + to_string(p.input) + " vs " + to_string(q.input), std::nullopt};
    return visibly_equivalent(p, q, options);
}

}  // namespace mlp
