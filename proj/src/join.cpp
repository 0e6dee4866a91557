#include "mlp/join.hpp"

#include "mlp/compose.hpp"
#include "mlp/error.hpp"

#include <chrono>
#include <map>

namespace mlp {

AnswerSetCollection natural_join(const AnswerSetCollection& a1, const AnswerSetCollection& a2) {
    AnswerSetCollection out;
    out.output = set_union(a1.output, a2.output);
    out.input = set_difference(set_union(a1.input, a2.input), out.output);
    out.hidden = set_union(a1.hidden, a2.hidden);

    const AtomSet vis1 = a1.visible();
    const AtomSet vis2 = a2.visible();
    std::multimap<Interpretation, const Interpretation*> right;
    for (const auto& m2 : a2.models) right.emplace(set_intersection(m2, vis1), &m2);
    for (const auto& m1 : a1.models) {
        auto key = set_intersection(m1, vis2);
        auto [lo, hi] = right.equal_range(key);
        for (auto it = lo; it != hi; ++it) out.models.insert(set_union(m1, *it->second));
    }
    return out;
}

TheoremReport check_module_theorem(const ProgramModule& p1, const ProgramModule& p2, const SolveOptions& options) {
    auto start = std::chrono::steady_clock::now();
    TheoremReport r;
    r.theorem = "module";
    ProgramModule composed;
    try {
        composed = compose_sqcup(p1, p2);
    } catch (const CompositionError& e) {
        r.applicable = false;
        r.failed_precondition = e.what();
        composed = compose_relaxed(p1, p2);
    }
    r.lhs_models = to_list(stable_models_module(composed, options).models);
    r.rhs_models = to_list(natural_join(stable_models_module(p1, options), stable_models_module(p2, options)).models);
    r.settle();
    r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

}  // namespace mlp
