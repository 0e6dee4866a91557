#include "mlp/harness.hpp"

#include "mlp/error.hpp"
#include "mlp/join.hpp"

#include <chrono>
#include <stdexcept>

namespace mlp {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int max_attempts = 50;

std::chrono::microseconds since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
}

std::vector<Interpretation> visible_projections(const AnswerSetCollection& c) {
    std::vector<Interpretation> out;
    const AtomSet vis = c.visible();
    for (const auto& m : c.models) out.push_back(set_intersection(m, vis));
    return out;
}

AtomSet symmetric_difference(const AtomSet& a, const AtomSet& b) {
    return set_union(set_difference(a, b), set_difference(b, a));
}

// Small deterministic stream for per-trial choices outside the generator.
struct TrialBits {
    std::uint64_t state;
    bool coin() {
        state = trial_seed(state, 0);
        return (state >> 63) != 0;
    }
};

AtomSet random_subset(const AtomSet& from, TrialBits& bits) {
    AtomSet out;
    for (const auto& a : from)
        if (bits.coin()) out.insert(a);
    return out;
}

std::optional<Atom> choice_on_common_output(const ProgramModule& p1, const ProgramModule& p2) {
    const AtomSet common = set_intersection(p1.output, p2.output);
    for (const auto* m : {&p1, &p2})
        for (const auto& rule : m->rules)
            if (rule.kind == RuleKind::choice)
                for (const auto& h : rule.head)
                    if (common.contains(h)) return h;
    return std::nullopt;
}

}  // namespace

const char* to_string(TheoremId id) noexcept {
    switch (id) {
    case TheoremId::module: return "module";
    case TheoremId::relaxed_rt: return "relaxed-rt";
    case TheoremId::conservative: return "conservative";
    case TheoremId::hide_project: return "hide-project";
    case TheoremId::rename_recovery: return "rename-recovery";
    case TheoremId::lemma2_demo: return "lemma2-demo";
    }
    return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view s) {
    for (auto id : {TheoremId::module, TheoremId::relaxed_rt, TheoremId::conservative, TheoremId::hide_project,
                    TheoremId::rename_recovery, TheoremId::lemma2_demo})
        if (s == to_string(id)) return id;
    return std::nullopt;
}

TheoremReport check_relaxed_rt(const ProgramModule& p1, const ProgramModule& p2, const SolveOptions& options,
                               RenameScope scope) {
    const auto start = Clock::now();
    TheoremReport r;
    r.theorem = "relaxed-rt";
    ProgramModule relaxed, transformed;
    try {
        relaxed = compose_relaxed(p1, p2);
        transformed = compose_relaxed_rt(p1, p2, scope);
    } catch (const CompositionError& e) {
        r.applicable = false;
        r.failed_precondition = e.what();
        r.elapsed = since(start);
        return r;
    }
    // A choice rule over a common output lets its fresh copy vary while the
    // output itself is fixed, so the answer sets stop being in bijection.
    if (auto atom = choice_on_common_output(p1, p2)) {
        r.applicable = false;
        r.failed_precondition = "choice rule heads common output " + atom->str();
        r.elapsed = since(start);
        return r;
    }
    r.lhs_models = visible_projections(stable_models_module(relaxed, options));
    r.rhs_models = visible_projections(stable_models_module(transformed, options));
    r.settle();
    const auto sig = set_union(symmetric_difference(relaxed.input, transformed.input),
                               symmetric_difference(visible_atoms(relaxed), visible_atoms(transformed)));
    if (!sig.empty()) {
        r.verdict = Verdict::different;
        r.witness = sig;
        r.witness_side = "signature";
    }
    r.elapsed = since(start);
    return r;
}

TheoremReport check_conservative(const ProgramModule& p1, const ProgramModule& p2, const SolveOptions& options) {
    const auto start = Clock::now();
    TheoremReport r;
    r.theorem = "conservative";
    TransformedComposition t;
    try {
        t = transform_conservative(p1, p2);
    } catch (const CompositionError& e) {
        r.applicable = false;
        r.failed_precondition = e.what();
        r.elapsed = since(start);
        return r;
    }
    const AtomSet original = set_union(p1.atoms(), p2.atoms());
    const auto composed = stable_models_module(t.result, options);
    ModelSet restricted;
    std::optional<Interpretation> split;
    for (const auto& m : composed.models) {
        restricted.insert(set_intersection(m, original));
        for (const auto& o : t.renamed_atoms) {
            const bool a = m.contains(o), b = m.contains(t.primed[o]), c = m.contains(t.double_primed[o]);
            if (!(a == b && b == c) && !split) split = m;
        }
    }
    r.lhs_models = to_list(restricted);
    r.rhs_models = to_list(natural_join(stable_models_module(p1, options), stable_models_module(p2, options)).models);
    r.settle();
    if (split) {
        r.verdict = Verdict::different;
        r.witness = split;
        r.witness_side = "lhs";
    }
    r.elapsed = since(start);
    return r;
}

TheoremReport check_hide_project(const ProgramModule& m, const AtomSet& s, const SolveOptions& options) {
    const auto start = Clock::now();
    TheoremReport r;
    r.theorem = "hide-project";
    const auto base = to_list(stable_models_module(m, options).models);
    const auto hidden = to_list(stable_models_module(hide(m, s), options).models);
    const auto projected = to_list(stable_models_module(project(m, s), options).models);
    r.lhs_models = base;
    r.rhs_models = hidden == base ? projected : hidden;
    r.settle();
    r.elapsed = since(start);
    return r;
}

TheoremReport check_rename_recovery(const ProgramModule& m, const AtomSet& renamed, const SolveOptions& options) {
    const auto start = Clock::now();
    TheoremReport r;
    r.theorem = "rename-recovery";
    RenameMap map;
    ProgramModule rho;
    try {
        map = make_rename_map(renamed, "r1", m.atoms());
        rho = rename_output(m, map);
    } catch (const CompositionError& e) {
        r.applicable = false;
        r.failed_precondition = e.what();
        r.elapsed = since(start);
        return r;
    }
    const AtomSet freshes = map.freshes();
    ModelSet recovered;
    for (const auto& model : stable_models_module(rho, options).models) {
        bool agree = true;
        for (const auto& [old, fresh] : map.pairs()) agree = agree && model.contains(old) == model.contains(fresh);
        if (agree) recovered.insert(set_difference(model, freshes));
    }
    r.lhs_models = to_list(stable_models_module(m, options).models);
    r.rhs_models = to_list(recovered);
    r.settle();
    r.elapsed = since(start);
    return r;
}

TheoremReport check_lemma2_demo(const SolveOptions& options) {
    const auto start = Clock::now();
    const Fixture& f = fixture("lemma2");
    const auto& p1 = f.module("lemma2_p1");
    const auto& p2 = f.module("lemma2_p2");
    const auto& q1 = f.module("lemma2_q1");
    const auto& q2 = f.module("lemma2_q2");
    TheoremReport r;
    r.theorem = "lemma2-demo";
    r.expected = Verdict::different;
    const auto as = [&](const ProgramModule& m) { return stable_models_module(m, options).models; };
    if (as(p1) != as(q1) || as(p2) != as(q2)) {
        r.applicable = false;
        r.failed_precondition = "component answer sets differ";
    }
    r.lhs_models = to_list(as(compose_relaxed(p1, p2)));
    r.rhs_models = to_list(as(compose_relaxed(q1, q2)));
    r.settle();
    r.elapsed = since(start);
    return r;
}

std::vector<TheoremReport> run_campaign(TheoremId id, const GeneratorConfig& cfg, std::size_t trials,
                                        const SolveOptions& options) {
    cfg.validate();
    std::vector<TheoremReport> out;
    out.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t seed = trial_seed(cfg.seed, t);
        std::optional<TheoremReport> report;
        for (int attempt = 0; attempt < max_attempts && !report; ++attempt) {
            GeneratorConfig c = cfg;
            c.seed = trial_seed(seed, static_cast<std::uint64_t>(attempt) + 1);
            TrialBits bits{c.seed};
            TheoremReport r;
            switch (id) {
            case TheoremId::module: {
                auto pair = random_pair(c, PairShape::disjoint_outputs);
                r = check_module_theorem(pair.first, pair.second, options);
                break;
            }
            case TheoremId::relaxed_rt: {
                c.positive_acyclic = bits.coin();
                auto pair = random_pair(c, PairShape::common_outputs);
                auto scope = bits.coin() ? RenameScope::all_outputs : RenameScope::common_outputs;
                r = check_relaxed_rt(pair.first, pair.second, options, scope);
                break;
            }
            case TheoremId::conservative: {
                c.positive_acyclic = bits.coin();
                auto pair = random_pair(c, bits.coin() ? PairShape::common_outputs : PairShape::disjoint_outputs);
                r = check_conservative(pair.first, pair.second, options);
                break;
            }
            case TheoremId::hide_project: {
                auto m = random_module(c);
                auto s = random_subset(m.atoms(), bits);
                if (bits.coin()) s.insert(Atom("zz"));
                r = check_hide_project(m, s, options);
                break;
            }
            case TheoremId::rename_recovery: {
                c.positive_acyclic = true;
                auto m = random_module(c);
                auto olds = random_subset(m.output, bits);
                if (olds.empty() && !m.output.empty()) olds.insert(*m.output.begin());
                if (olds.empty()) continue;
                r = check_rename_recovery(m, olds, options);
                break;
            }
            case TheoremId::lemma2_demo: r = check_lemma2_demo(options); break;
            }
            if (r.applicable || id == TheoremId::lemma2_demo) report = std::move(r);
        }
        if (!report)
            throw std::runtime_error(std::string("no instance satisfying the preconditions of ") + to_string(id) +
                                     " found for trial " + std::to_string(t));
        report->trial = t;
        report->seed = seed;
        out.push_back(std::move(*report));
    }
    return out;
}

}  // namespace mlp
