#include "mlp/harness.hpp"

#include "mlp/join.hpp"
#include "mlp/parser.hpp"

#include <stdexcept>

namespace mlp {

namespace {

// Keep in sync with fixtures/*.mlp; a test compares them byte for byte.

constexpr const char* pa_src = R"(module pa
% Alice buys a safe car that is not expensive.
input: safe(c1), safe(c2), safe(c3), exp(c1), exp(c2), exp(c3)
output: buy(c1), buy(c2), buy(c3)
hidden: car(c1), car(c2), car(c3)
rules:
buy(X) :- car(X), safe(X), not exp(X).
car(c1). car(c2). car(c3).
)";

constexpr const char* pb_src = R"(module pb
input: -
output: exp(c2), exp(c3)
hidden: -
rules:
exp(c2).
)";

constexpr const char* pc_src = R"(module pc
input: -
output: exp(c1), exp(c2), exp(c3)
hidden: -
rules:
exp(c3).
)";

constexpr const char* mg1_src = R"(module mg1
input: -
output: safe(c1), safe(c2), safe(c3)
hidden: -
rules:
safe(c1).
)";

constexpr const char* mg2_src = R"(module mg2
input: -
output: safe(c1), safe(c2), safe(c3)
hidden: airbag(c1), airbag(c2), airbag(c3), car(c1), car(c2), car(c3)
rules:
safe(X) :- car(X), airbag(X).
car(c1). car(c2). car(c3). airbag(c1).
{airbag(c3)}.
)";

// car/1 is hidden in pa as well; this copy can be composed with it.
constexpr const char* mg2_renamed_src = R"(module mg2_renamed
input: -
output: safe(c1), safe(c2), safe(c3)
hidden: airbag(c1), airbag(c2), airbag(c3), mcar(c1), mcar(c2), mcar(c3)
rules:
safe(X) :- mcar(X), airbag(X).
mcar(c1). mcar(c2). mcar(c3). airbag(c1).
{airbag(c3)}.
)";

constexpr const char* empty_src = R"(module empty
input: -
output: -
hidden: -
rules:
)";

constexpr const char* loop1_src = R"(module loop1
input: safe
output: airbag
hidden: -
rules:
airbag :- safe.
)";

constexpr const char* loop2_src = R"(module loop2
input: airbag
output: safe
hidden: -
rules:
safe :- airbag.
)";

constexpr const char* min_p1_src = R"(module min_p1
input: b
output: a
hidden: -
rules:
a :- b.
:- not b.
)";

constexpr const char* min_p2_src = R"(module min_p2
input: a
output: b
hidden: -
rules:
b :- a.
)";

constexpr const char* lemma2_p1_src = R"(module lemma2_p1
input: -
output: a, b
hidden: -
rules:
a.
)";

constexpr const char* lemma2_p2_src = R"(module lemma2_p2
input: -
output: b
hidden: -
rules:
b.
)";

constexpr const char* lemma2_q1_src = R"(module lemma2_q1
input: -
output: a, b
hidden: -
rules:
a.
:- a, b.
)";

constexpr const char* lemma2_q2_src = R"(module lemma2_q2
input: -
output: b
hidden: -
rules:
b.
)";

// Expected shapes of derived modules.

constexpr const char* pa_mg1_expected = R"(module pa_mg1
input: exp(c1), exp(c2), exp(c3)
output: buy(c1), buy(c2), buy(c3), safe(c1), safe(c2), safe(c3)
hidden: car(c1), car(c2), car(c3)
rules:
buy(X) :- car(X), safe(X), not exp(X).
car(c1). car(c2). car(c3). safe(c1).
)";

// exp(c3) stays an output: pb declares it.
constexpr const char* q_expected = R"(module q
input: exp(c1)
output: buy(c1), buy(c2), buy(c3), exp(c2), exp(c3), safe(c1), safe(c2), safe(c3)
hidden: car(c1), car(c2), car(c3)
rules:
buy(X) :- car(X), safe(X), not exp(X).
car(c1). car(c2). car(c3). exp(c2). safe(c1).
)";

constexpr const char* pa_renamed_expected = R"(module pa_renamed
input: buy(c1), buy(c2), buy(c3), safe(c1), safe(c2), safe(c3), exp(c1), exp(c2), exp(c3)
output: buy__r1(c1), buy__r1(c2), buy__r1(c3)
hidden: car(c1), car(c2), car(c3)
rules:
buy__r1(X) :- car(X), safe(X), not exp(X).
car(c1). car(c2). car(c3).
:- buy__r1(X), not buy(X).
)";

constexpr const char* union_ab_expected = R"(module union_ab
input: a__r1, a__r2, b__r1, b__r2
output: a, b
hidden: -
rules:
a :- a__r1.
a :- a__r2.
b :- b__r1.
b :- b__r2.
)";

NamedModule source_module(const char* text) {
    auto src = parse_module(text);
    return {src.name, ground(src), text};
}

ProgramModule expected_module(const char* text) { return ground(parse_module(text, ParseOptions{true})); }

NamedModule derived(std::string name, ProgramModule m) { return {std::move(name), std::move(m), {}}; }

Expectation models_of(std::string op, ModelSet models, std::string description) {
    Expectation e;
    e.description = std::move(description);
    e.operands = {std::move(op)};
    e.models = std::move(models);
    return e;
}

Expectation count_of(std::string op, std::size_t n, std::string description) {
    Expectation e;
    e.description = std::move(description);
    e.operands = {std::move(op)};
    e.count = n;
    return e;
}

Expectation join_of(std::vector<std::string> ops, std::string description) {
    Expectation e;
    e.description = std::move(description);
    e.operands = std::move(ops);
    e.join = true;
    return e;
}

Expectation shape_of(std::string op, const char* text, std::string description) {
    Expectation e;
    e.description = std::move(description);
    e.operands = {std::move(op)};
    e.module_equals = expected_module(text);
    return e;
}

const ModelSet mg2_models = model_set({
    {"safe(c1)", "car(c1)", "car(c2)", "car(c3)", "airbag(c1)"},
    {"safe(c1)", "safe(c3)", "car(c1)", "car(c2)", "car(c3)", "airbag(c1)", "airbag(c3)"},
});

Fixture alice_sources() {
    Fixture f{"alice", {}, {}};
    for (auto* s : {pa_src, pb_src, pc_src, mg1_src}) f.modules.push_back(source_module(s));
    f.expectations.push_back(models_of("pb", model_set({{"exp(c2)"}}), "AS(pb)"));
    f.expectations.push_back(models_of("pc", model_set({{"exp(c3)"}}), "AS(pc)"));
    f.expectations.push_back(models_of("mg1", model_set({{"safe(c1)"}}), "AS(mg1)"));
    f.expectations.push_back(count_of("pa", 64, "|AS(pa)|"));
    return f;
}

Fixture alice_mg2() {
    Fixture f{"alice-mg2", {source_module(mg2_src), source_module(mg2_renamed_src)}, {}};
    f.expectations.push_back(models_of("mg2", mg2_models, "AS(mg2)"));
    ModelSet renamed;
    for (const auto& m : mg2_models) {
        AtomSet r;
        for (const auto& a : m) r.insert(a.predicate() == "car" ? Atom::make("mcar", a.arguments()) : a);
        renamed.insert(r);
    }
    f.expectations.push_back(models_of("mg2_renamed", renamed, "AS(mg2_renamed)"));
    return f;
}

Fixture empty_fixture() {
    Fixture f{"empty", {source_module(empty_src)}, {}};
    f.expectations.push_back(models_of("empty", model_set({{}}), "AS(empty) = {{}}"));
    return f;
}

Fixture worked_q() {
    Fixture f{"worked-Q", {}, {}};
    for (auto* s : {pa_src, mg1_src, pb_src}) f.modules.push_back(source_module(s));
    auto pa_mg1 = compose_sqcup(f.module("pa"), f.module("mg1"));
    auto q = compose_sqcup(pa_mg1, f.module("pb"));
    f.modules.push_back(derived("pa_mg1", pa_mg1));
    f.modules.push_back(derived("q", q));
    f.expectations.push_back(shape_of("pa_mg1", pa_mg1_expected, "pa |_| mg1 module"));
    auto join = join_of({"pa", "mg1"}, "|AS(pa) |><| AS(mg1)|");
    join.count = 8;
    f.expectations.push_back(join);
    f.expectations.push_back(shape_of("q", q_expected, "Q module"));
    f.expectations.push_back(models_of("q",
                                       model_set({
                                           {"safe(c1)", "exp(c1)", "exp(c2)", "car(c1)", "car(c2)", "car(c3)"},
                                           {"buy(c1)", "safe(c1)", "exp(c2)", "car(c1)", "car(c2)", "car(c3)"},
                                       }),
                                       "AS(Q)"));
    return f;
}

Fixture common_outputs() {
    Fixture f{"common-outputs", {source_module(pb_src), source_module(pc_src)}, {}};
    f.modules.push_back(derived("pb_pc", compose_relaxed(f.module("pb"), f.module("pc"))));
    f.expectations.push_back(models_of("pb_pc", model_set({{"exp(c2)", "exp(c3)"}}), "AS(pb (+) pc)"));
    auto join = join_of({"pb", "pc"}, "AS(pb) |><| AS(pc) is empty");
    join.models = ModelSet{};
    f.expectations.push_back(join);
    return f;
}

Fixture cyclic_dependencies() {
    Fixture f{"cyclic-dependencies", {source_module(loop1_src), source_module(loop2_src)}, {}};
    f.modules.push_back(derived("loop_union", compose_relaxed(f.module("loop1"), f.module("loop2"))));
    const auto both = model_set({{}, {"airbag", "safe"}});
    f.expectations.push_back(models_of("loop1", both, "AS(loop1)"));
    f.expectations.push_back(models_of("loop2", both, "AS(loop2)"));
    f.expectations.push_back(models_of("loop_union", model_set({{}}), "AS of the rule union"));
    auto join = join_of({"loop1", "loop2"}, "AS(loop1) |><| AS(loop2)");
    join.models = both;
    f.expectations.push_back(join);
    return f;
}

Fixture minimization_counter() {
    Fixture f{"minimization-counter", {source_module(min_p1_src), source_module(min_p2_src)}, {}};
    f.modules.push_back(derived("min_union", compose_plus(f.module("min_p1"), f.module("min_p2"))));
    f.expectations.push_back(models_of("min_p1", model_set({{"a", "b"}}), "AS(P1)"));
    f.expectations.push_back(models_of("min_p2", model_set({{}, {"a", "b"}}), "AS(P2)"));
    f.expectations.push_back(models_of("min_union", ModelSet{}, "P1 (+) P2 has no stable models"));
    auto join = join_of({"min_p1", "min_p2"}, "AS(P1) |><| AS(P2)");
    join.models = model_set({{"a", "b"}});
    f.expectations.push_back(join);
    return f;
}

std::vector<NamedModule> lemma2_sources() {
    return {source_module(lemma2_p1_src), source_module(lemma2_p2_src), source_module(lemma2_q1_src),
            source_module(lemma2_q2_src)};
}

Fixture lemma2() {
    Fixture f{"lemma2", lemma2_sources(), {}};
    f.modules.push_back(derived("p_relaxed", compose_relaxed(f.module("lemma2_p1"), f.module("lemma2_p2"))));
    f.modules.push_back(derived("q_relaxed", compose_relaxed(f.module("lemma2_q1"), f.module("lemma2_q2"))));
    f.expectations.push_back(models_of("lemma2_p1", model_set({{"a"}}), "AS(P1)"));
    f.expectations.push_back(models_of("lemma2_q1", model_set({{"a"}}), "AS(Q1)"));
    f.expectations.push_back(models_of("lemma2_p2", model_set({{"b"}}), "AS(P2)"));
    f.expectations.push_back(models_of("lemma2_q2", model_set({{"b"}}), "AS(Q2)"));
    f.expectations.push_back(models_of("p_relaxed", model_set({{"a", "b"}}), "AS(P1 (+) P2)"));
    f.expectations.push_back(models_of("q_relaxed", ModelSet{}, "AS(Q1 (+) Q2) is empty"));
    return f;
}

Fixture renaming() {
    Fixture f{"renaming", {source_module(pa_src)}, {}};
    const auto& pa = f.module("pa");
    f.modules.push_back(derived("pa_renamed", rename_output(pa, make_rename_map(pa.output, "r1", pa.atoms()))));
    f.expectations.push_back(shape_of("pa_renamed", pa_renamed_expected, "rho(pa) module"));
    return f;
}

Fixture transformed_relaxed() {
    Fixture f{"transformed-relaxed", lemma2_sources(), {}};
    const auto p = transform_relaxed_rt(f.module("lemma2_p1"), f.module("lemma2_p2"), RenameScope::all_outputs);
    const auto q = transform_relaxed_rt(f.module("lemma2_q1"), f.module("lemma2_q2"), RenameScope::all_outputs);
    f.modules.push_back(derived("rho_p1", p.renamed1));
    f.modules.push_back(derived("rho_p2", p.renamed2));
    f.modules.push_back(derived("union_ab", p.union_module));
    f.modules.push_back(derived("rho_q1", q.renamed1));
    f.modules.push_back(derived("rho_q2", q.renamed2));
    f.modules.push_back(derived("p_rt_all", p.result));
    f.modules.push_back(derived("q_rt_all", q.result));
    f.modules.push_back(derived("p_rt", compose_relaxed_rt(f.module("lemma2_p1"), f.module("lemma2_p2"))));
    f.modules.push_back(derived("q_rt", compose_relaxed_rt(f.module("lemma2_q1"), f.module("lemma2_q2"))));

    f.expectations.push_back(models_of("rho_p1", model_set({{"a", "a__r1"}, {"a", "b", "a__r1"}}), "AS(rho(P1))"));
    f.expectations.push_back(models_of("rho_p2", model_set({{"b", "b__r2"}, {"a", "b", "b__r2"}}), "AS(rho(P2))"));
    auto join = join_of({"rho_p1", "rho_p2"}, "AS(rho(P1)) |><| AS(rho(P2))");
    join.models = model_set({{"a", "b", "a__r1", "b__r2"}});
    f.expectations.push_back(join);
    f.expectations.push_back(count_of("union_ab", 16, "|AS(P_union)|"));
    f.expectations.push_back(shape_of("union_ab", union_ab_expected, "P_union module"));
    f.expectations.push_back(models_of("rho_q1", model_set({{"a", "a__r1"}}), "AS(rho(Q1))"));
    auto final_join = join_of({"rho_q1", "rho_q2", "union_ab"}, "final join for Q is empty");
    final_join.models = ModelSet{};
    f.expectations.push_back(final_join);

    for (const char* name : {"p_rt_all", "p_rt"}) {
        auto e = models_of(name, model_set({{"a", "b"}}), std::string("visible AS(") + name + ")");
        e.restrict_to = atom_set({"a", "b"});
        f.expectations.push_back(e);
    }
    f.expectations.push_back(models_of("q_rt_all", ModelSet{}, "AS(q_rt_all) is empty"));
    f.expectations.push_back(models_of("q_rt", ModelSet{}, "AS(q_rt) is empty"));
    return f;
}

Fixture conservative_mg() {
    Fixture f{"conservative-mg", {source_module(mg1_src), source_module(mg2_src)}, {}};
    f.modules.push_back(derived("mg_conservative", compose_conservative(f.module("mg1"), f.module("mg2"))));
    f.expectations.push_back(models_of(
        "mg_conservative",
        model_set({{"safe(c1)", "safe__r1(c1)", "safe__r2(c1)", "airbag(c1)", "car(c1)", "car(c2)", "car(c3)"}}),
        "AS(mg1 (x) mg2)"));
    auto e = models_of("mg_conservative", model_set({{"safe(c1)", "airbag(c1)", "car(c1)", "car(c2)", "car(c3)"}}),
                       "AS(mg1 (x) mg2) without renamed atoms");
    e.restrict_to = set_union(f.module("mg1").atoms(), f.module("mg2").atoms());
    f.expectations.push_back(e);
    return f;
}

Fixture alice_all() {
    Fixture f{"alice-all", {}, {}};
    for (auto* s : {pa_src, pb_src, pc_src, mg1_src, mg2_renamed_src}) f.modules.push_back(source_module(s));
    auto exp_rt = compose_relaxed_rt(f.module("pb"), f.module("pc"));
    auto safe = compose_conservative(f.module("mg1"), f.module("mg2_renamed"));
    auto all = compose_sqcup(compose_sqcup(f.module("pa"), exp_rt), safe);
    f.modules.push_back(derived("exp_rt", exp_rt));
    f.modules.push_back(derived("safe_conservative", safe));
    f.modules.push_back(derived("alice", all));
    auto e = models_of("alice", model_set({{"buy(c1)", "exp(c2)", "exp(c3)", "safe(c1)"}}), "visible AS(alice)");
    e.restrict_to = visible_atoms(all);
    f.expectations.push_back(e);
    f.expectations.push_back(models_of("alice",
                                       model_set({{"buy(c1)", "exp(c2)", "exp(c3)", "safe(c1)", "airbag(c1)",
                                                   "car(c1)", "car(c2)", "car(c3)", "mcar(c1)", "mcar(c2)",
                                                   "mcar(c3)", "exp__r1(c2)", "exp__r2(c3)", "safe__r1(c1)",
                                                   "safe__r2(c1)"}}),
                                       "AS(alice)"));
    return f;
}

std::string describe(const AnswerSetCollection& c) {
    return std::to_string(c.models.size()) + " model(s) " + to_string(c.models);
}

}  // namespace

const ProgramModule& Fixture::module(std::string_view n) const {
    for (const auto& m : modules)
        if (m.name == n) return m.module;
    throw std::out_of_range("fixture " + name + " has no module " + std::string(n));
}

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = {
        alice_sources(),     alice_mg2(),         empty_fixture(), worked_q(),
        common_outputs(), cyclic_dependencies(), minimization_counter(), lemma2(),
        renaming(),     transformed_relaxed(),  conservative_mg(), alice_all(),
    };
    return all;
}

const Fixture& fixture(std::string_view name) {
    for (const auto& f : fixtures())
        if (f.name == name) return f;
    throw std::out_of_range("no fixture named " + std::string(name));
}

std::vector<FixtureCheck> check_fixture(const Fixture& f, const SolveOptions& options) {
    std::vector<FixtureCheck> out;
    for (const auto& e : f.expectations) {
        FixtureCheck c{f.name, e.description, true, {}};
        if (e.module_equals) {
            const auto& m = f.module(e.operands.front());
            c.passed = m == *e.module_equals;
            if (!c.passed) c.detail = "module differs from the expected shape";
            out.push_back(std::move(c));
            continue;
        }
        AnswerSetCollection got = stable_models_module(f.module(e.operands.front()), options);
        if (e.join) {
            for (std::size_t i = 1; i < e.operands.size(); ++i)
                got = natural_join(got, stable_models_module(f.module(e.operands[i]), options));
        }
        if (e.restrict_to) got.models = restrict_models(got.models, *e.restrict_to);
        if (e.models && got.models != *e.models) {
            c.passed = false;
            c.detail = "expected " + to_string(*e.models) + ", got " + to_string(got.models);
        } else if (e.count && got.models.size() != *e.count) {
            c.passed = false;
            c.detail = "expected " + std::to_string(*e.count) + " model(s), got " + describe(got);
        } else {
            c.detail = std::to_string(got.models.size()) + " model(s)";
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<NamedModule> fixture_sources() {
    std::vector<NamedModule> out;
    for (const auto& f : fixtures()) {
        for (const auto& m : f.modules) {
            if (m.source.empty()) continue;
            bool seen = false;
            for (const auto& o : out) seen = seen || o.name == m.name;
            if (!seen) out.push_back(m);
        }
    }
    return out;
}

}  // namespace mlp
