#include "oracle.hpp"

#include "mlp/compose.hpp"
#include "mlp/harness.hpp"
#include "mlp/join.hpp"

#include <doctest.h>

using namespace mlp;

namespace {

AnswerSetCollection as(const ProgramModule& m) { return stable_models_module(m, {campaign_max_atoms}); }

}  // namespace

TEST_SUITE("join") {

TEST_CASE("pa and mg1") {
    const auto& f = fixture("worked-Q");
    auto j = natural_join(as(f.module("pa")), as(f.module("mg1")));
    CHECK(j.models.size() == 8);
    CHECK(j.models == as(compose_sqcup(f.module("pa"), f.module("mg1"))).models);
    CHECK(j.input == atom_set({"exp(c1)", "exp(c2)", "exp(c3)"}));
    for (const auto& m : j.models) CHECK(m.contains(Atom("safe(c1)")));
}

TEST_CASE("documented joins") {
    for (const char* name : {"worked-Q", "common-outputs", "cyclic-dependencies", "minimization-counter"}) {
        for (const auto& c : check_fixture(fixture(name), {campaign_max_atoms})) {
            INFO(c.fixture << " / " << c.description << ": " << c.detail);
            CHECK(c.passed);
        }
    }
    const auto& co = fixture("common-outputs");
    CHECK(natural_join(as(co.module("pb")), as(co.module("pc"))).models.empty());
    const auto& mc = fixture("minimization-counter");
    CHECK(natural_join(as(mc.module("min_p1")), as(mc.module("min_p2"))).models == model_set({{"a", "b"}}));
}

TEST_CASE("empty module is the unit") {
    const auto& pa = fixture("alice").module("pa");
    auto e = as(ProgramModule{});
    CHECK(e.models == model_set({{}}));
    CHECK(natural_join(as(pa), e).models == as(pa).models);
    CHECK(natural_join(e, as(pa)).models == as(pa).models);
    AnswerSetCollection none;
    CHECK(natural_join(as(pa), none).models.empty());
}

TEST_CASE("agrees with the oracle join") {
    GeneratorConfig cfg;
    cfg.atom_budget = 9;
    for (std::uint64_t s = 0; s < 150; ++s) {
        cfg.seed = s;
        auto p = random_pair(cfg, s % 2 ? PairShape::common_outputs : PairShape::disjoint_outputs);
        auto a1 = as(p.first), a2 = as(p.second);
        auto j = natural_join(a1, a2);
        CHECK(j.models == oracle::join(a1.models, a1.visible(), a2.models, a2.visible()));
        CHECK(j.models.size() <= a1.models.size() * a2.models.size());
        CHECK(natural_join(a2, a1).models == j.models);
    }
}

TEST_CASE("associativity") {
    GeneratorConfig cfg;
    cfg.atom_budget = 8;
    for (std::uint64_t s = 0; s < 60; ++s) {
        cfg.seed = s;
        auto p = random_pair(cfg, PairShape::common_outputs);
        cfg.seed = s + 500;
        auto q = random_pair(cfg, PairShape::disjoint_outputs);
        auto a = as(p.first), b = as(p.second), c = as(q.first);
        CHECK(natural_join(natural_join(a, b), c).models == natural_join(a, natural_join(b, c)).models);
    }
}

TEST_CASE("cross product on disjoint visible atoms") {
    auto p = oracle::mod("module p\noutput: a, b\nrules:\n{a}.\nb :- not a.\n");
    auto q = oracle::mod("module q\noutput: x, y\nhidden: h\nrules:\n{x}.\n{y}.\nh :- x.\n");
    auto a1 = as(p), a2 = as(q);
    auto j = natural_join(a1, a2);
    CHECK(j.models.size() == a1.models.size() * a2.models.size());
    CHECK(j.models.size() == 8);
}

TEST_CASE("module theorem reports") {
    const auto& q = fixture("worked-Q");
    auto r = check_module_theorem(q.module("pa"), q.module("mg1"), {campaign_max_atoms});
    CHECK(r.applicable);
    CHECK(r.passed());
    CHECK(r.rhs_models.size() == 8);
    CHECK(r.lhs_models == r.rhs_models);

    const auto& co = fixture("common-outputs");
    auto bc = check_module_theorem(co.module("pb"), co.module("pc"));
    CHECK_FALSE(bc.applicable);
    CHECK(bc.failed_precondition.find("outputs overlap") != std::string::npos);
    CHECK(bc.verdict == Verdict::different);
    CHECK_FALSE(bc.passed());

    const auto& cyc = fixture("cyclic-dependencies");
    auto loop = check_module_theorem(cyc.module("loop1"), cyc.module("loop2"));
    CHECK_FALSE(loop.applicable);
    CHECK(loop.verdict == Verdict::different);
    CHECK(loop.lhs_models == std::vector<Interpretation>{{}});
    CHECK(loop.rhs_models.size() == 2);

    auto empty = check_module_theorem(ProgramModule{}, ProgramModule{});
    CHECK(empty.passed());
    CHECK(empty.lhs_models == std::vector<Interpretation>{{}});
}

TEST_CASE("module theorem on random independent pairs") {
    GeneratorConfig cfg;
    cfg.atom_budget = 10;
    for (std::uint64_t s = 0; s < 100; ++s) {
        cfg.seed = s;
        auto p = random_pair(cfg, PairShape::disjoint_outputs);
        auto r = check_module_theorem(p.first, p.second);
        CHECK(r.applicable);
        INFO(format_report(r));
        CHECK(r.passed());
    }
}

}
