#include "oracle.hpp"

#include "mlp/atom.hpp"
#include "mlp/harness.hpp"
#include "mlp/module.hpp"
#include "mlp/printer.hpp"
#include "mlp/program.hpp"

#include <doctest.h>

using namespace mlp;

TEST_SUITE("core") {

TEST_CASE("atoms compare by canonical string") {
    Atom a = Atom::make("exp", {"c2"});
    CHECK(a.str() == "exp(c2)");
    CHECK(a == Atom("exp(c2)"));
    CHECK(a.predicate() == "exp");
    CHECK(a.arguments() == std::vector<std::string>{"c2"});
    CHECK(Atom::make("a").str() == "a");
    CHECK(Atom("a") < Atom("b"));
    CHECK_FALSE(a.reserved());
    CHECK(Atom("exp__r1(c2)").reserved());
    CHECK(Atom::make("p", {"a", "b"}).arguments() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("set helpers and rendering") {
    auto s = atom_set({"b", "a"});
    CHECK(to_string(s) == "{a, b}");
    CHECK(to_string(AtomSet{}) == "{}");
    CHECK(set_union(atom_set({"a"}), atom_set({"b"})) == s);
    CHECK(set_intersection(s, atom_set({"b", "c"})) == atom_set({"b"}));
    CHECK(set_difference(s, atom_set({"b"})) == atom_set({"a"}));
    CHECK(disjoint(atom_set({"a"}), atom_set({"b"})));
    CHECK(subset_of(atom_set({"a"}), s));
    CHECK(restrict_models(model_set({{"a", "x"}, {"a"}}), atom_set({"a"})) == model_set({{"a"}}));
}

TEST_CASE("rule shapes") {
    CHECK(Rule::normal(Atom("a"), atom_set({"b"})).head.size() == 1);
    CHECK(Rule::constraint(atom_set({"a"})).head.empty());
    CHECK_THROWS_AS(Rule::choice({}), std::invalid_argument);
    auto both = Rule::normal(Atom("a"), atom_set({"b"}), atom_set({"b"}));
    CHECK(both.body_pos == both.body_neg);
}

TEST_CASE("program keeps source order and deduplicates") {
    Program p;
    CHECK(p.add(Rule::fact(Atom("b"))));
    CHECK(p.add(Rule::fact(Atom("a"))));
    CHECK_FALSE(p.add(Rule::fact(Atom("b"))));
    REQUIRE(p.size() == 2);
    CHECK(p.rules()[0].head_atom() == Atom("b"));
    CHECK(p.atoms() == atom_set({"a", "b"}));
}

TEST_CASE("visible atoms") {
    const auto& ex = fixture("alice");
    CHECK(visible_atoms(ex.module("pb")) == atom_set({"exp(c2)", "exp(c3)"}));
    CHECK(visible_atoms(ProgramModule{}).empty());
    CHECK(visible_atoms(ex.module("pa")) == atom_set({"safe(c1)", "safe(c2)", "safe(c3)", "exp(c1)", "exp(c2)",
                                                      "exp(c3)", "buy(c1)", "buy(c2)", "buy(c3)"}));
}

TEST_CASE("validate_module reports each violation") {
    ProgramModule m;
    m.rules.add(Rule::normal(Atom("a"), atom_set({"b"})));
    m.input = atom_set({"a"});
    m.output = atom_set({"b"});
    auto v = validate_module(m);
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0] == "head atom a is an input");

    ProgramModule overlap;
    overlap.input = overlap.output = atom_set({"a"});
    auto w = validate_module(overlap);
    REQUIRE_FALSE(w.ok());
    CHECK(w.violations[0].find("input and output overlap") != std::string::npos);

    ProgramModule stray;
    stray.output = atom_set({"a"});
    stray.rules.add(Rule::normal(Atom("a"), atom_set({"z"})));
    CHECK_FALSE(validate_module(stray).ok());

    CHECK(validate_module(fixture("alice-mg2").module("mg2")).ok());
}

TEST_CASE("every fixture module is well formed") {
    for (const auto& f : fixtures())
        for (const auto& m : f.modules) {
            INFO(f.name << "/" << m.name);
            CHECK(validate_module(m.module).ok());
        }
}

TEST_CASE("printer renders the file format") {
    CHECK(format_rule(Rule::normal(Atom("h"), atom_set({"a"}), atom_set({"c"}))) == "h :- a, not c.");
    CHECK(format_rule(Rule::choice(atom_set({"b", "a"}), atom_set({"c"}))) == "{a, b} :- c.");
    CHECK(format_rule(Rule::constraint(atom_set({"a"}))) == ":- a.");
    CHECK(format_rule(Rule::fact(Atom("h"))) == "h.");
    CHECK(format_models(model_set({{"b"}, {}})) == "{}\n{b}\n");
    AnswerSetCollection c{atom_set({"i"}), atom_set({"o"}), {}, model_set({{"i", "o"}})};
    CHECK(collection_json("m", c) ==
          R"({"module":"m","input":["i"],"output":["o"],"hidden":[],"models":[["i","o"]]})");
}

}
