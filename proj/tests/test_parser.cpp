#include "oracle.hpp"

#include "mlp/error.hpp"
#include "mlp/harness.hpp"
#include "mlp/parser.hpp"
#include "mlp/printer.hpp"

#include <doctest.h>

using namespace mlp;

namespace {

constexpr const char* pb_text = "module pb\ninput: -\noutput: exp(c2), exp(c3)\nhidden: -\nrules:\nexp(c2).\n";

template <class F>
ParseError parse_error(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no ParseError");
    return ParseError("", 0, 0);
}

}  // namespace

TEST_SUITE("parser") {

TEST_CASE("parse pb") {
    auto src = parse_module(pb_text);
    CHECK(src.name == "pb");
    CHECK(src.input.empty());
    CHECK(src.output == std::vector<Atom>{Atom("exp(c2)"), Atom("exp(c3)")});
    REQUIRE(src.rules.size() == 1);
    CHECK(src.rules[0].kind == RuleKind::normal);
    CHECK(src.rules[0].line == 6);
}

TEST_CASE("variable rule structure") {
    auto src = parse_module("module m\nrules:\nbuy(X) :- car(X), safe(X), not exp(X).\n");
    REQUIRE(src.rules.size() == 1);
    const auto& r = src.rules[0];
    CHECK(r.body_pos.size() == 2);
    CHECK(r.body_neg.size() == 1);
    CHECK(r.body_pos[0].args[0].variable);
    CHECK(r.variables() == std::vector<std::string>{"X"});
}

TEST_CASE("choice rule with empty body") {
    auto src = parse_module("module m\nrules:\n{airbag(c3)}.\n");
    REQUIRE(src.rules.size() == 1);
    CHECK(src.rules[0].kind == RuleKind::choice);
    CHECK(src.rules[0].body_pos.empty());
    CHECK(src.rules[0].body_neg.empty());
}

TEST_CASE("syntax errors carry positions") {
    auto e = parse_error([] { parse_module("module m\nrules:\na :- b c.\n"); });
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
    auto dup = parse_error([] { parse_module("module m\ninput: a\ninput: b\n"); });
    CHECK(dup.detail().find("duplicate section") != std::string::npos);
    auto two = parse_error([] { parse_module("module m\ninput: a\noutput: a\n"); });
    CHECK(two.line() == 3);
    CHECK_THROWS_AS(parse_module("module m\nrules:\n{} :- a.\n"), ParseError);
    CHECK_THROWS_AS(parse_module("rules:\na.\n"), ParseError);
    CHECK_THROWS_AS(parse_module("module m\ninput: p(X)\n"), ParseError);
    CHECK_THROWS_AS(parse_module("module m\noutput: a\nrules:\na\n"), ParseError);
}

TEST_CASE("reserved names need opting in") {
    const char* text = "module m\noutput: a__r1\nrules:\na__r1.\n";
    CHECK_THROWS_AS(parse_module(text), ParseError);
    CHECK_NOTHROW(parse_module(text, ParseOptions{true}));
}

TEST_CASE("comments and free layout") {
    auto m = load_module("% header\nmodule m % trailing\noutput: a, b\nrules:\na :-\n  not b. % split\nb :- not a.\n");
    CHECK(m.rules.size() == 2);
}

TEST_CASE("ground pa") {
    const auto& pa = fixture("alice").module("pa");
    CHECK(pa.rules.size() == 6);
    std::size_t facts = 0, with_body = 0;
    for (const auto& r : pa.rules) (r.is_fact() ? facts : with_body)++;
    CHECK(facts == 3);
    CHECK(with_body == 3);
    CHECK(pa.rules.contains(Rule::normal(Atom("buy(c2)"), atom_set({"car(c2)", "safe(c2)"}), atom_set({"exp(c2)"}))));
}

TEST_CASE("ground mg2") {
    const auto& mg2 = fixture("alice-mg2").module("mg2");
    std::size_t normal = 0, facts = 0, choice = 0;
    for (const auto& r : mg2.rules) {
        if (r.kind == RuleKind::choice) ++choice;
        else if (r.is_fact()) ++facts;
        else ++normal;
    }
    CHECK(normal == 3);
    CHECK(facts == 4);
    CHECK(choice == 1);
}

TEST_CASE("variable-free source grounds to itself") {
    auto src = parse_module(pb_text);
    auto m = ground(src);
    CHECK(m.rules.size() == 1);
    CHECK(m.rules.contains(Rule::fact(Atom("exp(c2)"))));
}

TEST_CASE("grounded rule count is the sum of |C|^vars") {
    const char* text = "module m\noutput: p(a), p(b), q(a, a), q(a, b), q(b, a), q(b, b)\n"
                       "rules:\nq(X, Y) :- p(X), p(Y).\np(X).\np(a).\n";
    auto src = parse_module(text);
    auto m = ground(src);
    CHECK(constants_of(src) == std::vector<std::string>{"a", "b"});
    CHECK(m.rules.size() == 4 + 2);  // p(a). from the third rule is a duplicate
}

TEST_CASE("unsafe head variable grounds over every constant") {
    auto m = load_module("module m\noutput: p(a), p(b)\nrules:\np(X).\n");
    CHECK(m.rules.size() == 2);
}

TEST_CASE("ground errors") {
    CHECK_THROWS_AS(load_module("module m\ninput: a\nrules:\na.\n"), GroundError);
    CHECK_THROWS_AS(load_module("module m\noutput: a\nrules:\na :- z.\n"), GroundError);
}

TEST_CASE("print then parse is the identity on fixtures") {
    for (const auto& f : fixtures())
        for (const auto& m : f.modules) {
            INFO(f.name << "/" << m.name);
            auto again = load_module(format_module(m.module, m.name), ParseOptions{true});
            CHECK(again == m.module);
        }
}

}
