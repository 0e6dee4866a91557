#include "mlp/error.hpp"
#include "mlp/parser.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace mlp {

namespace {

void collect_constants(const AtomPattern& p, std::set<std::string>& out) {
    for (const auto& t : p.args)
        if (!t.variable) out.insert(t.text);
}

using Binding = std::map<std::string, std::string>;

Atom bind(const AtomPattern& p, const Binding& b) {
    std::vector<std::string> args;
    args.reserve(p.args.size());
    for (const auto& t : p.args) args.push_back(t.variable ? b.at(t.text) : t.text);
    return Atom::make(p.predicate, args);
}

AtomSet bind_all(const std::vector<AtomPattern>& ps, const Binding& b) {
    AtomSet out;
    for (const auto& p : ps) out.insert(bind(p, b));
    return out;
}

Rule instantiate(const RuleSource& r, const Binding& b) {
    auto pos = bind_all(r.body_pos, b);
    auto neg = bind_all(r.body_neg, b);
    switch (r.kind) {
        case RuleKind::normal: return Rule::normal(bind(r.head.front(), b), std::move(pos), std::move(neg));
        case RuleKind::constraint: return Rule::constraint(std::move(pos), std::move(neg));
        case RuleKind::choice: return Rule::choice(bind_all(r.head, b), std::move(pos), std::move(neg));
    }
    throw std::logic_error("unknown rule kind");
}

}  // namespace

std::vector<std::string> constants_of(const ModuleSource& src) {
    std::set<std::string> cs;
    for (const auto* list : {&src.input, &src.output, &src.hidden})
        for (const auto& a : *list)
            for (auto& arg : a.arguments()) cs.insert(std::move(arg));
    for (const auto& r : src.rules)
        for (const auto* ps : {&r.head, &r.body_pos, &r.body_neg})
            for (const auto& p : *ps) collect_constants(p, cs);
    return {cs.begin(), cs.end()};
}

ProgramModule ground(const ModuleSource& src) {
    ProgramModule m;
    m.input.insert(src.input.begin(), src.input.end());
    m.output.insert(src.output.begin(), src.output.end());
    m.hidden.insert(src.hidden.begin(), src.hidden.end());
    const AtomSet signature = m.atoms();
    const auto constants = constants_of(src);

    auto add = [&](const RuleSource& rs, const Binding& b) {
        Rule r = instantiate(rs, b);
        for (const auto& h : r.head)
            if (m.input.contains(h))
                throw GroundError("line " + std::to_string(rs.line) + ": rule head " + h.str() + " is a declared input");
        for (const auto& a : r.atoms())
            if (!signature.contains(a))
                throw GroundError("line " + std::to_string(rs.line) + ": atom " + a.str() +
                                  " is not declared as input, output or hidden");
        m.rules.add(std::move(r));
    };

    for (const auto& rs : src.rules) {
        const auto vars = rs.variables();
        if (vars.empty()) {
            add(rs, {});
            continue;
        }
        if (constants.empty()) continue;
        // Odometer over constants^|vars|.
        std::vector<std::size_t> idx(vars.size(), 0);
        for (;;) {
            Binding b;
            for (std::size_t i = 0; i < vars.size(); ++i) b[vars[i]] = constants[idx[i]];
            add(rs, b);
            std::size_t k = vars.size();
            while (k > 0 && ++idx[k - 1] == constants.size()) {
                idx[k - 1] = 0;
                --k;
            }
            if (k == 0) break;
        }
    }
    return m;
}

ProgramModule load_module(std::string_view text, const ParseOptions& options) {
    return ground(parse_module(text, options));
}

ProgramModule load_module_file(const std::string& path, const ParseOptions& options, std::string* name) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    auto src = parse_module(ss.str(), options);
    if (name) *name = src.name;
    return ground(src);
}

}  // namespace mlp
