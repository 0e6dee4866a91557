#include "mlp/atom.hpp"

#include <algorithm>
#include <iterator>

namespace mlp {

Atom Atom::make(std::string_view predicate, const std::vector<std::string>& args) {
    std::string s(predicate);
    if (!args.empty()) {
        s += '(';
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i) s += ',';
            s += args[i];
        }
        s += ')';
    }
    return Atom(std::move(s));
}

std::string_view Atom::predicate() const noexcept {
    std::string_view v(name_);
    return v.substr(0, v.find('('));
}

std::vector<std::string> Atom::arguments() const {
    std::vector<std::string> out;
    auto open = name_.find('(');
    if (open == std::string::npos) return out;
    std::string cur;
    for (std::size_t i = open + 1; i < name_.size(); ++i) {
        char c = name_[i];
        if (c == ',' || c == ')') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

bool Atom::reserved() const noexcept { return predicate().find("__") != std::string_view::npos; }

AtomSet atom_set(std::initializer_list<std::string_view> names) {
    AtomSet out;
    for (auto n : names) out.emplace(std::string(n));
    return out;
}

ModelSet model_set(std::initializer_list<std::initializer_list<std::string_view>> models) {
    ModelSet out;
    for (auto m : models) out.insert(atom_set(m));
    return out;
}

AtomSet set_union(const AtomSet& a, const AtomSet& b) {
    AtomSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

AtomSet set_intersection(const AtomSet& a, const AtomSet& b) {
    AtomSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

AtomSet set_difference(const AtomSet& a, const AtomSet& b) {
    AtomSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

bool disjoint(const AtomSet& a, const AtomSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return false;
    }
    return true;
}

bool subset_of(const AtomSet& a, const AtomSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ModelSet restrict_models(const ModelSet& models, const AtomSet& onto) {
    ModelSet out;
    for (const auto& m : models) out.insert(set_intersection(m, onto));
    return out;
}

std::string to_string(const AtomSet& atoms) {
    std::string s = "{";
    bool first = true;
    for (const auto& a : atoms) {
        if (!first) s += ", ";
        s += a.str();
        first = false;
    }
    return s + "}";
}

std::string to_string(const ModelSet& models) {
    std::string s = "{";
    bool first = true;
    for (const auto& m : models) {
        if (!first) s += ", ";
        s += to_string(m);
        first = false;
    }
    return s + "}";
}

}  // namespace mlp
