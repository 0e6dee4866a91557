#pragma once

#include <compare>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mlp {

/// A ground atom identified by its canonical rendering, e.g. `exp(c2)` or `a`.
///
/// Two atoms are equal iff their canonical strings are equal; ordering is the
/// lexicographic order of those strings, which is also the output order.
class Atom {
public:
    Atom() = default;
    explicit Atom(std::string canonical) : name_(std::move(canonical)) {}

    /// Builds `pred(arg1,...,argn)`, or `pred` when there are no arguments.
    static Atom make(std::string_view predicate, const std::vector<std::string>& args = {});

    const std::string& str() const noexcept { return name_; }
    std::string_view predicate() const noexcept;
    std::vector<std::string> arguments() const;

    /// True if the predicate uses the `__` infix reserved for generated atoms.
    bool reserved() const noexcept;

    auto operator<=>(const Atom&) const = default;
    bool operator==(const Atom&) const = default;

private:
    std::string name_;
};

inline std::ostream& operator<<(std::ostream& os, const Atom& a) { return os << a.str(); }

using AtomSet = std::set<Atom>;
using Interpretation = AtomSet;
/// Set of interpretations ordered lexicographically by their sorted atom lists.
using ModelSet = std::set<Interpretation>;

AtomSet atom_set(std::initializer_list<std::string_view> names);
ModelSet model_set(std::initializer_list<std::initializer_list<std::string_view>> models);

AtomSet set_union(const AtomSet& a, const AtomSet& b);
AtomSet set_intersection(const AtomSet& a, const AtomSet& b);
AtomSet set_difference(const AtomSet& a, const AtomSet& b);
bool disjoint(const AtomSet& a, const AtomSet& b);
bool subset_of(const AtomSet& a, const AtomSet& b);

/// Each model intersected with `onto`; duplicates collapse.
ModelSet restrict_models(const ModelSet& models, const AtomSet& onto);

/// `{a, b}`; the empty set renders as `{}`.
std::string to_string(const AtomSet& atoms);
std::string to_string(const ModelSet& models);

}  // namespace mlp
