#pragma once

#include "mlp/module.hpp"

#include <map>
#include <string_view>

namespace mlp {

/// Injective map from original atoms to fresh replacements.
class RenameMap {
public:
    RenameMap() = default;

    /// Throws std::invalid_argument if `old` or `fresh` is already mapped.
    void add(Atom old, Atom fresh);

    const std::map<Atom, Atom>& pairs() const noexcept { return pairs_; }
    const Atom& operator[](const Atom& old) const { return pairs_.at(old); }
    bool contains(const Atom& old) const { return pairs_.contains(old); }
    AtomSet olds() const;
    AtomSet freshes() const;
    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }

private:
    std::map<Atom, Atom> pairs_;
    AtomSet freshes_;
};

/// Generated name for `base` tagged `tag`: `p__r1(c)` for `p(c)`, bumped to
/// `p__r1_2(c)`, `p__r1_3(c)`, ... while the name is in `avoid`.
Atom fresh_atom(const Atom& base, std::string_view tag, const AtomSet& avoid);

/// One fresh atom per element of `olds`, all outside `avoid` and distinct.
RenameMap make_rename_map(const AtomSet& olds, std::string_view tag, const AtomSet& avoid);

/// P1 (+) P2. Requires O1 n O2 = {} and respected hidden atoms.
ProgramModule compose_plus(const ProgramModule& p1, const ProgramModule& p2);

/// P1 (+) P2 restricted to mutually independent modules.
ProgramModule compose_sqcup(const ProgramModule& p1, const ProgramModule& p2);

/// Relaxed composition: like (+) but common outputs are allowed.
ProgramModule compose_relaxed(const ProgramModule& p1, const ProgramModule& p2);

/// Output renaming. Heads `o` become `o'`, each `o` turns into an input, each `o'`
/// into an output, and `:- o', not o.` is added per pair.
ProgramModule rename_output(const ProgramModule& p, const RenameMap& map);

/// P \ S. Former inputs in S get a choice rule `{i}.`; atoms outside At_v(P) are ignored.
ProgramModule hide(const ProgramModule& p, const AtomSet& s);

/// P |_S, the dual of hide().
ProgramModule project(const ProgramModule& p, const AtomSet& s);

/// <{o :- o'. o :- o''.}, O' u O'', O, {}> over the common atoms.
ProgramModule build_union_module(const AtomSet& common, const RenameMap& primed, const RenameMap& double_primed);

/// <{:- o', not o''.  :- not o', o''.}, O' u O'', {}, {}>.
ProgramModule build_filter_module(const RenameMap& primed, const RenameMap& double_primed);

/// Which outputs the transformed compositions rename.
enum class RenameScope {
    /// O1 n O2, as the constructions are defined.
    common_outputs,
    /// O1 u O2 in both modules. A module that lacks one of these outputs receives
    /// it as an input together with the fresh copy and its constraint.
    all_outputs,
};

/// Every intermediate module of a transformed composition.
struct TransformedComposition {
    AtomSet renamed_atoms;
    RenameMap primed;
    RenameMap double_primed;
    ProgramModule renamed1;
    ProgramModule renamed2;
    ProgramModule union_module;
    ProgramModule filter_module;
    /// Composite before the fresh atoms are hidden.
    ProgramModule composite;
    ProgramModule result;
};

TransformedComposition transform_relaxed_rt(const ProgramModule& p1, const ProgramModule& p2,
                                            RenameScope scope = RenameScope::common_outputs);
TransformedComposition transform_conservative(const ProgramModule& p1, const ProgramModule& p2,
                                              RenameScope scope = RenameScope::common_outputs);

/// [rho'(P1) |_| rho''(P2) |_| P_union] \ (O' u O'').
ProgramModule compose_relaxed_rt(const ProgramModule& p1, const ProgramModule& p2,
                                 RenameScope scope = RenameScope::common_outputs);

/// [rho'(P1) |_| rho''(P2) |_| P_union |_| P_filter] \ (O' u O'').
ProgramModule compose_conservative(const ProgramModule& p1, const ProgramModule& p2,
                                   RenameScope scope = RenameScope::common_outputs);

}  // namespace mlp
