#pragma once

#include "mlp/module.hpp"
#include "mlp/program.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mlp {

inline constexpr std::size_t default_max_atoms = 20;

struct SolveOptions {
    /// Largest |At| an enumeration accepts; beyond it CapExceeded is thrown.
    std::size_t max_atoms = default_max_atoms;
};

/// Normal rules and constraints without negative bodies.
struct PositiveProgram {
    std::vector<Rule> rules;

    bool operator==(const PositiveProgram& other) const;
};

/// `a__aux` for `a`, `p__aux(c)` for `p(c)`.
Atom choice_aux_atom(const Atom& a);

/// Replaces every choice rule `{a1..an} :- B.` by `ai :- B, not ai__aux.` and
/// `ai__aux :- not ai.` per head atom. Auxiliary atoms are added to `hidden_sink`.
/// Throws CompositionError(fresh_collision) if an auxiliary name is already used.
Program translate_choice(const Program& p, AtomSet& hidden_sink);

/// Gelfond-Lifschitz reduct of a choice-free program. Rules whose negative body
/// meets `m` are dropped; the rest lose their negative body.
PositiveProgram reduct(const Program& p, const Interpretation& m);

/// Least fixpoint of the immediate-consequence operator, or nullopt when a
/// constraint body becomes satisfied.
std::optional<Interpretation> least_model(const PositiveProgram& p);

/// All M with M = LM(P^M) over At(p) after choice translation, auxiliaries
/// stripped. Throws CapExceeded when |At(p)| exceeds the cap.
ModelSet stable_models_program(const Program& p, const SolveOptions& options = {});

/// AS(P): every M with M = LM(R^M u {a. | a in M n I}), enumerated per input
/// subset. The result carries the module's signature. Throws CapExceeded when
/// |At(P)| exceeds the cap.
AnswerSetCollection stable_models_module(const ProgramModule& m, const SolveOptions& options = {});

}  // namespace mlp
