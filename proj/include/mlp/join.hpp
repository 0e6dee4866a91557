#pragma once

#include "mlp/module.hpp"
#include "mlp/report.hpp"
#include "mlp/semantics.hpp"

namespace mlp {

/// A1 |><| A2: unions M1 u M2 of models that agree on each other's visible atoms.
/// The result carries the relaxed-composition signature of the two owners.
AnswerSetCollection natural_join(const AnswerSetCollection& a1, const AnswerSetCollection& a2);

/// Compares AS(P1 |_| P2) with AS(P1) |><| AS(P2).
///
/// When the union is undefined the report is marked not applicable and the
/// left side is computed from the plain rule union (relaxed composition)
/// instead, which exhibits the failure of the claim outside its precondition.
TheoremReport check_module_theorem(const ProgramModule& p1, const ProgramModule& p2,
                                   const SolveOptions& options = {});

}  // namespace mlp
