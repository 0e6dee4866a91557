#pragma once

#include "mlp/atom.hpp"
#include "mlp/program.hpp"

namespace mlp::detail {

/// Exact stable-model search for a choice-free program whose `inputs` may be
/// freely assumed as facts.
///
/// The reduct only depends on the truth of atoms that occur negatively, so the
/// search branches on inputs and negatively occurring atoms only. At every node
/// a lower bound (least model of rules whose negative body is already known to
/// hold) and an upper bound (least model of rules not yet blocked) prune
/// assignments that cannot be reproduced by the least model of their reduct.
/// Each leaf is checked against the full definition.
ModelSet enumerate_stable_models(const Program& program, const AtomSet& universe, const AtomSet& inputs);

}  // namespace mlp::detail
