#pragma once

#include "mlp/module.hpp"
#include "mlp/semantics.hpp"

#include <optional>
#include <string>

namespace mlp {

struct EquivalenceResult {
    bool equivalent = true;
    std::string reason;
    /// Visible projection whose multiplicity differs, when that is the cause.
    std::optional<Interpretation> witness;

    explicit operator bool() const noexcept { return equivalent; }
};

/// Visible equivalence of two collections: equal visible signatures and equal
/// multisets of visible projections. A bijection between the collections that
/// preserves visible parts exists exactly when these multisets coincide.
EquivalenceResult visibly_equivalent(const AnswerSetCollection& p, const AnswerSetCollection& q);

EquivalenceResult visibly_equivalent(const ProgramModule& p, const ProgramModule& q, const SolveOptions& options = {});

/// Visible equivalence plus equal input signatures.
EquivalenceResult modularly_equivalent(const ProgramModule& p, const ProgramModule& q,
                                       const SolveOptions& options = {});

}  // namespace mlp
