#pragma once

#include "mlp/atom.hpp"
#include "mlp/program.hpp"

#include <string>
#include <vector>

namespace mlp {

/// A program module <R, I, O, H>.
///
/// Well-formed modules have pairwise disjoint I, O and H, every rule atom inside
/// I u O u H, and no rule head inside I. Construction does not enforce this;
/// use validate_module().
struct ProgramModule {
    Program rules;
    AtomSet input;
    AtomSet output;
    AtomSet hidden;

    /// At(P) = I u O u H.
    AtomSet atoms() const;

    bool operator==(const ProgramModule&) const = default;
};

/// At_v(P) = I u O.
AtomSet visible_atoms(const ProgramModule& m);

struct ValidationResult {
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
    explicit operator bool() const noexcept { return ok(); }
};

/// Reports every violated interface invariant; empty on success.
ValidationResult validate_module(const ProgramModule& m);

/// Stable models of a module together with the owner's signature.
struct AnswerSetCollection {
    AtomSet input;
    AtomSet output;
    AtomSet hidden;
    ModelSet models;

    AtomSet visible() const { return set_union(input, output); }
    bool operator==(const AnswerSetCollection&) const = default;
};

}  // namespace mlp
