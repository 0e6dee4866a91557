#pragma once

#include "mlp/atom.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mlp {

enum class Verdict { equal, different };

const char* to_string(Verdict v) noexcept;

/// Outcome of checking one compositionality claim on one instance.
struct TheoremReport {
    std::string theorem;
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    bool applicable = true;
    std::string failed_precondition;
    /// Canonically sorted; may hold repeats when the claim is about multisets.
    std::vector<Interpretation> lhs_models;
    std::vector<Interpretation> rhs_models;
    Verdict verdict = Verdict::equal;
    Verdict expected = Verdict::equal;
    /// First model whose multiplicity differs between the sides.
    std::optional<Interpretation> witness;
    /// "lhs" or "rhs": the side holding the witness more often.
    std::string witness_side;
    std::chrono::microseconds elapsed{0};

    bool passed() const noexcept { return applicable && verdict == expected; }

    /// Sorts both sides and derives verdict and witness from them.
    void settle();
};

std::vector<Interpretation> to_list(const ModelSet& models);

/// One JSON object per report. Timing is omitted unless requested so that the
/// record is reproducible from (theorem, configuration, seed).
std::string report_json(const TheoremReport& r, bool with_timing = false);

/// Human-readable multi-line summary.
std::string format_report(const TheoremReport& r);

}  // namespace mlp
