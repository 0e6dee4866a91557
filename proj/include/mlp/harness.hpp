#pragma once

#include "mlp/compose.hpp"
#include "mlp/module.hpp"
#include "mlp/report.hpp"
#include "mlp/semantics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mlp {

// ---------------------------------------------------------------------------
// Fixtures

struct NamedModule {
    std::string name;
    ProgramModule module;
    /// `.mlp` text for modules read from source; empty for derived modules.
    std::string source;
};

/// Documented outcome for one module (or for the join of several).
struct Expectation {
    std::string description;
    /// Module whose answer sets are meant, or the operands of a join.
    std::vector<std::string> operands;
    bool join = false;
    std::optional<ModelSet> models;
    std::optional<std::size_t> count;
    /// Models are intersected with this set before comparison.
    std::optional<AtomSet> restrict_to;
    /// Structural expectation on the single operand.
    std::optional<ProgramModule> module_equals;
};

struct Fixture {
    std::string name;
    std::vector<NamedModule> modules;
    std::vector<Expectation> expectations;

    const ProgramModule& module(std::string_view name) const;
};

struct FixtureCheck {
    std::string fixture;
    std::string description;
    bool passed = false;
    std::string detail;
};

/// The worked programs with their documented answer sets.
const std::vector<Fixture>& fixtures();
const Fixture& fixture(std::string_view name);

/// Every distinct module read from `.mlp` text, in first-use order.
std::vector<NamedModule> fixture_sources();

std::vector<FixtureCheck> check_fixture(const Fixture& f, const SolveOptions& options = {});

// ---------------------------------------------------------------------------
// Random modules

struct GeneratorConfig {
    std::size_t atom_budget = 8;
    std::size_t rule_budget = 5;
    double input_fraction = 0.3;
    double output_fraction = 0.4;
    double choice_probability = 0.15;
    double negation_probability = 0.35;
    double constraint_probability = 0.1;
    std::size_t max_body = 3;
    /// Pairs: only one module may depend positively on the other's outputs.
    bool forbid_cross_positive_cycles = true;
    /// Every positive body atom precedes its rule's heads in a fixed order.
    bool positive_acyclic = false;
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument for out-of-range values.
    void validate() const;
};

/// Deterministic in the configuration. Throws std::invalid_argument when the
/// budget is infeasible, e.g. rules requested but no output or hidden atoms.
ProgramModule random_module(const GeneratorConfig& cfg);

enum class PairShape { disjoint_outputs, common_outputs };

struct ModulePair {
    ProgramModule first;
    ProgramModule second;
};

/// Two modules over a shared universe of `atom_budget` atoms that respect each
/// other's hidden atoms. With `common_outputs` at least one output is shared
/// (when the universe allows it) and common outputs never occur in positive
/// bodies unless `positive_acyclic` is set.
ModulePair random_pair(const GeneratorConfig& cfg, PairShape shape);

// ---------------------------------------------------------------------------
// Theorem checks

enum class TheoremId { module, relaxed_rt, conservative, hide_project, rename_recovery, lemma2_demo };

const char* to_string(TheoremId id) noexcept;
/// Accepts `module`, `relaxed-rt`, `conservative`, `hide-project`,
/// `rename-recovery` and `lemma2-demo`.
std::optional<TheoremId> parse_theorem_id(std::string_view s);

/// Enumeration cap used by campaigns; composites carry renamed copies.
inline constexpr std::size_t campaign_max_atoms = 40;

/// P1 (+)_relaxed P2 versus its transformed version, compared on visible
/// projections (as multisets) and input signatures. Not applicable when a
/// common output heads a choice rule: the fresh copy is then unconstrained and
/// the transformed module has more answer sets with the same visible parts.
TheoremReport check_relaxed_rt(const ProgramModule& p1, const ProgramModule& p2, const SolveOptions& options = {},
                               RenameScope scope = RenameScope::common_outputs);

/// Models of P1 (x) P2 with the fresh atoms dropped versus AS(P1) |><| AS(P2).
/// Also verifies that each model holds o, o' and o'' together or none of them.
TheoremReport check_conservative(const ProgramModule& p1, const ProgramModule& p2, const SolveOptions& options = {});

/// AS(P) versus AS(P \ S) and AS(P |_S).
TheoremReport check_hide_project(const ProgramModule& m, const AtomSet& s, const SolveOptions& options = {});

/// AS(P) versus the models of the renamed module where every fresh atom agrees
/// with its original, fresh atoms dropped.
TheoremReport check_rename_recovery(const ProgramModule& m, const AtomSet& renamed, const SolveOptions& options = {});

/// Two pairs with equal component answer sets but different relaxed unions.
/// Expected verdict: different.
TheoremReport check_lemma2_demo(const SolveOptions& options = {});

/// Runs `trials` independent checks of `id`. Trial t draws its instance from a
/// seed derived from (cfg.seed, t), so reports are reproducible. Throws
/// std::runtime_error if no instance satisfying the preconditions is found
/// within the retry bound.
std::vector<TheoremReport> run_campaign(TheoremId id, const GeneratorConfig& cfg, std::size_t trials,
                                        const SolveOptions& options = {campaign_max_atoms});

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

}  // namespace mlp
