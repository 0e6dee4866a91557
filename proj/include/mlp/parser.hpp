#pragma once

#include "mlp/atom.hpp"
#include "mlp/module.hpp"
#include "mlp/program.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mlp {

struct Term {
    std::string text;
    bool variable = false;

    bool operator==(const Term&) const = default;
};

/// Possibly non-ground atom as written in the source.
struct AtomPattern {
    std::string predicate;
    std::vector<Term> args;

    bool ground() const;
    bool operator==(const AtomPattern&) const = default;
};

struct RuleSource {
    RuleKind kind = RuleKind::normal;
    std::vector<AtomPattern> head;
    std::vector<AtomPattern> body_pos;
    std::vector<AtomPattern> body_neg;
    int line = 0;

    /// Distinct variable names in order of first occurrence.
    std::vector<std::string> variables() const;
    bool operator==(const RuleSource&) const = default;
};

/// Parsed but ungrounded module text.
struct ModuleSource {
    std::string name;
    std::vector<Atom> input;
    std::vector<Atom> output;
    std::vector<Atom> hidden;
    std::vector<RuleSource> rules;
};

struct ParseOptions {
    /// Accept predicates containing the `__` infix reserved for generated atoms.
    /// Needed to read back modules printed after renaming or composition.
    bool allow_reserved = false;
};

/// Parses the `.mlp` module format. Throws ParseError with a 1-based position.
ModuleSource parse_module(std::string_view text, const ParseOptions& options = {});

/// Instantiates every rule over the module's constants (all constants appearing
/// anywhere in the source). Throws GroundError if a ground rule heads a declared
/// input or mentions an atom outside I u O u H.
ProgramModule ground(const ModuleSource& src);

/// The sorted constant universe used by ground().
std::vector<std::string> constants_of(const ModuleSource& src);

/// parse_module followed by ground.
ProgramModule load_module(std::string_view text, const ParseOptions& options = {});

/// Reads a file and loads it; the module name is stored in `name` when given.
ProgramModule load_module_file(const std::string& path, const ParseOptions& options = {},
                               std::string* name = nullptr);

}  // namespace mlp
