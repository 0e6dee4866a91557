#pragma once

#include "mlp/atom.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed module text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::string message, int line, int column);
    const std::string& detail() const noexcept { return detail_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    std::string detail_;
    int line_;
    int column_;
};

/// Grounding produced a rule or atom that violates the module's interface.
class GroundError : public Error {
public:
    using Error::Error;
};

/// The enumeration would exceed the configured atom cap. Results are never truncated.
class CapExceeded : public Error {
public:
    CapExceeded(std::size_t atoms, std::size_t cap);
    std::size_t atoms() const noexcept { return atoms_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t atoms_;
    std::size_t cap_;
};

/// A composition or transformation precondition failed.
class CompositionError : public Error {
public:
    enum class Kind {
        outputs_overlap,
        hidden_leak,
        mutual_dependence,
        old_not_output,
        fresh_collision,
        coverage_mismatch,
    };

    /// For `mutual_dependence` the witness is an ordered closed walk; otherwise the
    /// offending atoms in canonical order.
    CompositionError(Kind kind, std::vector<Atom> witness);

    Kind kind() const noexcept { return kind_; }
    const std::vector<Atom>& witness() const noexcept { return witness_; }

private:
    Kind kind_;
    std::vector<Atom> witness_;
};

const char* to_string(CompositionError::Kind kind) noexcept;

}  // namespace mlp
