#include "mlp/error.hpp"

namespace mlp {

namespace {

std::string describe(CompositionError::Kind kind, const std::vector<Atom>& witness) {
    std::string s = to_string(kind);
    s += ": ";
    const char* sep = kind == CompositionError::Kind::mutual_dependence ? " -> " : ", ";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) s += sep;
        s += witness[i].str();
    }
    return s;
}

}  // namespace

ParseError::ParseError(std::string message, int line, int column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      detail_(std::move(message)),
      line_(line),
      column_(column) {}

CapExceeded::CapExceeded(std::size_t atoms, std::size_t cap)
    : Error("enumeration cap exceeded: " + std::to_string(atoms) + " atoms > max " + std::to_string(cap)),
      atoms_(atoms),
      cap_(cap) {}

CompositionError::CompositionError(Kind kind, std::vector<Atom> witness)
    : Error(describe(kind, witness)), kind_(kind), witness_(std::move(witness)) {}

const char* to_string(CompositionError::Kind kind) noexcept {
    switch (kind) {
        case CompositionError::Kind::outputs_overlap: return "outputs overlap";
        case CompositionError::Kind::hidden_leak: return "hidden atoms leak";
        case CompositionError::Kind::mutual_dependence: return "mutual positive dependence";
        case CompositionError::Kind::old_not_output: return "renamed atom is not an output";
        case CompositionError::Kind::fresh_collision: return "fresh atom collides";
        case CompositionError::Kind::coverage_mismatch: return "renaming does not cover the common outputs";
    }
    return "composition error";
}

}  // namespace mlp
