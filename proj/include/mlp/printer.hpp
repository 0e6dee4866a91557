#pragma once

#include "mlp/module.hpp"

#include <string>
#include <string_view>

namespace mlp {

/// `h :- a, b, not c.`, `{a, b} :- c.`, `:- a.` or `h.`; bodies list positive
/// atoms before negative ones, each group in canonical order.
std::string format_rule(const Rule& r);

/// Renders a module in the `.mlp` file format. Rules keep their stored order.
std::string format_module(const ProgramModule& m, std::string_view name);

/// One model per line in canonical order.
std::string format_models(const ModelSet& models);

/// `{"module": ..., "input": [...], "output": [...], "hidden": [...], "models": [[...], ...]}`
std::string collection_json(std::string_view name, const AnswerSetCollection& c);

}  // namespace mlp
