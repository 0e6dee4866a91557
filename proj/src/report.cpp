#include "mlp/report.hpp"

#include <algorithm>
#include <json.hpp>

namespace mlp {

namespace {

nlohmann::json models_json(const std::vector<Interpretation>& models) {
    auto arr = nlohmann::json::array();
    for (const auto& m : models) {
        auto inner = nlohmann::json::array();
        for (const auto& a : m) inner.push_back(a.str());
        arr.push_back(std::move(inner));
    }
    return arr;
}

}  // namespace

const char* to_string(Verdict v) noexcept { return v == Verdict::equal ? "equal" : "different"; }

void TheoremReport::settle() {
    std::sort(lhs_models.begin(), lhs_models.end());
    std::sort(rhs_models.begin(), rhs_models.end());
    witness.reset();
    witness_side.clear();
    verdict = lhs_models == rhs_models ? Verdict::equal : Verdict::different;
    if (verdict == Verdict::equal) return;
    auto i = lhs_models.begin();
    auto j = rhs_models.begin();
    while (i != lhs_models.end() || j != rhs_models.end()) {
        if (j == rhs_models.end() || (i != lhs_models.end() && *i < *j)) {
            witness = *i;
            witness_side = "lhs";
            return;
        }
        if (i == lhs_models.end() || *j < *i) {
            witness = *j;
            witness_side = "rhs";
            return;
        }
        ++i;
        ++j;
    }
}

std::vector<Interpretation> to_list(const ModelSet& models) { return {models.begin(), models.end()}; }

std::string report_json(const TheoremReport& r, bool with_timing) {
    nlohmann::ordered_json j;
    j["theorem"] = r.theorem;
    j["trial"] = r.trial;
    j["seed"] = r.seed;
    j["applicable"] = r.applicable;
    if (!r.applicable) j["failed_precondition"] = r.failed_precondition;
    j["verdict"] = to_string(r.verdict);
    j["expected"] = to_string(r.expected);
    j["passed"] = r.passed();
    j["lhs_models"] = models_json(r.lhs_models);
    j["rhs_models"] = models_json(r.rhs_models);
    if (r.witness) {
        j["witness"] = models_json({*r.witness}).front();
        j["witness_side"] = r.witness_side;
    }
    if (with_timing) j["elapsed_us"] = r.elapsed.count();
    return j.dump();
}

std::string format_report(const TheoremReport& r) {
    std::string s = r.theorem + " #" + std::to_string(r.trial) + ": ";
    if (!r.applicable) s += "not applicable (" + r.failed_precondition + "); ";
    s += std::string(to_string(r.verdict)) + " (expected " + to_string(r.expected) + ") -> " +
         (r.passed() ? "PASS" : "FAIL") + "\n";
    s += "  lhs: " + std::to_string(r.lhs_models.size()) + " model(s)\n";
    s += "  rhs: " + std::to_string(r.rhs_models.size()) + " model(s)\n";
    if (r.witness) s += "  witness (" + r.witness_side + "): " + to_string(*r.witness) + "\n";
    return s;
}

}  // namespace mlp
