#include "rsat/report_json.hpp"

namespace rsat {

nlohmann::json assignment_to_json(const Assignment& a)
{
    auto out = nlohmann::json::array();
    for (Var v = 0; v < a.size(); ++v)
        out.push_back(a[v] ? static_cast<long long>(v) + 1 : -static_cast<long long>(v) - 1);
    return out;
}

nlohmann::json report_to_json(const VerificationReport& r)
{
    nlohmann::json j;
    j["ok"] = r.ok;
    j["subject"] = r.subject;
    j["reason"] = r.reason;
    j["notes"] = r.notes;
    nlohmann::json w = nlohmann::json::object();
    if (!r.witness.clauses.empty()) {
        auto arr = nlohmann::json::array();
        for (auto c : r.witness.clauses)
            arr.push_back(c + 1);
        w["clauses"] = arr;
    }
    if (!r.witness.variables.empty()) {
        auto arr = nlohmann::json::array();
        for (auto v : r.witness.variables)
            arr.push_back(static_cast<long long>(v) + 1);
        w["variables"] = arr;
    }
    if (r.witness.assignment)
        w["assignment"] = assignment_to_json(*r.witness.assignment);
    if (r.witness.pattern)
        w["pattern"] = *r.witness.pattern;
    j["witness"] = w;
    return j;
}

} // namespace rsat
