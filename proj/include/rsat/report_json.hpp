#pragma once

#include "rsat/formula.hpp"
#include "rsat/report.hpp"

#include <json.hpp>

namespace rsat {

/// Version of every JSON document the CLI prints.
inline constexpr int kJsonSchemaVersion = 1;

/// Signed 1-based literals, one per variable.
nlohmann::json assignment_to_json(const Assignment& a);

/// {"ok", "subject", "reason", "notes", "witness": {...}}; witness fields
/// appear only when set. Variables and clauses are 1-based.
nlohmann::json report_to_json(const VerificationReport& r);

} // namespace rsat
