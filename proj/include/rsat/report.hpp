#pragma once

#include "rsat/formula.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsat {

/// Concrete evidence attached to a report. Only the fields relevant to the
/// check that produced it are filled.
struct Witness {
    std::vector<std::size_t> clauses;
    std::vector<Var> variables;
    std::optional<Assignment> assignment;
    /// Boundary pattern, bit i = value of boundary variable i.
    std::optional<std::uint64_t> pattern;

    [[nodiscard]] bool empty() const
    {
        return clauses.empty() && variables.empty() && !assignment && !pattern;
    }
};

struct VerificationReport {
    bool ok = true;
    std::string subject;
    /// First violated constraint; empty on pass.
    std::string reason;
    Witness witness;
    /// Informational lines, e.g. the accepted set that was certified.
    std::vector<std::string> notes;

    explicit operator bool() const { return ok; }

    static VerificationReport pass(std::string subject, std::vector<std::string> notes = {})
    {
        return VerificationReport{true, std::move(subject), {}, {}, std::move(notes)};
    }
    static VerificationReport fail(std::string subject, std::string reason, Witness w = {})
    {
        return VerificationReport{false, std::move(subject), std::move(reason), std::move(w), {}};
    }
};

} // namespace rsat
