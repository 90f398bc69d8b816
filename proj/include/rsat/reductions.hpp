#pragma once

#include "rsat/formula.hpp"
#include "rsat/gadgets.hpp"
#include "rsat/oracle.hpp"
#include "rsat/report.hpp"
#include "rsat/variant.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsat {

enum class ReductionId { r1, r2, r3, r4, r5, r6, r7, r8, r9, r10, r11, r12, r13, r14 };

std::string to_string(ReductionId id);
/// Accepts "R5" or "r5".
std::optional<ReductionId> reduction_from_name(std::string_view name);
const std::vector<ReductionId>& all_reductions();

struct ReductionParams {
    /// Appearance level of the input for R6 and R8.
    std::optional<std::size_t> k;
    /// Unsatisfiable monotone (2,2) instance that R10 turns into padding.
    std::optional<CnfInstance> m_source;
    /// Lets R10 take a parameter with repeated literals; the output then has
    /// multiset clauses as well.
    bool allow_star_source = false;
    /// R7: pad the y variables with D gadgets even when there are more than three.
    bool pad_with_d = false;
    /// Oracle settings used by R10 when splitting its parameter.
    OracleLimits limits{};
};

struct ReductionRow {
    ReductionId id;
    std::string source; // problem names, for listings
    std::string target;
    Mode input_mode;
    Mode output_mode;
};

const ReductionRow& reduction_row(ReductionId id);
/// Specs depend on k for R6 and R8 and on the parameter flavor for R10.
VariantSpec input_spec(ReductionId id, const ReductionParams& params = {});
VariantSpec output_spec(ReductionId id, const ReductionParams& params = {});

/// Output variable standing for an input variable. With `negated`, the
/// output variable holds the complement. Reductions that emit disjoint
/// copies of the input number them through `copy`.
struct BackRef {
    Var input = 0;
    bool negated = false;
    std::size_t copy = 0;
    friend bool operator==(const BackRef&, const BackRef&) = default;
};

/// Variables introduced by one gadget or padding step.
struct LogEntry {
    std::string label;
    std::optional<GadgetKind> kind;
    std::vector<Var> boundary;
    std::vector<Var> aux;
};

struct ReductionCertificate {
    ReductionId id{};
    CnfInstance input;
    CnfInstance output;
    /// One slot per output variable.
    std::vector<std::optional<BackRef>> back_map;
    std::vector<LogEntry> gadget_log;
};

/// Throws std::invalid_argument when the input violates the row's input
/// spec or mode, a divisibility precondition fails, a required parameter is
/// missing, or R10's parameter is satisfiable.
ReductionCertificate apply_reduction(ReductionId id, const CnfInstance& input, const ReductionParams& params = {});

/// Every output variable is back-mapped or introduced by exactly one log entry.
VerificationReport check_traceability(const ReductionCertificate& cert);

/// Maps a model of the output to a model of the input using copy 0 of the
/// back map. Throws std::invalid_argument when `model` does not satisfy the
/// output and std::logic_error when the copies of an input variable
/// disagree or the result fails the input.
Assignment pull_back(const ReductionCertificate& cert, const Assignment& model);

/// Solves both sides (input exhaustively when within the cap, else DPLL;
/// output by DPLL) and compares statuses. A satisfiable output model is also
/// pulled back and checked. Throws std::runtime_error on oracle timeout.
VerificationReport check_equisat(ReductionId id, const CnfInstance& input, const ReductionParams& params = {},
                                 const OracleLimits& limits = {});
VerificationReport check_equisat(const ReductionCertificate& cert, const OracleLimits& limits = {});

} // namespace rsat
