#pragma once

#include "rsat/formula.hpp"
#include "rsat/report.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsat {

enum class SolveStatus { sat, unsat, unknown };
std::string to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::unknown;
    /// Present iff status == sat.
    std::optional<Assignment> model;

    [[nodiscard]] bool sat() const { return status == SolveStatus::sat; }
    [[nodiscard]] bool unsat() const { return status == SolveStatus::unsat; }
};

enum class Engine { exhaustive, dpll };
std::string to_string(Engine e);

inline constexpr std::size_t kDefaultEnumerationCap = 26;

struct OracleLimits {
    /// Maximum number of free variables enumerated by the exhaustive engine.
    std::size_t enumeration_cap = kDefaultEnumerationCap;
    /// DPLL gives up with SolveStatus::unknown after this long.
    std::optional<std::chrono::milliseconds> timeout;
    /// Worker threads for exhaustive enumeration; 0 picks hardware concurrency.
    unsigned workers = 1;
};

/// Reads RSAT_ORACLE_CAP, falling back to kDefaultEnumerationCap.
std::size_t enumeration_cap_from_env();

class EnumerationCapExceeded : public std::runtime_error {
public:
    EnumerationCapExceeded(std::size_t required, std::size_t cap);
    [[nodiscard]] std::size_t required() const { return required_; }
    [[nodiscard]] std::size_t cap() const { return cap_; }

private:
    std::size_t required_;
    std::size_t cap_;
};

/// Complete enumeration in Gray-code order with incremental clause
/// re-evaluation. Honors the instance mode. Throws EnumerationCapExceeded.
SolveResult solve_exhaustive(const CnfInstance& inst, const OracleLimits& limits = {});

/// Complete DPLL search: unit propagation, pure-literal decisions and
/// conflict-driven backjumping. NAE instances are solved through the
/// clause-doubling encoding.
SolveResult solve_dpll(const CnfInstance& inst, const OracleLimits& limits = {});

SolveResult solve(const CnfInstance& inst, Engine engine, const OracleLimits& limits = {});

/// Searches for an assignment that agrees with `base` outside `free` and
/// makes every clause hold. Throws EnumerationCapExceeded.
std::optional<Assignment> find_extension(const CnfInstance& inst, const Assignment& base,
                                         std::span<const Var> free,
                                         std::size_t cap = kDefaultEnumerationCap);

/// Set of accepted assignments over an ordered list of distinct boundary
/// variables. Pattern bit i holds the value of boundary[i].
class BoundaryPredicate {
public:
    BoundaryPredicate() = default;
    BoundaryPredicate(std::vector<Var> boundary, std::vector<bool> accepted);

    static BoundaryPredicate from_function(std::vector<Var> boundary,
                                           const std::function<bool(std::uint64_t)>& accepts);

    [[nodiscard]] const std::vector<Var>& boundary() const { return boundary_; }
    [[nodiscard]] std::size_t arity() const { return boundary_.size(); }
    [[nodiscard]] std::uint64_t num_patterns() const { return std::uint64_t{1} << boundary_.size(); }
    [[nodiscard]] bool accepts(std::uint64_t pattern) const { return accepted_.at(pattern); }
    [[nodiscard]] std::size_t accepted_count() const;
    [[nodiscard]] const std::vector<bool>& table() const { return accepted_; }

    /// Same boundary, pattern p accepted iff ~p was accepted.
    [[nodiscard]] BoundaryPredicate complemented_image() const;

    /// "TF" style string, boundary[0] first.
    [[nodiscard]] std::string pattern_string(std::uint64_t pattern) const;
    /// "{TF, FT}"
    [[nodiscard]] std::string describe() const;

    friend bool operator==(const BoundaryPredicate&, const BoundaryPredicate&) = default;

private:
    std::vector<Var> boundary_;
    std::vector<bool> accepted_;
};

/// Enumerates which boundary patterns admit an extension over `aux` that
/// makes all clauses of `clauses` hold (under its mode).
BoundaryPredicate extendable_patterns(const CnfInstance& clauses, std::span<const Var> boundary,
                                      std::span<const Var> aux, std::size_t cap = kDefaultEnumerationCap);

/// Passes iff the extendable patterns coincide with `claimed`. A failure
/// names the first differing pattern and whether an extension is missing or
/// forbidden; for a forbidden extension the full assignment is attached.
VerificationReport check_extension_property(const CnfInstance& clauses, const BoundaryPredicate& claimed,
                                            std::span<const Var> aux,
                                            std::size_t cap = kDefaultEnumerationCap);

/// Passes iff every target clause contains some cover clause.
VerificationReport subsumes(std::span<const Clause> cover, std::span<const Clause> target);

struct ForcedSplit {
    /// Indices of a maximal satisfiable subset, grown greedily in input order.
    std::vector<std::size_t> core;
    std::vector<std::size_t> excluded;
    /// Literals of the excluded clauses with multiplicity; each is false in
    /// every model of the core.
    std::vector<Literal> forced;
};

/// Requires an unsatisfiable sat-mode instance; throws std::invalid_argument
/// otherwise. Every forced literal is re-checked by the oracle.
ForcedSplit split_forced(const CnfInstance& inst, Engine engine = Engine::dpll, const OracleLimits& limits = {});

} // namespace rsat
