#pragma once

#include "rsat/formula.hpp"
#include "rsat/report.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rsat {

enum class Monotonicity {
    none,
    sat_monotone, // every clause all-positive or all-negative
    nae_monotone, // no negative literal at all
};

enum class Linearity { no_check, linear, exact_linear };

/// Declarative description of a restricted SAT variant. Empty/nullopt
/// fields are unconstrained.
struct VariantSpec {
    std::optional<std::size_t> clause_arity = 3;
    bool duplicates_allowed = false;
    Monotonicity monotonicity = Monotonicity::none;
    /// Each variable must appear exactly this many times in total.
    std::optional<std::size_t> total_appearances;
    /// Each variable's (unnegated, negated) count must be one of these.
    std::vector<std::pair<std::size_t, std::size_t>> allowed_profiles;
    Linearity linearity = Linearity::no_check;
    /// Forbid a clause occurring twice.
    bool distinct_clauses = false;

    /// Parses the dash-separated grammar documented in README.md, e.g.
    /// `mono-sat-p3q3`, `mono-nae-e4-linear`, `e4-choice-31-13`.
    /// Throws std::invalid_argument on malformed input.
    static VariantSpec parse(std::string_view text);
    [[nodiscard]] std::string to_string() const;

    static VariantSpec exact(std::size_t p, std::size_t q, Monotonicity m = Monotonicity::sat_monotone)
    {
        VariantSpec s;
        s.monotonicity = m;
        s.allowed_profiles = {{p, q}};
        return s;
    }

    friend bool operator==(const VariantSpec&, const VariantSpec&) = default;
};

/// Checks every predicate of `spec` in a fixed order (arity, duplicates,
/// monotonicity, appearances, linearity, clause distinctness) and reports
/// the first violation with its witness.
VerificationReport validate(const CnfInstance& inst, const VariantSpec& spec);

/// Pairwise variable-sharing check. With `exact`, every pair must share
/// exactly one variable. Throws std::invalid_argument on multiset clauses.
VerificationReport is_linear(const CnfInstance& inst, bool exact = false);

} // namespace rsat
