#pragma once

#include "rsat/formula.hpp"
#include "rsat/generators.hpp"
#include "rsat/oracle.hpp"
#include "rsat/report.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsat {

// ---------------------------------------------------------------------------
// Explicit unsatisfiable instances

enum class KnownUnsat { ss_bar, nine_var, mon51, hitting27 };

std::string to_string(KnownUnsat w);
std::optional<KnownUnsat> known_unsat_from_name(std::string_view name);
const std::vector<KnownUnsat>& all_known_unsat();

CnfInstance known_unsat(KnownUnsat which);

/// Certifies a known instance: exhaustive oracle for ss_bar, nine_var and
/// hitting27; DPLL plus the enforcer argument for mon51.
VerificationReport certify_known_unsat(KnownUnsat which, const OracleLimits& limits = {});

/// Independent check for mon51 that never solves the whole instance: each
/// F part is verified to accept only y = true, then the 12-variable residual
/// (the all-negative clause plus the D part) is enumerated with y1..y3 true.
VerificationReport check_mon51_by_enforcers();

// ---------------------------------------------------------------------------
// Transversal families

/// Instance made of n/3 disjoint all-negative triples covering every
/// variable, plus all-positive 3-clauses (C+).
struct CanonicalShape {
    std::vector<std::array<Var, 3>> groups;
    /// Indices of the positive clauses in the instance.
    std::vector<std::size_t> positive;
};

/// Throws std::invalid_argument when the instance does not have the shape.
CanonicalShape canonical_shape(const CnfInstance& inst);

/// M_n over the groups {0,1,2}, {3,4,5}, ...: one variable chosen per group.
class TransversalFamily {
public:
    /// n must be a positive multiple of 3 and at most 60.
    explicit TransversalFamily(std::size_t n);

    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] std::size_t groups() const { return n_ / 3; }
    /// Counts members by walking them.
    [[nodiscard]] std::uint64_t count() const;
    /// Members X with clause ⊆ X, by walking them.
    [[nodiscard]] std::uint64_t coverage(const std::array<Var, 3>& clause) const;
    /// Calls `f` with the bit mask of each member; stops when `f` returns false.
    void for_each(const std::function<bool(std::uint64_t)>& f) const;

private:
    std::size_t n_;
};

struct TransversalOptions {
    /// Largest number of groups enumerated (3^cap members).
    std::size_t group_cap = 15;
};

/// Satisfiable iff some transversal contains no C+ clause. A pass carries
/// the satisfying assignment (the transversal set false, the rest true);
/// an unsat verdict is a failing report. Throws std::invalid_argument on a
/// shape mismatch and std::length_error when n/3 exceeds the cap.
VerificationReport check_sat_via_transversal(const CnfInstance& inst, const TransversalOptions& opts = {});

enum class SatGuarantee { appearance_bound, clause_count_bound };
std::string to_string(SatGuarantee g);

/// Guarantee when every variable appears unnegated fewer than 81/n times or
/// |C+| < 27; nullopt means no guarantee, not unsat. Throws
/// std::invalid_argument on a shape mismatch.
std::optional<SatGuarantee> bound_satisfiable(const CnfInstance& inst);

struct HittingSetResult {
    std::size_t size = 0;
    /// Positive clauses over the groups {0,1,2}, {3,4,5}, ...
    std::vector<std::array<Var, 3>> clauses;
    std::uint64_t nodes = 0;
};

/// Smallest set of positive 3-clauses meeting every member of U_n, by branch
/// and bound. nullopt when some member of U_n is empty (n < 9), since then no
/// hitting set exists. Throws std::runtime_error when the node budget runs out.
std::optional<HittingSetResult> min_transversal_hitting_set(std::size_t n, std::uint64_t node_budget = 50'000'000);

// ---------------------------------------------------------------------------
// Search for unsatisfiable monotone instances

struct JournalEntry {
    std::size_t n = 0;
    /// "exhaustive", "random" or "bound".
    std::string phase;
    std::uint64_t candidates = 0;   // canonical candidates solved
    std::uint64_t distinct = 0;     // of those, with pairwise distinct clauses
    std::uint64_t satisfiable = 0;
    bool exhausted = false;
    std::string note;
};

struct SearchOptions {
    /// Target (unnegated, negated) profile; (2,2), (3,1), (4,1) or (5,1).
    Profile profile{2, 2};
    /// First n considered; 0 picks the smallest admissible value.
    std::size_t min_n = 0;
    std::size_t max_n = 9;
    /// Candidates examined per n in the exhaustive phase.
    std::uint64_t max_candidates = 1'000'000;
    /// Random candidates per n after a partial exhaustive phase.
    std::uint64_t random_samples = 0;
    std::uint64_t seed = 1;
    std::optional<std::chrono::milliseconds> timeout;
    unsigned workers = 1;
    /// Skip values of n that a known bound already settles as satisfiable.
    bool respect_bounds = true;
    /// Also consider instances in which a clause repeats. These form a
    /// superset, so exhausting them covers the distinct-clause case too.
    bool allow_repeated_clauses = true;
    /// (5,1) only: seed the search with the enforcer construction.
    bool seed_from_gadgets = true;
    /// Called after every n with the new journal entry.
    std::function<void(const JournalEntry&)> on_progress;
    /// Called with every candidate handed to the solver, serialized.
    std::function<void(const CnfInstance&)> on_candidate;
};

struct SearchResult {
    std::optional<CnfInstance> found;
    /// Certification of `found`: spec check, DPLL and, within the cap, the
    /// exhaustive oracle.
    std::optional<VerificationReport> certificate;
    std::vector<JournalEntry> journal;
    /// Largest n such that every admissible n' <= n was exhausted or settled
    /// by a bound.
    std::optional<std::size_t> exhausted_through;
    bool timed_out = false;
};

/// Throws std::invalid_argument for an unsupported profile.
SearchResult search_unsat(const SearchOptions& opts);

/// Admissible instance sizes for a monotone (p,q) profile: both p*n and
/// q*n are multiples of 3.
bool admissible_n(const Profile& profile, std::size_t n);

/// Smallest n that may hold an unsatisfiable instance according to the
/// known bounds (21 for (4,1), 27 for (3,1)); 0 when no bound is known.
std::size_t bound_min_n(const Profile& profile);

} // namespace rsat
