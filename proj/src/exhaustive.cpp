#include "rsat/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <limits>
#include <thread>

namespace rsat {

std::string to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::sat:
        return "SAT";
    case SolveStatus::unsat:
        return "UNSAT";
    case SolveStatus::unknown:
        break;
    }
    return "UNKNOWN";
}

std::string to_string(Engine e) { return e == Engine::exhaustive ? "exhaustive" : "dpll"; }

std::size_t enumeration_cap_from_env()
{
    if (const char* env = std::getenv("RSAT_ORACLE_CAP")) {
        char* end = nullptr;
        auto v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 40)
            return v;
    }
    return kDefaultEnumerationCap;
}

EnumerationCapExceeded::EnumerationCapExceeded(std::size_t required, std::size_t cap)
    : std::runtime_error("enumeration needs " + std::to_string(required) + " free variables, cap is " +
                         std::to_string(cap))
    , required_(required)
    , cap_(cap)
{
}

namespace {

/// Incremental evaluator: clauses touching the free variables keep a count
/// of true literals so a single flip only revisits that variable's
/// occurrences.
class GrayWalker {
public:
    GrayWalker(const CnfInstance& inst, Assignment base, std::span<const Var> free)
        : mode_(inst.mode())
        , assignment_(std::move(base))
        , free_(free.begin(), free.end())
    {
        std::vector<int> slot(inst.num_vars(), -1);
        for (std::size_t i = 0; i < free_.size(); ++i)
            slot[free_[i]] = static_cast<int>(i);
        occurrences_.resize(free_.size());

        for (const auto& c : inst.clauses()) {
            bool touches = std::any_of(c.begin(), c.end(), [&](Literal l) { return slot[l.var()] >= 0; });
            if (!touches) {
                if (!clause_holds(c, assignment_, mode_))
                    fixed_violation_ = true;
                continue;
            }
            auto id = static_cast<std::uint32_t>(sizes_.size());
            std::uint32_t trues = 0;
            for (auto l : c) {
                if (assignment_.value(l))
                    ++trues;
                if (slot[l.var()] >= 0)
                    occurrences_[slot[l.var()]].push_back({id, l.negated()});
            }
            sizes_.push_back(static_cast<std::uint32_t>(c.size()));
            trues_.push_back(trues);
            if (!holds(id))
                ++violated_;
        }
    }

    [[nodiscard]] bool blocked() const { return fixed_violation_; }
    [[nodiscard]] bool satisfied() const { return !fixed_violation_ && violated_ == 0; }
    [[nodiscard]] const Assignment& assignment() const { return assignment_; }

    void flip_slot(std::size_t s)
    {
        Var v = free_[s];
        bool now = !assignment_[v];
        assignment_.set(v, now);
        for (auto [id, negated] : occurrences_[s]) {
            bool before = holds(id);
            if (now != negated)
                ++trues_[id];
            else
                --trues_[id];
            bool after = holds(id);
            if (before && !after)
                ++violated_;
            else if (!before && after)
                --violated_;
        }
    }

private:
    struct Occ {
        std::uint32_t clause;
        bool negated;
    };

    [[nodiscard]] bool holds(std::uint32_t id) const
    {
        auto t = trues_[id];
        return mode_ == Mode::sat ? t > 0 : (t > 0 && t < sizes_[id]);
    }

    Mode mode_;
    Assignment assignment_;
    std::vector<Var> free_;
    std::vector<std::vector<Occ>> occurrences_;
    std::vector<std::uint32_t> sizes_;
    std::vector<std::uint32_t> trues_;
    std::size_t violated_ = 0;
    bool fixed_violation_ = false;
};

/// Walks all 2^|free| assignments; `stop` is polled periodically.
std::optional<Assignment> walk(const CnfInstance& inst, Assignment base, std::span<const Var> free,
                               const std::function<bool()>& stop = {})
{
    GrayWalker w(inst, std::move(base), free);
    if (w.blocked())
        return std::nullopt;
    if (w.satisfied())
        return w.assignment();
    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t i = 1; i < total; ++i) {
        w.flip_slot(static_cast<std::size_t>(std::countr_zero(i)));
        if (w.satisfied())
            return w.assignment();
        if (stop && (i & 0xFFFFF) == 0 && stop())
            return std::nullopt;
    }
    return std::nullopt;
}

} // namespace

std::optional<Assignment> find_extension(const CnfInstance& inst, const Assignment& base,
                                         std::span<const Var> free, std::size_t cap)
{
    if (free.size() > cap)
        throw EnumerationCapExceeded(free.size(), cap);
    return walk(inst, base, free);
}

SolveResult solve_exhaustive(const CnfInstance& inst, const OracleLimits& limits)
{
    const std::size_t n = inst.num_vars();
    if (n > limits.enumeration_cap)
        throw EnumerationCapExceeded(n, limits.enumeration_cap);

    unsigned workers = limits.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : limits.workers;
    // Split on the top variables only when the space is large enough to matter.
    std::size_t split_bits = 0;
    if (workers > 1 && n >= 20)
        while ((1u << (split_bits + 1)) <= workers && split_bits + 1 < n)
            ++split_bits;

    if (split_bits == 0) {
        std::vector<Var> free(n);
        for (Var v = 0; v < n; ++v)
            free[v] = v;
        if (auto m = walk(inst, Assignment(n), free))
            return {SolveStatus::sat, std::move(m)};
        return {SolveStatus::unsat, std::nullopt};
    }

    // Partition p fixes the top split_bits variables to the bits of p. The
    // lowest partition holding a model wins, which keeps the answer
    // independent of thread timing.
    const std::size_t parts = std::size_t{1} << split_bits;
    const std::size_t low = n - split_bits;
    std::vector<Var> free(low);
    for (Var v = 0; v < low; ++v)
        free[v] = v;
    std::vector<std::optional<Assignment>> found(parts);
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::vector<std::jthread> pool;
    for (std::size_t p = 0; p < parts; ++p) {
        pool.emplace_back([&, p] {
            Assignment base(n);
            for (std::size_t b = 0; b < split_bits; ++b)
                base.set(static_cast<Var>(low + b), ((p >> b) & 1u) != 0);
            auto stop = [&] { return best.load() < p; };
            if (auto m = walk(inst, std::move(base), free, stop)) {
                found[p] = std::move(m);
                auto cur = best.load();
                while (p < cur && !best.compare_exchange_weak(cur, p)) {
                }
            }
        });
    }
    pool.clear();
    for (auto& m : found)
        if (m)
            return {SolveStatus::sat, std::move(m)};
    return {SolveStatus::unsat, std::nullopt};
}

SolveResult solve(const CnfInstance& inst, Engine engine, const OracleLimits& limits)
{
    return engine == Engine::exhaustive ? solve_exhaustive(inst, limits) : solve_dpll(inst, limits);
}

BoundaryPredicate::BoundaryPredicate(std::vector<Var> boundary, std::vector<bool> accepted)
    : boundary_(std::move(boundary))
    , accepted_(std::move(accepted))
{
    if (boundary_.size() > 20)
        throw std::invalid_argument("boundary predicate over more than 20 variables");
    if (accepted_.size() != (std::size_t{1} << boundary_.size()))
        throw std::invalid_argument("accepted table size does not match boundary arity");
    auto sorted = boundary_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("boundary variables must be distinct");
}

BoundaryPredicate BoundaryPredicate::from_function(std::vector<Var> boundary,
                                                   const std::function<bool(std::uint64_t)>& accepts)
{
    std::vector<bool> table(std::size_t{1} << boundary.size());
    for (std::uint64_t p = 0; p < table.size(); ++p)
        table[p] = accepts(p);
    return BoundaryPredicate{std::move(boundary), std::move(table)};
}

std::size_t BoundaryPredicate::accepted_count() const
{
    return static_cast<std::size_t>(std::count(accepted_.begin(), accepted_.end(), true));
}

BoundaryPredicate BoundaryPredicate::complemented_image() const
{
    const std::uint64_t mask = num_patterns() - 1;
    return from_function(boundary_, [&](std::uint64_t p) { return accepted_[~p & mask]; });
}

std::string BoundaryPredicate::pattern_string(std::uint64_t pattern) const
{
    std::string s;
    for (std::size_t i = 0; i < boundary_.size(); ++i)
        s += ((pattern >> i) & 1u) ? 'T' : 'F';
    return s;
}

std::string BoundaryPredicate::describe() const
{
    std::string s = "{";
    bool first = true;
    for (std::uint64_t p = 0; p < accepted_.size(); ++p) {
        if (!accepted_[p])
            continue;
        if (!first)
            s += ", ";
        s += pattern_string(p);
        first = false;
    }
    return s + "}";
}

namespace {

void check_scope(const CnfInstance& clauses, std::span<const Var> boundary, std::span<const Var> aux)
{
    std::vector<bool> known(clauses.num_vars(), false);
    for (auto v : boundary)
        known.at(v) = true;
    for (auto v : aux) {
        if (known.at(v))
            throw std::invalid_argument("variable " + std::to_string(v + 1) + " is both boundary and auxiliary");
        known[v] = true;
    }
    for (const auto& c : clauses.clauses())
        for (auto l : c)
            if (!known[l.var()])
                throw std::invalid_argument("gadget clause uses variable " + std::to_string(l.var() + 1) +
                                            " outside boundary and auxiliary sets");
}

Assignment pattern_base(std::size_t n, std::span<const Var> boundary, std::uint64_t pattern)
{
    Assignment a(n);
    for (std::size_t i = 0; i < boundary.size(); ++i)
        a.set(boundary[i], ((pattern >> i) & 1u) != 0);
    return a;
}

} // namespace

BoundaryPredicate extendable_patterns(const CnfInstance& clauses, std::span<const Var> boundary,
                                      std::span<const Var> aux, std::size_t cap)
{
    if (boundary.size() + aux.size() > cap)
        throw EnumerationCapExceeded(boundary.size() + aux.size(), cap);
    check_scope(clauses, boundary, aux);
    std::vector<Var> b(boundary.begin(), boundary.end());
    return BoundaryPredicate::from_function(b, [&](std::uint64_t p) {
        return walk(clauses, pattern_base(clauses.num_vars(), boundary, p), aux).has_value();
    });
}

VerificationReport check_extension_property(const CnfInstance& clauses, const BoundaryPredicate& claimed,
                                            std::span<const Var> aux, std::size_t cap)
{
    const auto& boundary = claimed.boundary();
    if (boundary.size() + aux.size() > cap)
        throw EnumerationCapExceeded(boundary.size() + aux.size(), cap);
    check_scope(clauses, boundary, aux);

    for (std::uint64_t p = 0; p < claimed.num_patterns(); ++p) {
        auto ext = walk(clauses, pattern_base(clauses.num_vars(), boundary, p), aux);
        if (ext.has_value() == claimed.accepts(p))
            continue;
        Witness w;
        w.pattern = p;
        w.variables = boundary;
        std::string reason = "boundary pattern " + claimed.pattern_string(p);
        if (ext) {
            reason += " is rejected by the predicate but extends to a model";
            w.assignment = std::move(ext);
        } else {
            reason += " is accepted by the predicate but has no extension";
            w.assignment = pattern_base(clauses.num_vars(), boundary, p);
        }
        return VerificationReport::fail("extension property", std::move(reason), std::move(w));
    }
    return VerificationReport::pass("extension property", {"accepted = " + claimed.describe()});
}

VerificationReport subsumes(std::span<const Clause> cover, std::span<const Clause> target)
{
    for (std::size_t i = 0; i < target.size(); ++i) {
        const auto& t = target[i].literals();
        bool covered = std::any_of(cover.begin(), cover.end(), [&](const Clause& c) {
            return std::includes(t.begin(), t.end(), c.literals().begin(), c.literals().end());
        });
        if (!covered) {
            Witness w;
            w.clauses = {i};
            std::string lits;
            for (auto l : target[i])
                lits += " " + std::to_string(l.dimacs());
            return VerificationReport::fail("subsumption", "target clause " + std::to_string(i) + " (" +
                                                               lits.substr(lits.empty() ? 0 : 1) +
                                                               ") contains no cover clause",
                                            std::move(w));
        }
    }
    return VerificationReport::pass("subsumption");
}

ForcedSplit split_forced(const CnfInstance& inst, Engine engine, const OracleLimits& limits)
{
    if (inst.mode() != Mode::sat)
        throw std::invalid_argument("split_forced requires a sat-mode instance");
    auto decided = [&](const CnfInstance& f) {
        auto r = solve(f, engine, limits);
        if (r.status == SolveStatus::unknown)
            throw std::runtime_error("split_forced: oracle timed out");
        return r.sat();
    };
    if (decided(inst))
        throw std::invalid_argument("split_forced requires an unsatisfiable instance");

    ForcedSplit out;
    std::vector<Clause> core;
    for (std::size_t i = 0; i < inst.num_clauses(); ++i) {
        core.push_back(inst.clause(i));
        if (decided(CnfInstance{inst.num_vars(), core, Mode::sat})) {
            out.core.push_back(i);
        } else {
            core.pop_back();
            out.excluded.push_back(i);
            for (auto l : inst.clause(i))
                out.forced.push_back(l);
        }
    }

    // Each forced literal must be false in every model of the core.
    std::vector<Literal> checked;
    for (auto l : out.forced) {
        if (std::find(checked.begin(), checked.end(), l) != checked.end())
            continue;
        auto with_unit = core;
        with_unit.push_back(Clause{{l}});
        if (decided(CnfInstance{inst.num_vars(), std::move(with_unit), Mode::sat}))
            throw std::logic_error("split_forced: literal " + std::to_string(l.dimacs()) +
                                   " is not forced false by the core");
        checked.push_back(l);
    }
    return out;
}

} // namespace rsat
