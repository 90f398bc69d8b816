#include "rsat/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace rsat {

namespace {

using Lit = std::uint32_t; // 2*var + negated

constexpr Lit encode(Literal l) { return 2 * l.var() + (l.negated() ? 1 : 0); }
constexpr Var var_of(Lit l) { return l >> 1; }
constexpr Lit negate(Lit l) { return l ^ 1u; }
constexpr int kNoReason = -1;

enum class Value : std::int8_t { unset = -1, f = 0, t = 1 };

/// Max-heap of variables keyed on activity.
class ActivityHeap {
public:
    explicit ActivityHeap(const std::vector<double>& act) : act_(act), pos_(act.size(), -1) {}

    [[nodiscard]] bool empty() const { return heap_.empty(); }
    [[nodiscard]] bool contains(Var v) const { return pos_[v] >= 0; }

    void insert(Var v)
    {
        if (contains(v))
            return;
        pos_[v] = static_cast<int>(heap_.size());
        heap_.push_back(v);
        up(heap_.size() - 1);
    }

    void bumped(Var v)
    {
        if (contains(v))
            up(static_cast<std::size_t>(pos_[v]));
    }

    Var pop()
    {
        Var top = heap_.front();
        swap_at(0, heap_.size() - 1);
        heap_.pop_back();
        pos_[top] = -1;
        if (!heap_.empty())
            down(0);
        return top;
    }

private:
    void swap_at(std::size_t i, std::size_t j)
    {
        std::swap(heap_[i], heap_[j]);
        pos_[heap_[i]] = static_cast<int>(i);
        pos_[heap_[j]] = static_cast<int>(j);
    }
    [[nodiscard]] bool better(Var a, Var b) const { return act_[a] > act_[b] || (act_[a] == act_[b] && a < b); }
    void up(std::size_t i)
    {
        while (i > 0) {
            auto p = (i - 1) / 2;
            if (!better(heap_[i], heap_[p]))
                break;
            swap_at(i, p);
            i = p;
        }
    }
    void down(std::size_t i)
    {
        for (;;) {
            auto l = 2 * i + 1, r = l + 1, best = i;
            if (l < heap_.size() && better(heap_[l], heap_[best]))
                best = l;
            if (r < heap_.size() && better(heap_[r], heap_[best]))
                best = r;
            if (best == i)
                return;
            swap_at(i, best);
            i = best;
        }
    }

    const std::vector<double>& act_;
    std::vector<Var> heap_;
    std::vector<int> pos_;
};

struct ClauseData {
    std::vector<Lit> lits;
    std::uint32_t n_true = 0;
    std::uint32_t n_false = 0;
    bool learnt = false;
};

class Cdcl {
public:
    Cdcl(std::size_t n, std::optional<std::chrono::milliseconds> timeout)
        : n_(n)
        , value_(n, Value::unset)
        , level_(n, 0)
        , reason_(n, kNoReason)
        , phase_(n, false)
        , activity_(n, 0.0)
        , heap_(activity_)
        , occ_(2 * n)
        , active_(2 * n, 0)
        , pure_queued_(n, false)
        , seen_(n, false)
    {
        if (timeout)
            deadline_ = std::chrono::steady_clock::now() + *timeout;
        for (Var v = 0; v < n; ++v)
            heap_.insert(v);
    }

    /// Returns false if the clause is empty.
    bool add_original(std::vector<Lit> lits)
    {
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        for (std::size_t i = 1; i < lits.size(); ++i)
            if (var_of(lits[i]) == var_of(lits[i - 1]))
                return true; // tautology
        if (lits.empty())
            return false;
        auto id = static_cast<int>(clauses_.size());
        for (auto l : lits) {
            occ_[l].push_back(id);
            ++active_[l];
        }
        clauses_.push_back({std::move(lits), 0, 0, false});
        if (clauses_.back().lits.size() == 1)
            units_.push_back(id);
        return true;
    }

    SolveStatus run()
    {
        for (Var v = 0; v < n_; ++v)
            queue_pure(v);
        std::uint64_t conflicts = 0;
        std::uint64_t restart_at = luby(restarts_) * 64;
        for (;;) {
            int confl = propagate();
            if (confl != kNoReason) {
                ++conflicts;
                if (decision_level() == 0)
                    return SolveStatus::unsat;
                auto [learnt, back] = analyze(confl);
                backtrack(back);
                add_learnt(std::move(learnt));
                decay();
                if ((conflicts & 0xFF) == 0 && timed_out())
                    return SolveStatus::unknown;
                continue;
            }
            if (conflicts >= restart_at) {
                ++restarts_;
                restart_at = conflicts + luby(restarts_) * 64;
                backtrack(0);
                continue;
            }
            if ((++decisions_ & 0x3FF) == 0 && timed_out())
                return SolveStatus::unknown;
            auto next = pick();
            if (!next)
                return SolveStatus::sat;
            trail_lim_.push_back(trail_.size());
            assign(*next, kNoReason);
        }
    }

    [[nodiscard]] Assignment model() const
    {
        Assignment a(n_);
        for (Var v = 0; v < n_; ++v)
            a.set(v, value_[v] == Value::t);
        return a;
    }

private:
    static std::uint64_t luby(std::uint64_t i)
    {
        // i-th term (0-based) of 1,1,2,1,1,2,4,...
        std::uint64_t size = 1, seq = 0;
        while (size < i + 1) {
            ++seq;
            size = 2 * size + 1;
        }
        while (size - 1 != i) {
            size = (size - 1) >> 1;
            --seq;
            i %= size;
        }
        return std::uint64_t{1} << seq;
    }

    [[nodiscard]] bool timed_out() const { return deadline_ && std::chrono::steady_clock::now() > *deadline_; }
    [[nodiscard]] std::size_t decision_level() const { return trail_lim_.size(); }

    [[nodiscard]] Value lit_value(Lit l) const
    {
        auto v = value_[var_of(l)];
        if (v == Value::unset)
            return v;
        return ((v == Value::t) != ((l & 1u) != 0)) ? Value::t : Value::f;
    }

    void queue_pure(Var v)
    {
        if (!pure_queued_[v] && value_[v] == Value::unset &&
            (active_[2 * v] == 0 || active_[2 * v + 1] == 0)) {
            pure_queued_[v] = true;
            pure_.push_back(v);
        }
    }

    void assign(Lit l, int reason)
    {
        Var v = var_of(l);
        value_[v] = (l & 1u) ? Value::f : Value::t;
        level_[v] = static_cast<std::uint32_t>(decision_level());
        reason_[v] = reason;
        trail_.push_back(l);
        for (int id : occ_[l]) {
            auto& c = clauses_[id];
            if (c.n_true++ == 0 && !c.learnt)
                for (auto x : c.lits)
                    if (--active_[x] == 0)
                        queue_pure(var_of(x));
        }
        for (int id : occ_[negate(l)]) {
            auto& c = clauses_[id];
            ++c.n_false;
            if (c.n_true == 0 && c.n_false + 1 >= c.lits.size())
                units_.push_back(id);
        }
    }

    void unassign(Lit l)
    {
        Var v = var_of(l);
        for (int id : occ_[l]) {
            auto& c = clauses_[id];
            if (--c.n_true == 0 && !c.learnt)
                for (auto x : c.lits)
                    ++active_[x];
        }
        for (int id : occ_[negate(l)])
            --clauses_[id].n_false;
        phase_[v] = value_[v] == Value::t;
        value_[v] = Value::unset;
        reason_[v] = kNoReason;
        heap_.insert(v);
        // The variable may be pure now that it is free again.
        queue_pure(v);
    }

    int propagate()
    {
        while (!units_.empty()) {
            int id = units_.back();
            units_.pop_back();
            const auto& c = clauses_[id];
            if (c.n_true > 0)
                continue;
            if (c.n_false == c.lits.size()) {
                units_.clear();
                return id;
            }
            if (c.n_false + 1 != c.lits.size())
                continue;
            for (auto l : c.lits)
                if (lit_value(l) == Value::unset) {
                    assign(l, id);
                    break;
                }
        }
        return kNoReason;
    }

    std::pair<std::vector<Lit>, std::size_t> analyze(int confl)
    {
        std::vector<Lit> learnt{0};
        std::size_t pending = 0;
        std::size_t idx = trail_.size();
        Lit uip = 0;
        bool first = true;
        const auto cur = decision_level();
        for (;;) {
            for (auto q : clauses_[confl].lits) {
                Var v = var_of(q);
                if ((!first && v == var_of(uip)) || seen_[v] || level_[v] == 0)
                    continue;
                seen_[v] = true;
                bump(v);
                if (level_[v] == cur)
                    ++pending;
                else
                    learnt.push_back(q);
            }
            // Walk back to the next marked literal of the current level.
            do
                uip = trail_[--idx];
            while (!seen_[var_of(uip)]);
            seen_[var_of(uip)] = false;
            if (--pending == 0)
                break;
            confl = reason_[var_of(uip)];
            first = false;
        }
        learnt[0] = negate(uip);
        std::size_t back = 0;
        std::size_t max_i = 0;
        for (std::size_t i = 1; i < learnt.size(); ++i) {
            seen_[var_of(learnt[i])] = false;
            if (level_[var_of(learnt[i])] > back) {
                back = level_[var_of(learnt[i])];
                max_i = i;
            }
        }
        if (max_i > 1)
            std::swap(learnt[1], learnt[max_i]);
        return {std::move(learnt), back};
    }

    void add_learnt(std::vector<Lit> lits)
    {
        auto id = static_cast<int>(clauses_.size());
        ClauseData c{lits, 0, 0, true};
        for (auto l : lits) {
            occ_[l].push_back(id);
            if (lit_value(l) == Value::f)
                ++c.n_false;
        }
        clauses_.push_back(std::move(c));
        assign(lits[0], id);
    }

    void backtrack(std::size_t level)
    {
        if (decision_level() <= level)
            return;
        auto stop = trail_lim_[level];
        while (trail_.size() > stop) {
            unassign(trail_.back());
            trail_.pop_back();
        }
        trail_lim_.resize(level);
        units_.clear();
    }

    void bump(Var v)
    {
        activity_[v] += bump_;
        if (activity_[v] > 1e100) {
            for (auto& a : activity_)
                a *= 1e-100;
            bump_ *= 1e-100;
        }
        heap_.bumped(v);
    }

    void decay() { bump_ /= 0.95; }

    std::optional<Lit> pick()
    {
        while (!pure_.empty()) {
            Var v = pure_.back();
            pure_.pop_back();
            pure_queued_[v] = false;
            if (value_[v] != Value::unset)
                continue;
            if (active_[2 * v + 1] == 0)
                return 2 * v;
            if (active_[2 * v] == 0)
                return 2 * v + 1;
        }
        while (!heap_.empty()) {
            Var v = heap_.pop();
            if (value_[v] == Value::unset)
                return 2 * v + (phase_[v] ? 0u : 1u);
        }
        return std::nullopt;
    }

    std::size_t n_;
    std::vector<Value> value_;
    std::vector<std::uint32_t> level_;
    std::vector<int> reason_;
    std::vector<bool> phase_;
    std::vector<double> activity_;
    double bump_ = 1.0;
    ActivityHeap heap_;
    std::vector<ClauseData> clauses_;
    std::vector<std::vector<int>> occ_;
    /// Unsatisfied original clauses containing each literal.
    std::vector<std::uint32_t> active_;
    std::vector<Var> pure_;
    std::vector<bool> pure_queued_;
    std::vector<bool> seen_;
    std::vector<Lit> trail_;
    std::vector<std::size_t> trail_lim_;
    std::vector<int> units_;
    std::uint64_t restarts_ = 0;
    std::uint64_t decisions_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

} // namespace

SolveResult solve_dpll(const CnfInstance& inst, const OracleLimits& limits)
{
    Cdcl solver(inst.num_vars(), limits.timeout);
    bool ok = true;
    for (const auto& c : inst.clauses()) {
        std::vector<Lit> lits;
        lits.reserve(c.size());
        for (auto l : c)
            lits.push_back(encode(l));
        if (inst.mode() == Mode::nae) {
            std::vector<Lit> flipped;
            for (auto l : lits)
                flipped.push_back(negate(l));
            ok = solver.add_original(std::move(flipped)) && ok;
        }
        ok = solver.add_original(std::move(lits)) && ok;
    }
    if (!ok)
        return {SolveStatus::unsat, std::nullopt};

    auto status = solver.run();
    if (status != SolveStatus::sat)
        return {status, std::nullopt};
    auto model = solver.model();
    if (!evaluates_true(inst, model))
        throw std::logic_error("dpll produced an assignment that does not satisfy the instance");
    return {SolveStatus::sat, std::move(model)};
}

} // namespace rsat
