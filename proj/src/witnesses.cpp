#include "rsat/witnesses.hpp"

#include "rsat/gadgets.hpp"
#include "rsat/variant.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rsat {

namespace {

CnfInstance from_dimacs_rows(std::size_t n, std::initializer_list<std::initializer_list<int>> rows)
{
    std::vector<Clause> cls;
    for (auto row : rows) {
        std::vector<Literal> lits;
        for (int d : row)
            lits.push_back(Literal::from_dimacs(d));
        cls.emplace_back(std::move(lits));
    }
    return CnfInstance{n, std::move(cls)};
}

// a..i = 1..9
CnfInstance nine_var()
{
    return from_dimacs_rows(9, {{-1, -4, -7}, {-1, -6, -9}, {-2, -4, -8}, {-2, -5, -6}, {-3, -5, -7}, {-3, -8, -9},
                                {1, 4, 7},    {1, 6, 9},    {2, 4, 8},    {2, 5, 6},    {3, 5, 7},    {3, 8, 9},
                                {1, 2, 3},    {4, 5, 9},    {6, 7, 8},    {-1, -5, -8}, {-2, -7, -9}, {-3, -4, -6}});
}

CnfInstance ss_bar()
{
    FreshAllocator alloc(1);
    const Var x = 0;
    std::vector<Clause> cls;
    for (auto kind : {GadgetKind::s, GadgetKind::s_bar}) {
        auto g = build_gadget(kind, std::vector<Var>{x, x, x}, alloc);
        cls.insert(cls.end(), g.clauses.begin(), g.clauses.end());
    }
    return CnfInstance{alloc.next(), std::move(cls)};
}

struct Mon51Parts {
    std::array<Var, 3> y{};
    std::vector<GadgetInstance> enforcers;
    Clause link;
    GadgetInstance d;
    std::size_t num_vars = 0;
};

Mon51Parts mon51_parts()
{
    Mon51Parts m;
    FreshAllocator alloc(3);
    m.y = {0, 1, 2};
    for (Var y : m.y)
        m.enforcers.push_back(build_gadget(GadgetKind::f, std::vector<Var>{y}, alloc));
    m.link = Clause{neg(0), neg(1), neg(2)};
    m.d = build_gadget(GadgetKind::d, std::vector<Var>{0, 0, 1, 1, 2, 2}, alloc);
    m.num_vars = alloc.next();
    return m;
}

CnfInstance mon51()
{
    auto m = mon51_parts();
    std::vector<Clause> cls;
    for (const auto& f : m.enforcers)
        cls.insert(cls.end(), f.clauses.begin(), f.clauses.end());
    cls.push_back(m.link);
    cls.insert(cls.end(), m.d.clauses.begin(), m.d.clauses.end());
    return CnfInstance{m.num_vars, std::move(cls)};
}

CnfInstance hitting27()
{
    std::vector<Clause> cls;
    for (Var g = 0; g < 9; g += 3)
        cls.push_back(Clause{neg(g), neg(g + 1), neg(g + 2)});
    for (Var a = 0; a < 3; ++a)
        for (Var b = 3; b < 6; ++b)
            for (Var c = 6; c < 9; ++c)
                cls.push_back(Clause{pos(a), pos(b), pos(c)});
    return CnfInstance{9, std::move(cls)};
}

std::uint64_t pow3(std::size_t k)
{
    std::uint64_t r = 1;
    while (k-- > 0)
        r *= 3;
    return r;
}

} // namespace

// ---------------------------------------------------------------------------

std::string to_string(KnownUnsat w)
{
    switch (w) {
    case KnownUnsat::ss_bar:
        return "ss_bar";
    case KnownUnsat::nine_var:
        return "nine_var";
    case KnownUnsat::mon51:
        return "mon51";
    case KnownUnsat::hitting27:
        return "hitting27";
    }
    throw std::logic_error("unknown witness");
}

std::optional<KnownUnsat> known_unsat_from_name(std::string_view name)
{
    for (auto w : all_known_unsat())
        if (to_string(w) == name)
            return w;
    return std::nullopt;
}

const std::vector<KnownUnsat>& all_known_unsat()
{
    static const std::vector<KnownUnsat> all{KnownUnsat::ss_bar, KnownUnsat::nine_var, KnownUnsat::mon51,
                                             KnownUnsat::hitting27};
    return all;
}

CnfInstance known_unsat(KnownUnsat which)
{
    switch (which) {
    case KnownUnsat::ss_bar:
        return ss_bar();
    case KnownUnsat::nine_var:
        return nine_var();
    case KnownUnsat::mon51:
        return mon51();
    case KnownUnsat::hitting27:
        return hitting27();
    }
    throw std::logic_error("unknown witness");
}

VerificationReport certify_known_unsat(KnownUnsat which, const OracleLimits& limits)
{
    const auto inst = known_unsat(which);
    const std::string subject = to_string(which);
    std::vector<std::string> notes;
    notes.push_back(std::to_string(inst.num_vars()) + " vars, " + std::to_string(inst.num_clauses()) + " clauses");

    if (which == KnownUnsat::mon51) {
        OracleLimits l = limits;
        if (!l.timeout)
            l.timeout = std::chrono::milliseconds(60'000);
        auto r = solve_dpll(inst, l);
        if (r.status == SolveStatus::unknown)
            return VerificationReport::fail(subject, "DPLL timed out");
        if (r.sat()) {
            Witness w;
            w.assignment = r.model;
            return VerificationReport::fail(subject, "DPLL found a model", std::move(w));
        }
        notes.emplace_back("UNSAT (dpll)");
        auto comp = check_mon51_by_enforcers();
        if (!comp)
            return VerificationReport::fail(subject, "enforcer check: " + comp.reason, comp.witness);
        notes.emplace_back("UNSAT (enforcers + residual enumeration)");
        return VerificationReport::pass(subject, std::move(notes));
    }

    auto r = solve_exhaustive(inst, limits);
    if (r.sat()) {
        Witness w;
        w.assignment = r.model;
        return VerificationReport::fail(subject, "exhaustive oracle found a model", std::move(w));
    }
    notes.push_back("UNSAT (exhaustive, 2^" + std::to_string(inst.num_vars()) + " assignments)");
    return VerificationReport::pass(subject, std::move(notes));
}

VerificationReport check_mon51_by_enforcers()
{
    const std::string subject = "mon51 enforcers";
    auto m = mon51_parts();

    // Aux sets of the four parts must be pairwise disjoint and avoid y.
    std::vector<int> owner(m.num_vars, -1);
    for (Var y : m.y)
        owner[y] = 0;
    auto claim = [&](const std::vector<Var>& aux, int id) {
        for (Var v : aux) {
            if (owner[v] != -1)
                return false;
            owner[v] = id;
        }
        return true;
    };
    for (std::size_t i = 0; i < m.enforcers.size(); ++i)
        if (!claim(m.enforcers[i].aux, static_cast<int>(i) + 1))
            return VerificationReport::fail(subject, "F part " + std::to_string(i) + " shares an aux variable");
    if (!claim(m.d.aux, 4))
        return VerificationReport::fail(subject, "D part shares an aux variable");
    if (std::count(owner.begin(), owner.end(), -1) != 0)
        return VerificationReport::fail(subject, "variable outside every part");

    std::vector<std::string> notes;
    for (std::size_t i = 0; i < m.enforcers.size(); ++i) {
        const auto& f = m.enforcers[i];
        auto rep = verify_instance(f);
        if (!rep)
            return VerificationReport::fail(subject, "F part " + std::to_string(i) + ": " + rep.reason, rep.witness);
        if (f.predicate.accepted_count() != 1 || !f.predicate.accepts(1))
            return VerificationReport::fail(subject, "F part " + std::to_string(i) + " does not force y true");
    }
    notes.emplace_back("each F part accepts exactly y = T");

    std::vector<Clause> residual{m.link};
    residual.insert(residual.end(), m.d.clauses.begin(), m.d.clauses.end());
    CnfInstance res{m.num_vars, std::move(residual)};
    Assignment base(m.num_vars);
    for (Var y : m.y)
        base.set(y, true);
    if (auto ext = find_extension(res, base, m.d.aux)) {
        Witness w;
        w.assignment = *ext;
        return VerificationReport::fail(subject, "residual has a model with y1 = y2 = y3 = T", std::move(w));
    }
    notes.push_back("residual over " + std::to_string(m.d.aux.size() + m.y.size()) +
                    " variables has no model with y1 = y2 = y3 = T");
    return VerificationReport::pass(subject, std::move(notes));
}

// ---------------------------------------------------------------------------

CanonicalShape canonical_shape(const CnfInstance& inst)
{
    const std::size_t n = inst.num_vars();
    CanonicalShape shape;
    std::vector<bool> covered(n, false);
    for (std::size_t i = 0; i < inst.num_clauses(); ++i) {
        const auto& c = inst.clause(i);
        auto vars = c.variables();
        if (c.size() != 3 || vars.size() != 3)
            throw std::invalid_argument("clause " + std::to_string(i) + " is not a 3-clause over distinct variables");
        if (c.all_positive()) {
            shape.positive.push_back(i);
        } else if (c.all_negative()) {
            for (Var v : vars) {
                if (covered[v])
                    throw std::invalid_argument("negative clauses are not disjoint: variable " + std::to_string(v + 1) +
                                                " repeats in clause " + std::to_string(i));
                covered[v] = true;
            }
            shape.groups.push_back({vars[0], vars[1], vars[2]});
        } else {
            throw std::invalid_argument("clause " + std::to_string(i) + " is mixed");
        }
    }
    for (Var v = 0; v < n; ++v)
        if (!covered[v])
            throw std::invalid_argument("variable " + std::to_string(v + 1) + " is in no negative clause");
    return shape;
}

TransversalFamily::TransversalFamily(std::size_t n) : n_(n)
{
    if (n == 0 || n % 3 != 0 || n > 60)
        throw std::invalid_argument("transversal family needs n a positive multiple of 3, at most 60");
}

void TransversalFamily::for_each(const std::function<bool(std::uint64_t)>& f) const
{
    const std::size_t k = groups();
    std::vector<int> digit(k, 0);
    std::uint64_t mask = 0;
    for (std::size_t g = 0; g < k; ++g)
        mask |= std::uint64_t{1} << (3 * g);
    for (;;) {
        if (!f(mask))
            return;
        std::size_t g = 0;
        for (; g < k; ++g) {
            mask &= ~(std::uint64_t{1} << (3 * g + digit[g]));
            if (digit[g] < 2) {
                ++digit[g];
                mask |= std::uint64_t{1} << (3 * g + digit[g]);
                break;
            }
            digit[g] = 0;
            mask |= std::uint64_t{1} << (3 * g);
        }
        if (g == k)
            return;
    }
}

std::uint64_t TransversalFamily::count() const
{
    std::uint64_t c = 0;
    for_each([&](std::uint64_t) {
        ++c;
        return true;
    });
    return c;
}

std::uint64_t TransversalFamily::coverage(const std::array<Var, 3>& clause) const
{
    std::uint64_t want = 0;
    for (Var v : clause) {
        if (v >= n_)
            throw std::invalid_argument("clause variable out of range");
        want |= std::uint64_t{1} << v;
    }
    std::uint64_t c = 0;
    for_each([&](std::uint64_t x) {
        c += (x & want) == want;
        return true;
    });
    return c;
}

VerificationReport check_sat_via_transversal(const CnfInstance& inst, const TransversalOptions& opts)
{
    const std::string subject = "transversal check";
    auto shape = canonical_shape(inst);
    const std::size_t k = shape.groups.size();
    if (k > opts.group_cap)
        throw std::length_error("transversal check: " + std::to_string(k) + " groups exceed the cap of " +
                                std::to_string(opts.group_cap));

    struct Slot {
        std::size_t group;
        int index;
    };
    std::vector<Slot> where(inst.num_vars());
    for (std::size_t g = 0; g < k; ++g)
        for (int i = 0; i < 3; ++i)
            where[shape.groups[g][i]] = {g, i};

    // A clause lies inside a transversal only if its variables sit in three
    // different groups; it is tested once its last group is chosen.
    std::vector<std::vector<std::array<Slot, 3>>> at_level(k);
    for (std::size_t idx : shape.positive) {
        auto vars = inst.clause(idx).variables();
        std::array<Slot, 3> s{where[vars[0]], where[vars[1]], where[vars[2]]};
        if (s[0].group == s[1].group || s[0].group == s[2].group || s[1].group == s[2].group)
            continue;
        std::size_t last = std::max({s[0].group, s[1].group, s[2].group});
        at_level[last].push_back(s);
    }

    std::vector<int> choice(k, 0);
    std::size_t level = 0;
    bool found = k == 0;
    // Iterative depth-first walk over the choices.
    if (k > 0) {
        for (;;) {
            bool blocked = false;
            for (const auto& s : at_level[level])
                if (choice[s[0].group] == s[0].index && choice[s[1].group] == s[1].index &&
                    choice[s[2].group] == s[2].index) {
                    blocked = true;
                    break;
                }
            if (!blocked && level + 1 == k) {
                found = true;
                break;
            }
            if (!blocked) {
                choice[++level] = 0;
                continue;
            }
            while (choice[level] == 2) {
                if (level == 0)
                    goto done;
                --level;
            }
            ++choice[level];
        }
    }
done:
    if (!found) {
        return VerificationReport::fail(subject, "every transversal contains a positive clause (unsat)");
    }
    Witness w;
    Assignment a(inst.num_vars(), true);
    for (std::size_t g = 0; g < k; ++g) {
        Var v = shape.groups[g][static_cast<std::size_t>(choice[g])];
        a.set(v, false);
        w.variables.push_back(v);
    }
    if (!evaluates_true(inst, a))
        throw std::logic_error("transversal assignment fails the instance");
    w.assignment = a;
    auto rep = VerificationReport::pass(subject, {"satisfiable via a transversal"});
    rep.witness = std::move(w);
    return rep;
}

std::string to_string(SatGuarantee g)
{
    return g == SatGuarantee::appearance_bound ? "every variable appears unnegated fewer than 81/n times"
                                               : "fewer than 27 positive clauses";
}

std::optional<SatGuarantee> bound_satisfiable(const CnfInstance& inst)
{
    auto shape = canonical_shape(inst);
    const std::size_t n = inst.num_vars();
    std::size_t max_pos = 0;
    for (const auto& a : appearance_profile(inst))
        max_pos = std::max(max_pos, a.positive);
    if (max_pos * n < 81)
        return SatGuarantee::appearance_bound;
    if (shape.positive.size() < 27)
        return SatGuarantee::clause_count_bound;
    return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

class HittingSearch {
public:
    HittingSearch(std::size_t k, std::uint64_t budget) : k_(k), budget_(budget), elements_(pow3(k))
    {
        per_ = pow3(k - 3);
        std::vector<std::uint64_t> place(k, 1);
        for (std::size_t g = 1; g < k; ++g)
            place[g] = place[g - 1] * 3;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                for (std::size_t c = b + 1; c < k; ++c)
                    for (int da = 0; da < 3; ++da)
                        for (int db = 0; db < 3; ++db)
                            for (int dc = 0; dc < 3; ++dc) {
                                Cand cand;
                                cand.clause = {static_cast<Var>(3 * a + da), static_cast<Var>(3 * b + db),
                                               static_cast<Var>(3 * c + dc)};
                                cands_.push_back(cand);
                            }
        containing_.assign(elements_, {});
        for (std::uint64_t e = 0; e < elements_; ++e) {
            std::uint64_t x = e;
            std::vector<int> digit(k);
            for (std::size_t g = 0; g < k; ++g) {
                digit[g] = static_cast<int>(x % 3);
                x /= 3;
            }
            for (std::size_t i = 0; i < cands_.size(); ++i) {
                const auto& cl = cands_[i].clause;
                if (std::all_of(cl.begin(), cl.end(),
                                [&](Var v) { return digit[v / 3] == static_cast<int>(v % 3); })) {
                    containing_[e].push_back(i);
                    cands_[i].members.push_back(e);
                }
            }
        }
        cover_.assign(elements_, 0);
    }

    HittingSetResult run()
    {
        best_ = cands_.size() + 1;
        uncovered_ = elements_;
        dfs();
        HittingSetResult r;
        r.size = best_;
        for (auto i : best_set_)
            r.clauses.push_back(cands_[i].clause);
        r.nodes = nodes_;
        return r;
    }

private:
    struct Cand {
        std::array<Var, 3> clause{};
        std::vector<std::uint64_t> members;
    };

    std::size_t gain(std::size_t i) const
    {
        std::size_t g = 0;
        for (auto e : cands_[i].members)
            g += cover_[e] == 0;
        return g;
    }

    void apply(std::size_t i, int delta)
    {
        for (auto e : cands_[i].members) {
            if (delta > 0 && cover_[e]++ == 0)
                --uncovered_;
            if (delta < 0 && --cover_[e] == 0)
                ++uncovered_;
        }
    }

    // Returns true once the global lower bound is met.
    bool dfs()
    {
        if (++nodes_ > budget_)
            throw std::runtime_error("hitting set search exceeded its node budget");
        if (uncovered_ == 0) {
            if (chosen_.size() < best_) {
                best_ = chosen_.size();
                best_set_ = chosen_;
            }
            return best_ * per_ == elements_;
        }
        if (chosen_.size() + (uncovered_ + per_ - 1) / per_ >= best_)
            return false;
        std::uint64_t e = 0;
        while (cover_[e] != 0)
            ++e;
        std::vector<std::pair<std::size_t, std::size_t>> order;
        for (auto i : containing_[e])
            order.emplace_back(gain(i), i);
        std::stable_sort(order.begin(), order.end(), [](auto a, auto b) { return a.first > b.first; });
        for (auto [g, i] : order) {
            chosen_.push_back(i);
            apply(i, +1);
            bool done = dfs();
            apply(i, -1);
            chosen_.pop_back();
            if (done)
                return true;
        }
        return false;
    }

    std::size_t k_;
    std::uint64_t budget_;
    std::uint64_t elements_;
    std::uint64_t per_ = 1;
    std::vector<Cand> cands_;
    std::vector<std::vector<std::size_t>> containing_;
    std::vector<std::uint32_t> cover_;
    std::uint64_t uncovered_ = 0;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> best_set_;
    std::size_t best_ = 0;
    std::uint64_t nodes_ = 0;
};

} // namespace

std::optional<HittingSetResult> min_transversal_hitting_set(std::size_t n, std::uint64_t node_budget)
{
    if (n == 0 || n % 3 != 0)
        throw std::invalid_argument("hitting set needs n a positive multiple of 3");
    const std::size_t k = n / 3;
    if (k < 3)
        return std::nullopt;
    if (k > 6)
        throw std::invalid_argument("hitting set search is limited to n <= 18");
    return HittingSearch(k, node_budget).run();
}

// ---------------------------------------------------------------------------

bool admissible_n(const Profile& profile, std::size_t n)
{
    return n >= 3 && (profile.first * n) % 3 == 0 && (profile.second * n) % 3 == 0;
}

std::size_t bound_min_n(const Profile& profile)
{
    // With one negated appearance the instance has the canonical shape, and
    // k n < 81 guarantees a model.
    if (profile.second == 1 && profile.first > 0)
        return (81 + profile.first - 1) / profile.first;
    return 0;
}

namespace {

using Triple = std::array<Var, 3>;
using TripleList = std::vector<Triple>;

/// Every non-decreasing list of triples a < b < c in which variable v is
/// used exactly degree[v] times. Stops when `emit` returns false; returns
/// false in that case.
class TripleEnumerator {
public:
    TripleEnumerator(std::vector<std::size_t> degree, bool allow_repeats)
        : degree_(std::move(degree)), repeats_(allow_repeats)
    {
    }

    bool run(const std::function<bool(const TripleList&)>& emit)
    {
        emit_ = &emit;
        return step();
    }

private:
    bool step()
    {
        Var first = 0;
        while (first < degree_.size() && degree_[first] == 0)
            ++first;
        if (first == degree_.size())
            return (*emit_)(list_);
        --degree_[first];
        bool keep = true;
        for (Var b = first + 1; keep && b < degree_.size(); ++b) {
            if (degree_[b] == 0)
                continue;
            --degree_[b];
            for (Var c = b + 1; keep && c < degree_.size(); ++c) {
                if (degree_[c] == 0)
                    continue;
                Triple t{first, b, c};
                if (!list_.empty()) {
                    if (t < list_.back() || (!repeats_ && t == list_.back()))
                        continue;
                }
                --degree_[c];
                list_.push_back(t);
                keep = step();
                list_.pop_back();
                ++degree_[c];
            }
            ++degree_[b];
        }
        ++degree_[first];
        return keep;
    }

    std::vector<std::size_t> degree_;
    bool repeats_;
    TripleList list_;
    const std::function<bool(const TripleList&)>* emit_ = nullptr;
};

TripleList relabel(const TripleList& list, const std::vector<Var>& perm)
{
    TripleList out;
    out.reserve(list.size());
    for (const auto& t : list) {
        Triple r{perm[t[0]], perm[t[1]], perm[t[2]]};
        std::sort(r.begin(), r.end());
        out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool clauses_distinct(const CnfInstance& inst)
{
    std::vector<std::vector<Literal>> lits;
    for (const auto& c : inst.clauses())
        lits.push_back(c.literals());
    std::sort(lits.begin(), lits.end());
    return std::adjacent_find(lits.begin(), lits.end()) == lits.end();
}

bool has_repeat(const TripleList& list)
{
    return std::adjacent_find(list.begin(), list.end()) != list.end();
}

CnfInstance assemble(std::size_t n, const TripleList& positive, const TripleList& negative)
{
    std::vector<Clause> cls;
    for (const auto& t : positive)
        cls.push_back(Clause{pos(t[0]), pos(t[1]), pos(t[2])});
    for (const auto& t : negative)
        cls.push_back(Clause{neg(t[0]), neg(t[1]), neg(t[2])});
    return CnfInstance{n, std::move(cls)};
}

std::vector<Var> transposition(std::size_t n, Var a, Var b)
{
    std::vector<Var> p(n);
    for (Var v = 0; v < n; ++v)
        p[v] = v;
    std::swap(p[a], p[b]);
    return p;
}

/// Relabelings checked by the lexicographic pruning. For (2,2) every
/// transposition; with one negated appearance only the maps that fix the
/// negative groups {0,1,2}, {3,4,5}, ...
std::vector<std::vector<Var>> pruning_maps(std::size_t n, bool fixed_groups)
{
    std::vector<std::vector<Var>> maps;
    if (!fixed_groups) {
        for (Var a = 0; a < n; ++a)
            for (Var b = a + 1; b < n; ++b)
                maps.push_back(transposition(n, a, b));
        return maps;
    }
    for (Var g = 0; g + 2 < n; g += 3) {
        maps.push_back(transposition(n, g, g + 1));
        maps.push_back(transposition(n, g + 1, g + 2));
        if (g + 5 < n) {
            std::vector<Var> p(n);
            for (Var v = 0; v < n; ++v)
                p[v] = v;
            for (Var i = 0; i < 3; ++i)
                std::swap(p[g + i], p[g + 3 + i]);
            maps.push_back(p);
        }
    }
    return maps;
}

struct Shared {
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::optional<std::pair<std::uint64_t, CnfInstance>> hit; // smallest index wins
    std::atomic<std::uint64_t> candidates{0};
    std::atomic<std::uint64_t> distinct{0};
    std::atomic<std::uint64_t> satisfiable{0};
    std::atomic<bool> timed_out{false};
    std::optional<std::chrono::steady_clock::time_point> deadline;

    bool expired()
    {
        if (deadline && std::chrono::steady_clock::now() > *deadline) {
            timed_out = true;
            stop = true;
        }
        return stop;
    }

    void record_hit(std::uint64_t index, CnfInstance inst)
    {
        std::lock_guard lock(mu);
        if (!hit || index < hit->first)
            hit.emplace(index, std::move(inst));
        stop = true;
    }
};

/// Solves one candidate. Returns false when the search must stop.
bool examine(Shared& sh, const SearchOptions& opts, std::uint64_t index, std::size_t n, const TripleList& positive,
             const TripleList& negative)
{
    auto inst = assemble(n, positive, negative);
    if (opts.on_candidate) {
        std::lock_guard lock(sh.mu);
        opts.on_candidate(inst);
    }
    OracleLimits lim;
    auto r = solve_dpll(inst, lim);
    ++sh.candidates;
    if (!has_repeat(positive) && !has_repeat(negative))
        ++sh.distinct;
    if (r.sat()) {
        ++sh.satisfiable;
        return !sh.expired();
    }
    sh.record_hit(index, std::move(inst));
    return false;
}

void run_workers(unsigned workers, const std::function<void(unsigned, unsigned)>& body)
{
    if (workers <= 1) {
        body(0, 1);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(body, w, workers);
    for (auto& t : pool)
        t.join();
}

/// Returns true when the candidate space for this n was exhausted.
bool exhaustive_phase(Shared& sh, const SearchOptions& opts, std::size_t n)
{
    const auto [p, q] = opts.profile;
    const bool fixed_groups = q == 1;
    const auto maps = pruning_maps(n, fixed_groups);
    std::atomic<bool> exhausted{true};

    run_workers(opts.workers, [&](unsigned w, unsigned count) {
        std::uint64_t index = 0;
        std::uint64_t mine = 0;
        bool complete = true;
        auto own = [&]() { return index++ % count == w; };
        auto over_budget = [&]() {
            if (mine >= (opts.max_candidates + count - 1 - w) / count) {
                complete = false;
                return true;
            }
            return false;
        };

        if (fixed_groups) {
            TripleList negative;
            for (Var g = 0; g + 2 < n; g += 3)
                negative.push_back({g, g + 1, g + 2});
            TripleEnumerator pos_enum(std::vector<std::size_t>(n, p), opts.allow_repeated_clauses);
            pos_enum.run([&](const TripleList& positive) {
                if (!own())
                    return true;
                for (const auto& m : maps)
                    if (relabel(positive, m) < positive)
                        return true;
                if (over_budget())
                    return false;
                ++mine;
                return examine(sh, opts, index - 1, n, positive, negative);
            });
        } else {
            TripleEnumerator pos_enum(std::vector<std::size_t>(n, p), opts.allow_repeated_clauses);
            pos_enum.run([&](const TripleList& positive) {
                std::vector<const std::vector<Var>*> stabilizer;
                for (const auto& m : maps) {
                    auto img = relabel(positive, m);
                    if (img < positive)
                        return true;
                    if (img == positive)
                        stabilizer.push_back(&m);
                }
                TripleEnumerator neg_enum(std::vector<std::size_t>(n, q), opts.allow_repeated_clauses);
                return neg_enum.run([&](const TripleList& negative) {
                    if (!own())
                        return true;
                    // Complementing every variable swaps the two halves.
                    if (p == q && negative < positive)
                        return true;
                    for (const auto* m : stabilizer)
                        if (relabel(negative, *m) < negative)
                            return true;
                    if (over_budget())
                        return false;
                    ++mine;
                    return examine(sh, opts, index - 1, n, positive, negative);
                });
            });
        }
        if (!complete || sh.stop)
            exhausted = false;
    });
    return exhausted && !sh.hit && !sh.timed_out;
}

void random_phase(Shared& sh, const SearchOptions& opts, std::size_t n)
{
    const auto [p, q] = opts.profile;
    run_workers(opts.workers, [&](unsigned w, unsigned count) {
        Rng rng(opts.seed * 1'000'003 + n * 7919 + w);
        for (std::uint64_t i = w; i < opts.random_samples && !sh.stop; i += count) {
            auto inst = random_uniform_profile(rng, n, p, q, true);
            if (!inst)
                continue;
            if (opts.on_candidate) {
                std::lock_guard lock(sh.mu);
                opts.on_candidate(*inst);
            }
            auto r = solve_dpll(*inst);
            ++sh.candidates;
            bool distinct = clauses_distinct(*inst);
            if (distinct)
                ++sh.distinct;
            if (r.sat()) {
                ++sh.satisfiable;
                if (sh.expired())
                    return;
                continue;
            }
            sh.record_hit(i, std::move(*inst));
            return;
        }
    });
}

VerificationReport certify_find(const CnfInstance& inst, const Profile& profile)
{
    const std::string subject = "search find";
    std::vector<std::string> notes;
    auto spec = validate(inst, VariantSpec::exact(profile.first, profile.second));
    if (!spec)
        return VerificationReport::fail(subject, "profile check: " + spec.reason, spec.witness);
    notes.push_back("passes monotone (" + std::to_string(profile.first) + "," + std::to_string(profile.second) +
                    ") profile check");
    auto d = solve_dpll(inst);
    if (!d.unsat())
        return VerificationReport::fail(subject, "DPLL does not confirm unsat");
    notes.emplace_back("UNSAT (dpll)");
    if (inst.num_vars() <= enumeration_cap_from_env()) {
        if (!solve_exhaustive(inst).unsat())
            return VerificationReport::fail(subject, "exhaustive oracle disagrees");
        notes.emplace_back("UNSAT (exhaustive)");
    } else if (profile.second == 1 && inst.num_vars() / 3 <= TransversalOptions{}.group_cap) {
        if (check_sat_via_transversal(inst))
            return VerificationReport::fail(subject, "transversal check disagrees");
        notes.emplace_back("UNSAT (transversal check)");
    } else if (inst == mon51()) {
        auto comp = check_mon51_by_enforcers();
        if (!comp)
            return VerificationReport::fail(subject, comp.reason);
        notes.emplace_back("UNSAT (enforcers + residual enumeration)");
    } else {
        notes.emplace_back("second solve path unavailable at this size");
    }
    return VerificationReport::pass(subject, std::move(notes));
}

} // namespace

SearchResult search_unsat(const SearchOptions& opts)
{
    const auto profile = opts.profile;
    const bool supported = profile == Profile{2, 2} || (profile.second == 1 && profile.first >= 3 && profile.first <= 5);
    if (!supported)
        throw std::invalid_argument("search-unsat supports the profiles (2,2), (3,1), (4,1) and (5,1)");

    SearchResult result;
    Shared sh;
    if (opts.timeout)
        sh.deadline = std::chrono::steady_clock::now() + *opts.timeout;

    auto push = [&](JournalEntry e) {
        result.journal.push_back(e);
        if (opts.on_progress)
            opts.on_progress(result.journal.back());
    };

    if (profile == Profile{5, 1} && opts.seed_from_gadgets) {
        auto inst = mon51();
        JournalEntry e{inst.num_vars(), "seed", 1, 1, 0, false, "enforcer construction"};
        auto r = solve_dpll(inst);
        if (r.unsat()) {
            push(e);
            result.found = inst;
            result.certificate = certify_find(inst, profile);
            return result;
        }
        e.satisfiable = 1;
        push(e);
    }

    bool contiguous = true;
    const std::size_t lower_bound = bound_min_n(profile);
    for (std::size_t n = std::max<std::size_t>(opts.min_n, 3); n <= opts.max_n; ++n) {
        if (!admissible_n(profile, n))
            continue;
        JournalEntry e;
        e.n = n;
        if (opts.respect_bounds && n < lower_bound) {
            e.phase = "bound";
            e.exhausted = true;
            e.note = "satisfiable by the 81/n bound (n < " + std::to_string(lower_bound) + ")";
            push(e);
            if (contiguous)
                result.exhausted_through = n;
            continue;
        }

        sh.candidates = 0;
        sh.distinct = 0;
        sh.satisfiable = 0;
        e.phase = "exhaustive";
        if (opts.max_candidates > 0)
            e.exhausted = exhaustive_phase(sh, opts, n);
        if (!e.exhausted && !sh.stop && opts.random_samples > 0) {
            e.phase = opts.max_candidates > 0 ? "exhaustive+random" : "random";
            random_phase(sh, opts, n);
        }
        e.candidates = sh.candidates;
        e.distinct = sh.distinct;
        e.satisfiable = sh.satisfiable;
        if (sh.hit)
            e.note = "unsatisfiable candidate found";
        else if (sh.timed_out)
            e.note = "timed out";
        else if (e.exhausted)
            e.note = "all canonical candidates satisfiable";
        else
            e.note = "budget reached; no claim for this n";
        push(e);

        if (!e.exhausted)
            contiguous = false;
        if (contiguous)
            result.exhausted_through = n;
        if (sh.stop)
            break;
    }

    result.timed_out = sh.timed_out;
    if (sh.hit) {
        result.found = sh.hit->second;
        result.certificate = certify_find(*result.found, profile);
    }
    return result;
}

} // namespace rsat
