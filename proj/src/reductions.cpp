#include "rsat/reductions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace rsat {

namespace {

const std::vector<ReductionRow>& rows()
{
    static const std::vector<ReductionRow> r{
        {ReductionId::r1, "Monotone NAE-3-Sat", "Monotone NAE-3-Sat-E4", Mode::nae, Mode::nae},
        {ReductionId::r2, "NAE-3-Sat*", "Monotone NAE-3-Sat-E4", Mode::nae, Mode::nae},
        {ReductionId::r3, "Monotone NAE-3-Sat-E4", "linear Monotone NAE-3-Sat-E4", Mode::nae, Mode::nae},
        {ReductionId::r4, "linear Monotone NAE-3-Sat-E4", "Monotone 3-Sat-(4,4)", Mode::nae, Mode::sat},
        {ReductionId::r5, "3-Sat-(2,2)", "Monotone 3-Sat-(3,3)", Mode::sat, Mode::sat},
        {ReductionId::r6, "Monotone 3-Sat-(k,k)", "Monotone 3-Sat-(k+1,k+1)", Mode::sat, Mode::sat},
        {ReductionId::r7, "3-Sat-(2,2)", "Monotone 3-Sat-(5,1)", Mode::sat, Mode::sat},
        {ReductionId::r8, "Monotone 3-Sat-(k,1)", "Monotone 3-Sat-(k+1,1)", Mode::sat, Mode::sat},
        {ReductionId::r9, "Monotone 3-Sat-(3,3)", "Monotone 3-Sat*-(2,2)", Mode::sat, Mode::sat},
        {ReductionId::r10, "Monotone 3-Sat-(3,3)", "Monotone 3-Sat-(2,2)", Mode::sat, Mode::sat},
        {ReductionId::r11, "3-Sat-(2,2)", "Monotone 3-Sat-(3,2)", Mode::sat, Mode::sat},
        {ReductionId::r12, "Monotone 3-Sat-(3,2)", "Monotone 3-Sat-(4,2)", Mode::sat, Mode::sat},
        {ReductionId::r13, "3-Sat-(2,2)", "Monotone 3-Sat-E4 with profiles (3,1)/(1,3)", Mode::sat, Mode::sat},
        {ReductionId::r14, "Monotone 3-Sat-E4 with profiles (3,1)/(1,3)", "3-Sat-(3,1)", Mode::sat, Mode::sat},
    };
    return r;
}

std::size_t require_k(ReductionId id, const ReductionParams& params)
{
    if (!params.k || *params.k == 0)
        throw std::invalid_argument(to_string(id) + " needs a positive k");
    return *params.k;
}

VariantSpec profile_spec(std::size_t p, std::size_t q, Monotonicity m) { return VariantSpec::exact(p, q, m); }

VariantSpec e4_nae(bool linear)
{
    VariantSpec s;
    s.monotonicity = Monotonicity::nae_monotone;
    s.total_appearances = 4;
    if (linear)
        s.linearity = Linearity::linear;
    return s;
}

VariantSpec e4_choice()
{
    VariantSpec s;
    s.monotonicity = Monotonicity::sat_monotone;
    s.total_appearances = 4;
    s.allowed_profiles = {{3, 1}, {1, 3}};
    return s;
}

/// Accumulates output clauses, variable provenance and the gadget log.
class Builder {
public:
    explicit Builder(ReductionId id, const CnfInstance& input)
    {
        cert_.id = id;
        cert_.input = input;
    }

    Var mapped(Var input, bool negated, std::size_t copy = 0)
    {
        Var v = alloc_.fresh();
        back_.resize(alloc_.next());
        back_[v] = BackRef{input, negated, copy};
        return v;
    }

    Var fresh(std::string label)
    {
        Var v = alloc_.fresh();
        back_.resize(alloc_.next());
        cert_.gadget_log.push_back(LogEntry{std::move(label), std::nullopt, {}, {v}});
        return v;
    }

    std::vector<Var> fresh_block(std::string label, std::size_t count)
    {
        auto vs = alloc_.fresh(count);
        back_.resize(alloc_.next());
        cert_.gadget_log.push_back(LogEntry{std::move(label), std::nullopt, {}, vs});
        return vs;
    }

    void gadget(GadgetKind kind, std::vector<Var> boundary)
    {
        auto g = build_gadget(kind, boundary, alloc_);
        back_.resize(alloc_.next());
        clauses_.insert(clauses_.end(), g.clauses.begin(), g.clauses.end());
        cert_.gadget_log.push_back(LogEntry{to_string(kind), kind, std::move(boundary), std::move(g.aux)});
    }

    void add(Clause c) { clauses_.push_back(std::move(c)); }
    void add(std::initializer_list<Literal> lits) { clauses_.emplace_back(lits); }
    void add(std::vector<Literal> lits, Flavor f) { clauses_.emplace_back(std::move(lits), f); }

    [[nodiscard]] std::size_t num_vars() const { return alloc_.next(); }
    [[nodiscard]] const std::vector<Clause>& clauses() const { return clauses_; }

    ReductionCertificate finish(Mode mode)
    {
        back_.resize(alloc_.next());
        cert_.output = CnfInstance{alloc_.next(), std::move(clauses_), mode};
        cert_.back_map = std::move(back_);
        return std::move(cert_);
    }

private:
    ReductionCertificate cert_;
    FreshAllocator alloc_;
    std::vector<Clause> clauses_;
    std::vector<std::optional<BackRef>> back_;
};

/// Occurrences of each variable in clause order: (clause, position).
struct Occurrences {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> positive, negative, all;
};

Occurrences occurrences(const CnfInstance& inst)
{
    Occurrences o;
    o.positive.resize(inst.num_vars());
    o.negative.resize(inst.num_vars());
    o.all.resize(inst.num_vars());
    for (std::size_t c = 0; c < inst.num_clauses(); ++c) {
        const auto& lits = inst.clause(c).literals();
        for (std::size_t p = 0; p < lits.size(); ++p) {
            (lits[p].negated() ? o.negative : o.positive)[lits[p].var()].emplace_back(c, p);
            o.all[lits[p].var()].emplace_back(c, p);
        }
    }
    return o;
}

using Slots = std::vector<std::vector<Literal>>;

Slots empty_slots(const CnfInstance& inst)
{
    Slots s;
    for (const auto& c : inst.clauses())
        s.emplace_back(c.size());
    return s;
}

void emit_slots(Builder& b, const Slots& slots, Flavor f = Flavor::set)
{
    for (const auto& lits : slots)
        b.add(lits, f);
}

/// Splits each variable into x_{i,1} (stands for the negated appearances,
/// holds the complement) and x_{i,2} (unnegated appearances) and rewrites
/// the clauses without negations. Returns the pairs.
std::vector<std::pair<Var, Var>> split_two_ways(Builder& b, const CnfInstance& in)
{
    std::vector<std::pair<Var, Var>> x(in.num_vars());
    for (Var i = 0; i < in.num_vars(); ++i) {
        Var x1 = b.mapped(i, true);
        Var x2 = b.mapped(i, false);
        x[i] = {x1, x2};
    }
    for (const auto& c : in.clauses()) {
        std::vector<Literal> lits;
        for (auto l : c)
            lits.push_back(pos(l.negated() ? x[l.var()].first : x[l.var()].second));
        b.add(std::move(lits), Flavor::set);
    }
    return x;
}

void require_multiple_of_three(ReductionId id, std::size_t n)
{
    if (n % 3 != 0)
        throw std::invalid_argument(to_string(id) + " needs the variable count to be a multiple of 3, got " +
                                    std::to_string(n));
}

ReductionCertificate r1(const CnfInstance& in)
{
    Builder b(ReductionId::r1, in);
    auto occ = occurrences(in);
    auto slots = empty_slots(in);
    std::vector<std::vector<Var>> copies(in.num_vars());
    for (Var i = 0; i < in.num_vars(); ++i)
        for (auto [c, p] : occ.all[i]) {
            Var v = b.mapped(i, false);
            copies[i].push_back(v);
            slots[c][p] = pos(v);
        }
    emit_slots(b, slots);
    for (Var i = 0; i < in.num_vars(); ++i) {
        const auto& x = copies[i];
        if (x.size() < 2)
            continue;
        b.gadget(GadgetKind::eq_ne, {x.back(), x.front()});
        for (std::size_t j = 0; j + 1 < x.size(); ++j)
            b.gadget(GadgetKind::eq_ne, {x[j], x[j + 1]});
    }
    // Pad every variable below four appearances with P1 gadgets; P1's own
    // variables already appear four times.
    const std::size_t before = b.num_vars();
    std::vector<std::size_t> count(before, 0);
    for (const auto& c : b.clauses())
        for (auto l : c)
            ++count[l.var()];
    for (Var v = 0; v < before; ++v) {
        if (count[v] > 4)
            throw std::logic_error("R1 produced a variable with " + std::to_string(count[v]) + " appearances");
        for (std::size_t t = count[v]; t < 4; ++t)
            b.gadget(GadgetKind::p1, {v});
    }
    return b.finish(Mode::nae);
}

ReductionCertificate r2(const CnfInstance& in)
{
    Builder b(ReductionId::r2, in);
    auto occ = occurrences(in);
    auto slots = empty_slots(in);
    std::vector<std::vector<Var>> copies(in.num_vars());
    std::vector<std::size_t> unnegated(in.num_vars());
    for (Var i = 0; i < in.num_vars(); ++i) {
        unnegated[i] = occ.positive[i].size();
        for (auto [c, p] : occ.positive[i]) {
            Var v = b.mapped(i, false);
            copies[i].push_back(v);
            slots[c][p] = pos(v);
        }
        for (auto [c, p] : occ.negative[i]) {
            Var v = b.mapped(i, true);
            copies[i].push_back(v);
            slots[c][p] = pos(v);
        }
    }
    emit_slots(b, slots);
    for (Var i = 0; i < in.num_vars(); ++i) {
        const auto& x = copies[i];
        const std::size_t a = x.size(), u = unnegated[i];
        if (a == 0)
            continue;
        for (std::size_t j = 0; j + 1 < u; ++j)
            b.gadget(GadgetKind::eq13, {x[j], x[j + 1]});
        for (std::size_t j = u; j + 1 < a; ++j)
            b.gadget(GadgetKind::eq13, {x[j], x[j + 1]});
        if (u == 0 || u == a) {
            b.gadget(GadgetKind::eq13, {x[a - 1], x[0]});
        } else {
            b.gadget(GadgetKind::ne9, {x[u - 1], x[u]});
            b.gadget(GadgetKind::ne9, {x[a - 1], x[0]});
        }
    }
    return b.finish(Mode::nae);
}

ReductionCertificate r3(const CnfInstance& in)
{
    Builder b(ReductionId::r3, in);
    auto occ = occurrences(in);
    auto slots = empty_slots(in);
    std::vector<std::vector<Var>> copies(in.num_vars());
    for (Var i = 0; i < in.num_vars(); ++i)
        for (auto [c, p] : occ.all[i]) {
            Var v = b.mapped(i, false);
            copies[i].push_back(v);
            slots[c][p] = pos(v);
        }
    emit_slots(b, slots);
    for (Var i = 0; i < in.num_vars(); ++i)
        b.gadget(GadgetKind::eq4l, copies[i]);
    return b.finish(Mode::nae);
}

ReductionCertificate r4(const CnfInstance& in)
{
    Builder b(ReductionId::r4, in);
    for (Var i = 0; i < in.num_vars(); ++i)
        b.mapped(i, false);
    for (const auto& c : in.clauses()) {
        b.add(c);
        b.add(c.flipped());
    }
    return b.finish(Mode::sat);
}

ReductionCertificate r5(const CnfInstance& in)
{
    require_multiple_of_three(ReductionId::r5, in.num_vars());
    Builder b(ReductionId::r5, in);
    auto x = split_two_ways(b, in);
    for (auto [x1, x2] : x)
        b.gadget(GadgetKind::a, {x1, x2});
    for (std::size_t g = 0; g < x.size(); g += 3) {
        Var y = b.fresh("y");
        b.gadget(GadgetKind::s_bar, {y, y, y});
        for (std::size_t i = g; i < g + 3; ++i)
            b.add({pos(x[i].first), pos(x[i].second), pos(y)});
    }
    return b.finish(Mode::sat);
}

/// k+1 disjoint copies of the input; copy i of variable j is returned as
/// [i][j].
std::vector<std::vector<Var>> disjoint_copies(Builder& b, const CnfInstance& in, std::size_t copies)
{
    std::vector<std::vector<Var>> x(copies, std::vector<Var>(in.num_vars()));
    for (std::size_t i = 0; i < copies; ++i) {
        for (Var j = 0; j < in.num_vars(); ++j)
            x[i][j] = b.mapped(j, false, i);
        for (const auto& c : in.clauses()) {
            std::vector<Literal> lits;
            for (auto l : c)
                lits.emplace_back(x[i][l.var()], l.negated());
            b.add(Clause{std::move(lits), c.flavor()});
        }
    }
    return x;
}

ReductionCertificate r6(const CnfInstance& in, std::size_t k)
{
    Builder b(ReductionId::r6, in);
    auto x = disjoint_copies(b, in, k + 1);
    for (Var j = 0; j < in.num_vars(); ++j) {
        Var y = b.fresh("y");
        Var z = b.fresh("z");
        for (std::size_t i = 0; i <= k; ++i) {
            b.add({pos(x[i][j]), pos(y), pos(z)});
            b.add({neg(x[i][j]), neg(y), neg(z)});
        }
    }
    return b.finish(Mode::sat);
}

ReductionCertificate r7(const CnfInstance& in, bool pad_with_d)
{
    require_multiple_of_three(ReductionId::r7, in.num_vars());
    Builder b(ReductionId::r7, in);
    auto x = split_two_ways(b, in);
    std::vector<Var> y;
    for (auto [x1, x2] : x) {
        b.gadget(GadgetKind::d, {x1, x1, x1, x2, x2, x2});
        Var yi = b.fresh("y");
        y.push_back(yi);
        b.add({neg(x1), neg(x2), neg(yi)});
        b.gadget(GadgetKind::f, {yi});
    }
    const std::size_t n = y.size(), q = n / 3;
    if (q == 0)
        return b.finish(Mode::sat);
    if (q == 1 || pad_with_d) {
        for (std::size_t t = 0; t < q; ++t)
            b.gadget(GadgetKind::d, {y[3 * t], y[3 * t], y[3 * t + 1], y[3 * t + 1], y[3 * t + 2], y[3 * t + 2]});
        return b.finish(Mode::sat);
    }
    std::vector<Clause> pad;
    for (std::size_t t = 0; t < q; ++t)
        pad.push_back(Clause{pos(y[3 * t]), pos(y[3 * t + 1]), pos(y[3 * t + 2])});
    for (std::size_t t = 0; t + 1 < q; ++t)
        pad.push_back(Clause{pos(y[3 * t + 1]), pos(y[3 * t + 2]), pos(y[3 * t + 3])});
    pad.push_back(Clause{pos(y[n - 2]), pos(y[n - 1]), pos(y[0])});
    for (std::size_t s = 0; s < pad.size(); ++s)
        for (std::size_t t = s + 1; t < pad.size(); ++t)
            if (pad[s] == pad[t])
                throw std::logic_error("R7 padding clauses are not pairwise distinct");
    for (auto& c : pad)
        b.add(std::move(c));
    return b.finish(Mode::sat);
}

ReductionCertificate r8(const CnfInstance& in, std::size_t k)
{
    require_multiple_of_three(ReductionId::r8, in.num_vars());
    Builder b(ReductionId::r8, in);
    auto x = disjoint_copies(b, in, k + 1);
    const std::size_t n = in.num_vars();
    std::vector<Var> y(n), z(n);
    for (Var j = 0; j < n; ++j) {
        y[j] = b.fresh("y");
        z[j] = b.fresh("z");
        for (std::size_t i = 0; i <= k; ++i)
            b.add({pos(x[i][j]), pos(y[j]), pos(z[j])});
    }
    for (std::size_t t = 0; t < n / 3; ++t) {
        b.add({neg(y[3 * t]), neg(y[3 * t + 1]), neg(y[3 * t + 2])});
        b.add({neg(z[3 * t]), neg(z[3 * t + 1]), neg(z[3 * t + 2])});
    }
    return b.finish(Mode::sat);
}

/// Six copies per variable: unnegated appearances take slots 1, 3, 5 and
/// negated ones slots 2, 4, 6 (0-based 0, 2, 4 and 1, 3, 5).
std::vector<std::array<Var, 6>> split_six_ways(Builder& b, const CnfInstance& in, std::size_t copy, Slots& slots,
                                               bool keep_negations)
{
    auto occ = occurrences(in);
    std::vector<std::array<Var, 6>> x(in.num_vars());
    for (Var i = 0; i < in.num_vars(); ++i) {
        if (occ.positive[i].size() != 3 || occ.negative[i].size() != 3)
            throw std::invalid_argument("variable " + std::to_string(i + 1) + " is not (3,3)");
        for (std::size_t s = 0; s < 6; ++s)
            x[i][s] = b.mapped(i, !keep_negations && s % 2 == 1, copy);
        for (std::size_t t = 0; t < 3; ++t) {
            auto [pc, pp] = occ.positive[i][t];
            slots[pc][pp] = pos(x[i][2 * t]);
            auto [nc, np] = occ.negative[i][t];
            slots[nc][np] = Literal{x[i][2 * t + 1], keep_negations};
        }
    }
    return x;
}

ReductionCertificate r9(const CnfInstance& in)
{
    Builder b(ReductionId::r9, in);
    auto slots = empty_slots(in);
    auto x = split_six_ways(b, in, 0, slots, true);
    emit_slots(b, slots, Flavor::multiset);
    for (const auto& xi : x)
        b.gadget(GadgetKind::star22, {xi.begin(), xi.end()});
    return b.finish(Mode::sat);
}

ReductionCertificate r10(const CnfInstance& in, const ReductionParams& params)
{
    if (!params.m_source)
        throw std::invalid_argument("R10 needs an unsatisfiable monotone (2,2) parameter instance");
    const auto& src = *params.m_source;
    VariantSpec src_spec = VariantSpec::exact(2, 2);
    src_spec.duplicates_allowed = params.allow_star_source;
    if (auto r = validate(src, src_spec); !r.ok)
        throw std::invalid_argument("R10 parameter is not " + src_spec.to_string() + ": " + r.reason);
    if (src.mode() != Mode::sat)
        throw std::invalid_argument("R10 parameter must be in sat mode");
    auto split = split_forced(src, Engine::dpll, params.limits);
    const std::size_t q = split.excluded.size();
    if (q == 0)
        throw std::invalid_argument("R10 parameter has no excluded clauses");

    Builder b(ReductionId::r10, in);
    const std::size_t n = in.num_vars();
    std::vector<Clause> pos2, neg2;
    for (std::size_t k = 0; k < q; ++k) {
        auto slots = empty_slots(in);
        auto x = split_six_ways(b, in, k, slots, false);
        emit_slots(b, slots);
        for (const auto& xi : x) {
            for (std::size_t s = 0; s < 6; s += 2)
                pos2.push_back(Clause{pos(xi[s]), pos(xi[s + 1])});
            for (std::size_t s = 1; s < 6; s += 2)
                neg2.push_back(Clause{neg(xi[s]), neg(xi[(s + 1) % 6])});
            b.add({neg(xi[0]), neg(xi[1]), neg(xi[5])});
            b.add({neg(xi[2]), neg(xi[3]), neg(xi[4])});
        }
    }

    // n instances of the M gadget: the satisfiable core over V' plus its
    // flipped copy over V''; forced literals of both halves pad the 2-clauses.
    const Flavor mflavor = params.allow_star_source ? Flavor::multiset : Flavor::set;
    std::vector<Literal> lplus, lminus;
    for (std::size_t g = 0; g < n; ++g) {
        auto v1 = b.fresh_block("M", src.num_vars());
        auto v2 = b.fresh_block("M", src.num_vars());
        for (auto ci : split.core) {
            std::vector<Literal> a, f;
            for (auto l : src.clause(ci)) {
                a.emplace_back(v1[l.var()], l.negated());
                f.emplace_back(v2[l.var()], !l.negated());
            }
            b.add(std::move(a), mflavor);
            b.add(std::move(f), mflavor);
        }
        for (auto ci : split.excluded)
            for (auto l : src.clause(ci)) {
                Literal first{v1[l.var()], l.negated()};
                Literal second{v2[l.var()], !l.negated()};
                (first.negated() ? lminus : lplus).push_back(first);
                (second.negated() ? lminus : lplus).push_back(second);
            }
    }
    if (lplus.size() != pos2.size() || lminus.size() != neg2.size())
        throw std::logic_error("R10 padding literal counts do not match the 2-clauses");
    for (std::size_t t = 0; t < pos2.size(); ++t) {
        auto lits = pos2[t].literals();
        lits.push_back(lplus[t]);
        b.add(std::move(lits), Flavor::set);
    }
    for (std::size_t t = 0; t < neg2.size(); ++t) {
        auto lits = neg2[t].literals();
        lits.push_back(lminus[t]);
        b.add(std::move(lits), Flavor::set);
    }
    return b.finish(Mode::sat);
}

ReductionCertificate r11(const CnfInstance& in)
{
    require_multiple_of_three(ReductionId::r11, in.num_vars());
    Builder b(ReductionId::r11, in);
    auto x = split_two_ways(b, in);
    for (auto [x1, x2] : x) {
        Var y = b.fresh("y");
        b.add({neg(x1), neg(x2), neg(y)});
        b.gadget(GadgetKind::g, {y, y, y});
        b.gadget(GadgetKind::h, {y, x1, x2});
    }
    for (std::size_t j = 0; j < x.size() / 3; ++j) {
        Var u = b.fresh("u");
        Var v = b.fresh("v");
        Var w = b.fresh("w");
        b.gadget(GadgetKind::h, {u, v, w});
        b.gadget(GadgetKind::h, {u, v, w});
        b.gadget(GadgetKind::g, {v, v, v});
        b.gadget(GadgetKind::g, {w, w, w});
        for (std::size_t i = 3 * j; i < 3 * j + 3; ++i)
            b.add({pos(x[i].first), pos(x[i].second), pos(u)});
    }
    return b.finish(Mode::sat);
}

ReductionCertificate r12(const CnfInstance& in)
{
    require_multiple_of_three(ReductionId::r12, in.num_vars());
    Builder b(ReductionId::r12, in);
    for (Var i = 0; i < in.num_vars(); ++i)
        b.mapped(i, false);
    for (const auto& c : in.clauses())
        b.add(c);
    for (Var i = 0; i < in.num_vars(); i += 3)
        b.gadget(GadgetKind::inc32, {i, i + 1, i + 2});
    return b.finish(Mode::sat);
}

ReductionCertificate r13(const CnfInstance& in)
{
    Builder b(ReductionId::r13, in);
    auto x = split_two_ways(b, in);
    for (auto [x1, x2] : x) {
        Var y = b.fresh("y");
        Var z = b.fresh("z");
        b.add({pos(x1), pos(x2), pos(y)});
        b.add({neg(x1), neg(x2), neg(z)});
        b.gadget(GadgetKind::b_bar, {y, y, y});
        b.gadget(GadgetKind::b, {z, z, z});
    }
    return b.finish(Mode::sat);
}

ReductionCertificate r14(const CnfInstance& in)
{
    Builder b(ReductionId::r14, in);
    auto prof = appearance_profile(in);
    std::vector<Var> renamed;
    for (Var i = 0; i < in.num_vars(); ++i) {
        bool flip = prof[i].positive == 1 && prof[i].negative == 3;
        if (flip)
            renamed.push_back(i);
        b.mapped(i, flip);
    }
    auto renamed_inst = negate_rename(in, renamed);
    for (const auto& c : renamed_inst.clauses())
        b.add(c);
    return b.finish(Mode::sat);
}

} // namespace

std::string to_string(ReductionId id) { return "R" + std::to_string(static_cast<int>(id) + 1); }

std::optional<ReductionId> reduction_from_name(std::string_view name)
{
    for (auto id : all_reductions()) {
        auto s = to_string(id);
        if (name.size() == s.size() && std::toupper(static_cast<unsigned char>(name[0])) == 'R' &&
            name.substr(1) == std::string_view(s).substr(1))
            return id;
    }
    return std::nullopt;
}

const std::vector<ReductionId>& all_reductions()
{
    static const std::vector<ReductionId> ids = [] {
        std::vector<ReductionId> v;
        for (const auto& r : rows())
            v.push_back(r.id);
        return v;
    }();
    return ids;
}

const ReductionRow& reduction_row(ReductionId id) { return rows().at(static_cast<std::size_t>(id)); }

VariantSpec input_spec(ReductionId id, const ReductionParams& params)
{
    switch (id) {
    case ReductionId::r1: {
        VariantSpec s;
        s.monotonicity = Monotonicity::nae_monotone;
        return s;
    }
    case ReductionId::r2: {
        VariantSpec s;
        s.duplicates_allowed = true;
        return s;
    }
    case ReductionId::r3:
        return e4_nae(false);
    case ReductionId::r4:
        return e4_nae(true);
    case ReductionId::r5:
    case ReductionId::r7:
    case ReductionId::r11:
    case ReductionId::r13:
        return profile_spec(2, 2, Monotonicity::none);
    case ReductionId::r6: {
        auto k = require_k(id, params);
        return profile_spec(k, k, Monotonicity::sat_monotone);
    }
    case ReductionId::r8:
        return profile_spec(require_k(id, params), 1, Monotonicity::sat_monotone);
    case ReductionId::r9:
    case ReductionId::r10:
        return profile_spec(3, 3, Monotonicity::sat_monotone);
    case ReductionId::r12:
        return profile_spec(3, 2, Monotonicity::sat_monotone);
    case ReductionId::r14:
        return e4_choice();
    }
    throw std::invalid_argument("unknown reduction");
}

VariantSpec output_spec(ReductionId id, const ReductionParams& params)
{
    switch (id) {
    case ReductionId::r1:
    case ReductionId::r2:
        return e4_nae(false);
    case ReductionId::r3:
        return e4_nae(true);
    case ReductionId::r4:
        return profile_spec(4, 4, Monotonicity::sat_monotone);
    case ReductionId::r5:
        return profile_spec(3, 3, Monotonicity::sat_monotone);
    case ReductionId::r6: {
        auto k = require_k(id, params);
        return profile_spec(k + 1, k + 1, Monotonicity::sat_monotone);
    }
    case ReductionId::r7:
        return profile_spec(5, 1, Monotonicity::sat_monotone);
    case ReductionId::r8:
        return profile_spec(require_k(id, params) + 1, 1, Monotonicity::sat_monotone);
    case ReductionId::r9: {
        auto s = profile_spec(2, 2, Monotonicity::sat_monotone);
        s.duplicates_allowed = true;
        return s;
    }
    case ReductionId::r10: {
        auto s = profile_spec(2, 2, Monotonicity::sat_monotone);
        s.duplicates_allowed = params.allow_star_source;
        return s;
    }
    case ReductionId::r11:
        return profile_spec(3, 2, Monotonicity::sat_monotone);
    case ReductionId::r12:
        return profile_spec(4, 2, Monotonicity::sat_monotone);
    case ReductionId::r13:
        return e4_choice();
    case ReductionId::r14:
        return profile_spec(3, 1, Monotonicity::none);
    }
    throw std::invalid_argument("unknown reduction");
}

ReductionCertificate apply_reduction(ReductionId id, const CnfInstance& input, const ReductionParams& params)
{
    const auto& row = reduction_row(id);
    if (input.mode() != row.input_mode)
        throw std::invalid_argument(to_string(id) + " expects " + to_string(row.input_mode) + " mode input");
    auto spec = input_spec(id, params);
    if (auto r = validate(input, spec); !r.ok)
        throw std::invalid_argument(to_string(id) + " input is not " + spec.to_string() + ": " + r.reason);

    switch (id) {
    case ReductionId::r1:
        return r1(input);
    case ReductionId::r2:
        return r2(input);
    case ReductionId::r3:
        return r3(input);
    case ReductionId::r4:
        return r4(input);
    case ReductionId::r5:
        return r5(input);
    case ReductionId::r6:
        return r6(input, *params.k);
    case ReductionId::r7:
        return r7(input, params.pad_with_d);
    case ReductionId::r8:
        return r8(input, *params.k);
    case ReductionId::r9:
        return r9(input);
    case ReductionId::r10:
        return r10(input, params);
    case ReductionId::r11:
        return r11(input);
    case ReductionId::r12:
        return r12(input);
    case ReductionId::r13:
        return r13(input);
    case ReductionId::r14:
        return r14(input);
    }
    throw std::invalid_argument("unknown reduction");
}

VerificationReport check_traceability(const ReductionCertificate& cert)
{
    const std::string subject = to_string(cert.id) + " traceability";
    const std::size_t n = cert.output.num_vars();
    if (cert.back_map.size() != n)
        return VerificationReport::fail(subject, "back map has " + std::to_string(cert.back_map.size()) +
                                                     " slots for " + std::to_string(n) + " variables");
    std::vector<int> owners(n, 0);
    for (Var v = 0; v < n; ++v) {
        if (cert.back_map[v]) {
            ++owners[v];
            if (cert.back_map[v]->input >= cert.input.num_vars()) {
                Witness w;
                w.variables = {v};
                return VerificationReport::fail(subject, "back map points outside the input", std::move(w));
            }
        }
    }
    for (const auto& e : cert.gadget_log)
        for (auto v : e.aux) {
            if (v >= n)
                return VerificationReport::fail(subject, "log entry " + e.label + " names an unknown variable");
            ++owners[v];
        }
    for (Var v = 0; v < n; ++v)
        if (owners[v] != 1) {
            Witness w;
            w.variables = {v};
            return VerificationReport::fail(subject,
                                            owners[v] == 0 ? "variable has no provenance"
                                                           : "variable is claimed more than once",
                                            std::move(w));
        }
    return VerificationReport::pass(subject);
}

Assignment pull_back(const ReductionCertificate& cert, const Assignment& model)
{
    if (!evaluates_true(cert.output, model))
        throw std::invalid_argument("model does not satisfy the " + to_string(cert.id) + " output");
    const std::size_t n = cert.input.num_vars();
    std::vector<std::optional<bool>> value(n);
    for (Var v = 0; v < cert.back_map.size(); ++v) {
        const auto& ref = cert.back_map[v];
        if (!ref || ref->copy != 0)
            continue;
        bool b = model[v] != ref->negated;
        auto& slot = value[ref->input];
        if (slot && *slot != b)
            throw std::logic_error(to_string(cert.id) + ": copies of input variable " +
                                   std::to_string(ref->input + 1) + " disagree");
        slot = b;
    }
    Assignment out(n);
    for (Var i = 0; i < n; ++i)
        out.set(i, value[i].value_or(false));
    if (!evaluates_true(cert.input, out))
        throw std::logic_error(to_string(cert.id) + ": pulled back assignment fails the input");
    return out;
}

VerificationReport check_equisat(const ReductionCertificate& cert, const OracleLimits& limits)
{
    const std::string subject = to_string(cert.id) + " equisatisfiability";
    Engine input_engine = cert.input.num_vars() <= limits.enumeration_cap ? Engine::exhaustive : Engine::dpll;
    auto in = solve(cert.input, input_engine, limits);
    auto out = solve_dpll(cert.output, limits);
    if (in.status == SolveStatus::unknown || out.status == SolveStatus::unknown)
        throw std::runtime_error(subject + ": oracle timeout, result indeterminate");
    std::vector<std::string> notes{"input " + to_string(in.status) + " (" + to_string(input_engine) + ", " +
                                       std::to_string(cert.input.num_vars()) + " vars)",
                                   "output " + to_string(out.status) + " (dpll, " +
                                       std::to_string(cert.output.num_vars()) + " vars, " +
                                       std::to_string(cert.output.num_clauses()) + " clauses)"};
    if (in.status != out.status) {
        Witness w;
        w.assignment = in.sat() ? in.model : out.model;
        return VerificationReport::fail(subject, "input is " + to_string(in.status) + " but output is " +
                                                     to_string(out.status),
                                        std::move(w));
    }
    if (out.sat()) {
        try {
            auto back = pull_back(cert, *out.model);
            (void)back;
            notes.push_back("output model pulls back to an input model");
        } catch (const std::exception& e) {
            Witness w;
            w.assignment = out.model;
            return VerificationReport::fail(subject, e.what(), std::move(w));
        }
    }
    return VerificationReport::pass(subject, std::move(notes));
}

VerificationReport check_equisat(ReductionId id, const CnfInstance& input, const ReductionParams& params,
                                 const OracleLimits& limits)
{
    return check_equisat(apply_reduction(id, input, params), limits);
}

} // namespace rsat
