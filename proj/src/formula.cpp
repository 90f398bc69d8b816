#include "rsat/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rsat {

long long Literal::dimacs() const
{
    auto v = static_cast<long long>(var_) + 1;
    return negated_ ? -v : v;
}

Literal Literal::from_dimacs(long long lit)
{
    if (lit == 0)
        throw std::invalid_argument("literal 0 is the clause terminator");
    auto v = lit < 0 ? -lit : lit;
    return Literal{static_cast<Var>(v - 1), lit < 0};
}

std::string to_string(Mode m) { return m == Mode::sat ? "sat" : "nae"; }
std::string to_string(Flavor f) { return f == Flavor::set ? "set" : "multiset"; }

Clause::Clause(std::vector<Literal> literals, Flavor flavor)
    : lits_(std::move(literals))
    , flavor_(flavor)
{
    std::sort(lits_.begin(), lits_.end());
    if (flavor_ == Flavor::multiset)
        return;
    for (std::size_t i = 1; i < lits_.size(); ++i) {
        if (lits_[i].var() != lits_[i - 1].var())
            continue;
        if (lits_[i] == lits_[i - 1])
            throw std::invalid_argument("set clause repeats literal " + std::to_string(lits_[i].dimacs()));
        throw std::invalid_argument("set clause contains variable " + std::to_string(lits_[i].var() + 1) +
                                    " with both polarities");
    }
}

bool Clause::has_repeated_literal() const
{
    return std::adjacent_find(lits_.begin(), lits_.end()) != lits_.end();
}

bool Clause::all_positive() const
{
    return std::all_of(lits_.begin(), lits_.end(), [](Literal l) { return l.positive(); });
}

bool Clause::all_negative() const
{
    return std::all_of(lits_.begin(), lits_.end(), [](Literal l) { return l.negated(); });
}

std::vector<Var> Clause::variables() const
{
    std::vector<Var> vs;
    vs.reserve(lits_.size());
    for (auto l : lits_)
        if (vs.empty() || vs.back() != l.var())
            vs.push_back(l.var());
    return vs;
}

bool Clause::contains(Literal l) const { return std::binary_search(lits_.begin(), lits_.end(), l); }

Clause Clause::flipped() const
{
    std::vector<Literal> out;
    out.reserve(lits_.size());
    for (auto l : lits_)
        out.push_back(~l);
    return Clause{std::move(out), flavor_};
}

CnfInstance::CnfInstance(std::size_t num_vars, std::vector<Clause> clauses, Mode mode)
    : num_vars_(num_vars)
    , clauses_(std::move(clauses))
    , mode_(mode)
{
    for (std::size_t i = 0; i < clauses_.size(); ++i)
        for (auto l : clauses_[i])
            if (l.var() >= num_vars_)
                throw std::invalid_argument("clause " + std::to_string(i) + " uses variable " +
                                            std::to_string(l.var() + 1) + " beyond num_vars " +
                                            std::to_string(num_vars_));
}

bool CnfInstance::duplicates_allowed() const
{
    return std::any_of(clauses_.begin(), clauses_.end(),
                       [](const Clause& c) { return c.flavor() == Flavor::multiset; });
}

bool clause_holds(const Clause& c, const Assignment& a, Mode mode)
{
    bool any_true = false;
    bool any_false = false;
    for (auto l : c) {
        if (a.value(l))
            any_true = true;
        else
            any_false = true;
    }
    return mode == Mode::sat ? any_true : (any_true && any_false);
}

std::optional<std::size_t> first_violated(const CnfInstance& inst, const Assignment& a)
{
    for (std::size_t i = 0; i < inst.num_clauses(); ++i)
        if (!clause_holds(inst.clause(i), a, inst.mode()))
            return i;
    return std::nullopt;
}

AppearanceProfile appearance_profile(const CnfInstance& inst)
{
    AppearanceProfile prof(inst.num_vars());
    for (const auto& c : inst.clauses())
        for (auto l : c) {
            if (l.negated())
                ++prof[l.var()].negative;
            else
                ++prof[l.var()].positive;
        }
    return prof;
}

CnfInstance negate_rename(const CnfInstance& inst, std::span<const Var> vars)
{
    std::vector<bool> selected(inst.num_vars(), false);
    for (auto v : vars) {
        if (v >= inst.num_vars())
            throw std::invalid_argument("negate_rename: variable " + std::to_string(v + 1) + " out of range");
        selected[v] = true;
    }
    std::vector<Clause> out;
    out.reserve(inst.num_clauses());
    for (const auto& c : inst.clauses()) {
        std::vector<Literal> lits;
        lits.reserve(c.size());
        for (auto l : c)
            lits.push_back(selected[l.var()] ? ~l : l);
        out.emplace_back(std::move(lits), c.flavor());
    }
    return CnfInstance{inst.num_vars(), std::move(out), inst.mode()};
}

CnfInstance flip_all(const CnfInstance& inst)
{
    std::vector<Clause> out;
    out.reserve(inst.num_clauses());
    for (const auto& c : inst.clauses())
        out.push_back(c.flipped());
    return CnfInstance{inst.num_vars(), std::move(out), inst.mode()};
}

} // namespace rsat
