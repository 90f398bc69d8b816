// Test-side helpers: a naive truth-table oracle that shares no code with the
// library engines, and small random instance generators.
#pragma once

#include "rsat/formula.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace rsat::testing {

/// Literal from a signed 1-based id, like DIMACS.
inline Literal L(int d) { return Literal{static_cast<Var>((d < 0 ? -d : d) - 1), d < 0}; }

inline CnfInstance make(std::size_t n, std::initializer_list<std::initializer_list<int>> cls, Mode m = Mode::sat,
                        Flavor f = Flavor::set)
{
    std::vector<Clause> out;
    for (auto c : cls) {
        std::vector<Literal> lits;
        for (int d : c)
            lits.push_back(L(d));
        out.emplace_back(std::move(lits), f);
    }
    return CnfInstance{n, std::move(out), m};
}

/// Plain nested-loop evaluation, one assignment at a time.
inline bool naive_holds(const CnfInstance& f, std::uint64_t bits)
{
    for (const auto& c : f.clauses()) {
        int t = 0, fl = 0;
        for (auto l : c.literals()) {
            bool v = ((bits >> l.var()) & 1u) != 0;
            (v != l.negated() ? t : fl)++;
        }
        bool ok = f.mode() == Mode::sat ? t > 0 : (t > 0 && fl > 0);
        if (!ok)
            return false;
    }
    return true;
}

inline std::uint64_t naive_count(const CnfInstance& f)
{
    std::uint64_t count = 0;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << f.num_vars()); ++b)
        count += naive_holds(f, b);
    return count;
}

inline bool naive_sat(const CnfInstance& f)
{
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << f.num_vars()); ++b)
        if (naive_holds(f, b))
            return true;
    return false;
}

/// m random clauses of arity k over n variables, distinct variables per clause.
inline CnfInstance random_kcnf(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t k = 3,
                               Mode mode = Mode::sat)
{
    std::vector<Var> vars(n);
    std::iota(vars.begin(), vars.end(), 0);
    std::vector<Clause> cls;
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < m; ++i) {
        std::shuffle(vars.begin(), vars.end(), rng);
        std::vector<Literal> lits;
        for (std::size_t j = 0; j < k && j < n; ++j)
            lits.emplace_back(vars[j], coin(rng));
        cls.emplace_back(std::move(lits));
    }
    return CnfInstance{n, std::move(cls), mode};
}

/// The 9-variable, 18-clause monotone (3,3) witness, a..i = 1..9.
inline CnfInstance nine_var_reference()
{
    return make(9, {{-1, -4, -7}, {-1, -6, -9}, {-2, -4, -8}, {-2, -5, -6}, {-3, -5, -7}, {-3, -8, -9},
                    {1, 4, 7},    {1, 6, 9},    {2, 4, 8},    {2, 5, 6},    {3, 5, 7},    {3, 8, 9},
                    {1, 2, 3},    {4, 5, 9},    {6, 7, 8},    {-1, -5, -8}, {-2, -7, -9}, {-3, -4, -6}});
}

/// A 15-variable, 20-clause 3-Sat-(2,2) instance that is unsatisfiable,
/// found by a local search over literal placements and frozen here.
inline CnfInstance unsat22_reference()
{
    return make(15, {{8, -14, -7}, {12, 15, 7}, {6, -5, -10}, {-4, -2, 12}, {-10, 5, -11},
                     {13, -12, 3}, {2, 3, 1}, {-5, 11, 10}, {-1, 7, -9}, {13, -3, 9},
                     {6, 5, 11}, {-3, 1, -9}, {10, -11, -15}, {-13, 2, 9}, {-8, -6, 4},
                     {-2, -13, -12}, {-4, -1, 14}, {4, 8, 14}, {15, -8, -7}, {-14, -15, -6}});
}

} // namespace rsat::testing
