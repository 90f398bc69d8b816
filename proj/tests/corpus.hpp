// Shared input corpora for the reduction and transversal suites and the
// acceptance binary.
#pragma once

#include "rsat/generators.hpp"
#include "rsat/reductions.hpp"
#include "support.hpp"

#include <array>
#include <random>
#include <set>
#include <stdexcept>

namespace rsat::testing {

struct Case {
    CnfInstance input;
    ReductionParams params;
};

inline CnfInstance fano_nae()
{
    return make(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}}, Mode::nae);
}

inline CnfInstance must(std::optional<CnfInstance> inst)
{
    if (!inst)
        throw std::runtime_error("generator gave up");
    return *std::move(inst);
}

inline ReductionParams with_k(std::size_t k)
{
    ReductionParams p;
    p.k = k;
    return p;
}

/// Monotone 3-Sat*-(2,2) parameter for R10: the R9 image of nine_var.
inline ReductionParams star_source()
{
    ReductionParams p;
    p.m_source = apply_reduction(ReductionId::r9, nine_var_reference()).output;
    p.allow_star_source = true;
    return p;
}

/// Random valid inputs plus the frozen unsatisfiable ones for each row.
inline std::vector<Case> corpus(ReductionId id, std::size_t count, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<Case> out;
    auto pick = [&](std::initializer_list<std::size_t> xs) {
        std::vector<std::size_t> v(xs);
        return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    };
    auto between = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    switch (id) {
    case ReductionId::r1:
        out.push_back({fano_nae(), {}});
        while (out.size() < count) {
            auto n = between(3, 7);
            out.push_back({random_monotone_nae(rng, n, between((n + 2) / 3, 6)), {}});
        }
        break;
    case ReductionId::r2:
        while (out.size() < count) {
            auto n = between(1, 6);
            out.push_back({random_nae_star(rng, n, between((n + 2) / 3, 6)), {}});
        }
        break;
    case ReductionId::r3:
        while (out.size() < count)
            out.push_back({must(random_nae_e4(rng, pick({3, 6, 9, 12}), false)), {}});
        break;
    case ReductionId::r4:
        while (out.size() < count)
            out.push_back({must(random_nae_e4(rng, pick({12, 15, 18}), true)), {}});
        break;
    case ReductionId::r5:
    case ReductionId::r7:
    case ReductionId::r11:
    case ReductionId::r13:
        out.push_back({unsat22_reference(), {}});
        while (out.size() < count)
            out.push_back({must(random_uniform_profile(rng, pick({3, 6, 9, 12}), 2, 2, false)), {}});
        break;
    case ReductionId::r6:
        out.push_back({nine_var_reference(), with_k(3)});
        while (out.size() < count) {
            auto k = between(1, 3);
            auto n = 3 * between(1, 3);
            out.push_back({must(random_uniform_profile(rng, n, k, k, true)), with_k(k)});
        }
        break;
    case ReductionId::r8:
        while (out.size() < count) {
            auto k = between(1, 4);
            out.push_back({must(random_uniform_profile(rng, 3 * between(1, 3), k, 1, true)), with_k(k)});
        }
        break;
    case ReductionId::r9:
        out.push_back({nine_var_reference(), {}});
        while (out.size() < count)
            out.push_back({must(random_uniform_profile(rng, between(3, 7), 3, 3, true)), {}});
        break;
    case ReductionId::r10: {
        auto p = star_source();
        out.push_back({nine_var_reference(), p});
        while (out.size() < count)
            out.push_back({must(random_uniform_profile(rng, between(3, 5), 3, 3, true)), p});
        break;
    }
    case ReductionId::r12:
        while (out.size() < count)
            out.push_back({must(random_uniform_profile(rng, 3 * between(1, 4), 3, 2, true)), {}});
        break;
    case ReductionId::r14:
        while (out.size() < count)
            out.push_back({must(random_e4_choice(rng, 3 * between(1, 5))), {}});
        break;
    }
    return out;
}

inline std::size_t corpus_size(ReductionId id) { return id == ReductionId::r10 ? 12 : 50; }

/// Canonical-shape instance over groups {0,1,2}, ... with the given positive clauses.
inline CnfInstance canonical(std::size_t n, const std::vector<std::array<Var, 3>>& plus)
{
    std::vector<Clause> cls;
    for (Var g = 0; g + 2 < n; g += 3)
        cls.push_back(Clause{neg(g), neg(g + 1), neg(g + 2)});
    for (const auto& t : plus)
        cls.push_back(Clause{pos(t[0]), pos(t[1]), pos(t[2])});
    return CnfInstance{n, std::move(cls)};
}

inline CnfInstance permute(const CnfInstance& f, const std::vector<Var>& perm)
{
    std::vector<Clause> cls;
    for (const auto& c : f.clauses()) {
        std::vector<Literal> lits;
        for (auto l : c)
            lits.emplace_back(perm[l.var()], l.negated());
        cls.emplace_back(std::move(lits), c.flavor());
    }
    return CnfInstance{f.num_vars(), std::move(cls), f.mode()};
}

/// Independent transversal walk: every choice vector, as a set of variables.
inline std::vector<std::set<Var>> all_transversals(std::size_t n)
{
    std::vector<std::set<Var>> out{{}};
    for (Var g = 0; g < n; g += 3) {
        std::vector<std::set<Var>> next;
        for (const auto& x : out)
            for (Var i = 0; i < 3; ++i) {
                auto y = x;
                y.insert(g + i);
                next.push_back(y);
            }
        out = std::move(next);
    }
    return out;
}

/// Positive clauses drawn from transversal triples only, enough of them that
/// some draws cover every transversal.
inline CnfInstance transversal_biased(Rng& rng, std::size_t n)
{
    const std::size_t k = n / 3;
    std::vector<std::array<Var, 3>> plus;
    if (k >= 3) {
        std::size_t m = std::uniform_int_distribution<std::size_t>(20, 200)(rng);
        std::uniform_int_distribution<std::size_t> group(0, k - 1);
        std::uniform_int_distribution<Var> digit(0, 2);
        while (plus.size() < m) {
            std::size_t a = group(rng), b = group(rng), c = group(rng);
            if (a == b || a == c || b == c)
                continue;
            plus.push_back({static_cast<Var>(3 * a) + digit(rng), static_cast<Var>(3 * b) + digit(rng),
                            static_cast<Var>(3 * c) + digit(rng)});
        }
    }
    return canonical(n, plus);
}

} // namespace rsat::testing
