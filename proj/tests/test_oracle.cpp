#include "rsat/oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rsat;
using rsat::testing::L;
using rsat::testing::make;

TEST(Exhaustive, NineVarUnsat)
{
    auto r = solve_exhaustive(rsat::testing::nine_var_reference());
    EXPECT_TRUE(r.unsat());
    EXPECT_FALSE(r.model);
}

TEST(Exhaustive, EmptyInstanceIsSat)
{
    auto r = solve_exhaustive(CnfInstance{});
    ASSERT_TRUE(r.sat());
    EXPECT_EQ(r.model->size(), 0u);
}

TEST(Exhaustive, CapIsEnforced)
{
    OracleLimits lim;
    lim.enumeration_cap = 4;
    try {
        solve_exhaustive(make(5, {{1, 2, 5}}), lim);
        FAIL() << "expected refusal";
    } catch (const EnumerationCapExceeded& e) {
        EXPECT_EQ(e.required(), 5u);
        EXPECT_EQ(e.cap(), 4u);
    }
}

TEST(Exhaustive, ParallelMatchesSequential)
{
    std::mt19937_64 rng(3);
    OracleLimits par;
    par.workers = 4;
    for (int it = 0; it < 6; ++it) {
        auto f = rsat::testing::random_kcnf(rng, 20, 80 + 4 * it);
        auto a = solve_exhaustive(f);
        auto b = solve_exhaustive(f, par);
        EXPECT_EQ(a.status, b.status);
        if (b.sat())
            EXPECT_TRUE(evaluates_true(f, *b.model));
        // Partitioned search is deterministic run to run.
        EXPECT_EQ(solve_exhaustive(f, par).model, b.model);
    }
}

TEST(Dpll, NineVarUnsatAndPositiveInstanceSat)
{
    EXPECT_TRUE(solve_dpll(rsat::testing::nine_var_reference()).unsat());
    auto pos = make(4, {{1, 2, 3}, {2, 3, 4}, {1, 3, 4}});
    auto r = solve_dpll(pos);
    ASSERT_TRUE(r.sat());
    EXPECT_TRUE(evaluates_true(pos, *r.model));
}

TEST(Dpll, DegenerateClauses)
{
    EXPECT_TRUE(solve_dpll(make(1, {{1}, {-1}})).unsat());
    EXPECT_TRUE(solve_dpll(CnfInstance{2, {Clause{}}, Mode::sat}).unsat());
    // A one-literal clause can never be not-all-equal.
    EXPECT_TRUE(solve_dpll(make(1, {{1}}, Mode::nae)).unsat());
    EXPECT_TRUE(solve_dpll(make(2, {{1, 1}}, Mode::nae, Flavor::multiset)).unsat());
    EXPECT_TRUE(solve_dpll(make(2, {{1, -1, 2}}, Mode::nae, Flavor::multiset)).sat());
}

// Both engines against the naive truth table, sat and nae.
TEST(Engines, AgreeWithNaiveOracle)
{
    std::mt19937_64 rng(2024);
    int sat = 0, unsat = 0;
    for (int it = 0; it < 1200; ++it) {
        std::size_t n = 3 + it % 14;
        Mode mode = it % 3 == 0 ? Mode::nae : Mode::sat;
        std::size_t m = mode == Mode::nae ? n * 2 + it % 7 : n * 4 + it % 9;
        auto f = rsat::testing::random_kcnf(rng, n, m, 3, mode);
        bool expected = rsat::testing::naive_sat(f);
        auto a = solve_exhaustive(f);
        auto b = solve_dpll(f);
        ASSERT_EQ(a.sat(), expected) << "iteration " << it;
        ASSERT_EQ(b.sat(), expected) << "iteration " << it;
        if (expected) {
            EXPECT_TRUE(evaluates_true(f, *a.model));
            EXPECT_TRUE(evaluates_true(f, *b.model));
            ++sat;
        } else {
            ++unsat;
        }
    }
    EXPECT_GT(sat, 100);
    EXPECT_GT(unsat, 100);
}

TEST(Engines, NaeInvariantUnderGlobalFlip)
{
    std::mt19937_64 rng(99);
    for (int it = 0; it < 300; ++it) {
        auto f = rsat::testing::random_kcnf(rng, 8, 12 + it % 10, 3, Mode::nae);
        EXPECT_EQ(solve_dpll(f).status, solve_dpll(flip_all(f)).status);
        EXPECT_EQ(solve_exhaustive(f).status, solve_exhaustive(flip_all(f)).status);
    }
}

TEST(Dpll, TimeoutReportsUnknown)
{
    // Pigeonhole 9 -> 8 is hard for resolution.
    std::vector<Clause> cls;
    const int holes = 8, pigeons = 9;
    auto var = [&](int p, int h) { return static_cast<Var>(p * holes + h); };
    for (int p = 0; p < pigeons; ++p) {
        std::vector<Literal> c;
        for (int h = 0; h < holes; ++h)
            c.push_back(pos(var(p, h)));
        cls.emplace_back(std::move(c));
    }
    for (int h = 0; h < holes; ++h)
        for (int p = 0; p < pigeons; ++p)
            for (int q = p + 1; q < pigeons; ++q)
                cls.push_back(Clause{neg(var(p, h)), neg(var(q, h))});
    CnfInstance php{static_cast<std::size_t>(pigeons * holes), std::move(cls)};
    OracleLimits lim;
    lim.timeout = std::chrono::milliseconds(50);
    EXPECT_EQ(solve_dpll(php, lim).status, SolveStatus::unknown);
}

TEST(Extension, NotEqualOverNaeTriple)
{
    // {x, y, a} and {x, y, ~a}: nae-satisfiable iff x != y.
    auto f = make(3, {{1, 2, 3}, {1, 2, -3}}, Mode::nae);
    std::vector<Var> boundary{0, 1}, aux{2};
    auto pred = extendable_patterns(f, boundary, aux);
    EXPECT_EQ(pred.describe(), "{TF, FT}");
    auto claimed = BoundaryPredicate::from_function(boundary, [](std::uint64_t p) { return p == 1 || p == 2; });
    EXPECT_TRUE(check_extension_property(f, claimed, aux));

    auto wrong = BoundaryPredicate::from_function(boundary, [](std::uint64_t p) { return p == 1; });
    auto r = check_extension_property(f, wrong, aux);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.witness.pattern, 2u);
    EXPECT_NE(r.reason.find("rejected by the predicate"), std::string::npos);
    ASSERT_TRUE(r.witness.assignment);
    EXPECT_TRUE(evaluates_true(f, *r.witness.assignment));

    auto too_many = BoundaryPredicate::from_function(boundary, [](std::uint64_t) { return true; });
    auto m = check_extension_property(f, too_many, aux);
    EXPECT_FALSE(m.ok);
    EXPECT_EQ(m.witness.pattern, 0u);
    EXPECT_NE(m.reason.find("no extension"), std::string::npos);
}

TEST(Extension, RejectsVariablesOutsideScope)
{
    auto f = make(3, {{1, 2, 3}});
    std::vector<Var> boundary{0}, aux{1};
    EXPECT_THROW(extendable_patterns(f, boundary, aux), std::invalid_argument);
}

TEST(Extension, ComplementedImageUnderFlip)
{
    std::mt19937_64 rng(17);
    std::vector<Var> boundary{0, 1, 2}, aux{3, 4, 5};
    for (int it = 0; it < 100; ++it) {
        auto f = rsat::testing::random_kcnf(rng, 6, 5, 3, Mode::nae);
        auto p = extendable_patterns(f, boundary, aux);
        EXPECT_EQ(extendable_patterns(flip_all(f), boundary, aux), p.complemented_image());
    }
}

TEST(Subsumes, Basics)
{
    std::vector<Clause> cover{Clause{L(1), L(2)}};
    std::vector<Clause> target{Clause{L(1), L(2), L(3)}};
    EXPECT_TRUE(subsumes(cover, target));
    std::vector<Clause> target2{Clause{L(1), L(3), L(4)}};
    auto r = subsumes(cover, target2);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.witness.clauses, (std::vector<std::size_t>{0}));
}

TEST(Subsumes, SatisfiabilityTransfers)
{
    std::mt19937_64 rng(23);
    int checked = 0;
    for (int it = 0; it < 400; ++it) {
        auto c = rsat::testing::random_kcnf(rng, 7, 6, 2);
        auto t = rsat::testing::random_kcnf(rng, 7, 8, 3);
        if (!subsumes(c.clauses(), t.clauses()))
            continue;
        ++checked;
        if (solve_exhaustive(c).sat())
            EXPECT_TRUE(solve_exhaustive(t).sat());
    }
    SUCCEED() << checked << " subsuming pairs";
}

TEST(SplitForced, NineVarCoreAndForcedLiterals)
{
    auto f = rsat::testing::nine_var_reference();
    auto split = split_forced(f);
    EXPECT_EQ(split.core.size() + split.excluded.size(), 18u);
    EXPECT_FALSE(split.excluded.empty());
    std::vector<Clause> core;
    for (auto i : split.core)
        core.push_back(f.clause(i));
    CnfInstance core_inst{9, core};
    // Naive check: every forced literal is false in every core model.
    for (std::uint64_t b = 0; b < 512; ++b) {
        if (!rsat::testing::naive_holds(core_inst, b))
            continue;
        for (auto l : split.forced)
            EXPECT_EQ(((b >> l.var()) & 1u) != 0, l.negated());
    }
    for (auto i : split.excluded) {
        auto extended = core;
        extended.push_back(f.clause(i));
        EXPECT_FALSE(rsat::testing::naive_sat(CnfInstance{9, extended}));
    }
}

TEST(SplitForced, RejectsSatisfiableInput)
{
    EXPECT_THROW(split_forced(make(3, {{1, 2, 3}})), std::invalid_argument);
    EXPECT_THROW(split_forced(make(3, {{1, 2, 3}}, Mode::nae)), std::invalid_argument);
}
