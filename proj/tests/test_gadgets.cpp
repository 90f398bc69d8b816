#include "rsat/gadgets.hpp"
#include "rsat/variant.hpp"
#include "support.hpp"

#include <bit>
#include <gtest/gtest.h>

#include <map>

using namespace rsat;
using namespace rsat::testing;

namespace {

/// Boundary patterns with at least one model, by naive enumeration over all
/// variables of the gadget. Bit i of a pattern is distinct boundary var i.
std::vector<bool> naive_projection(const GadgetInstance& g)
{
    const auto& bnd = g.predicate.boundary();
    Var top = 0;
    for (auto v : bnd)
        top = std::max(top, v);
    for (auto v : g.aux)
        top = std::max(top, v);
    auto inst = g.as_instance(top + 1);
    std::vector<bool> out(std::size_t{1} << bnd.size(), false);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << inst.num_vars()); ++b) {
        if (!naive_holds(inst, b))
            continue;
        std::uint64_t p = 0;
        for (std::size_t i = 0; i < bnd.size(); ++i)
            p |= ((b >> bnd[i]) & 1u) << i;
        out[p] = true;
    }
    return out;
}

GadgetInstance build_fresh(GadgetKind k, FreshAllocator& alloc)
{
    auto bnd = alloc.fresh(catalogue_row(k).boundary_arity);
    return build_gadget(k, bnd, alloc);
}

int popcount(std::uint64_t p) { return std::popcount(p); }

// Frozen accepted sets, written independently of the library predicate code.
bool expected_accepts(GadgetKind k, std::uint64_t p)
{
    auto bit = [&](int i) { return ((p >> i) & 1u) != 0; };
    switch (k) {
    case GadgetKind::ne6:
    case GadgetKind::ne9:
        return bit(0) != bit(1);
    case GadgetKind::eq_ne:
    case GadgetKind::eq13:
        return bit(0) == bit(1);
    case GadgetKind::eq4l:
        return p == 0 || p == 15;
    case GadgetKind::star22:
        return p == 0 || p == 63;
    case GadgetKind::p1:
    case GadgetKind::inc32:
        return true;
    case GadgetKind::s:
    case GadgetKind::g:
    case GadgetKind::b:
        return popcount(p) >= 1;
    case GadgetKind::d:
        return popcount(p) >= 1;
    case GadgetKind::c12:
        return bit(0) || bit(1);
    case GadgetKind::s_bar:
    case GadgetKind::h:
    case GadgetKind::b_bar:
        return popcount(p) <= 2;
    case GadgetKind::a:
        return !(bit(0) && bit(1));
    case GadgetKind::f:
        return bit(0);
    case GadgetKind::chain22:
        return p == 0b010101 || p == 0b101010;
    case GadgetKind::chain22_neg:
        return !(bit(0) && bit(1) && bit(5)) && !(bit(2) && bit(3) && bit(4));
    }
    return false;
}

} // namespace

TEST(Catalogue, NamesRoundTrip)
{
    for (const auto& row : catalogue()) {
        EXPECT_EQ(gadget_from_name(row.name), row.kind);
        EXPECT_EQ(to_string(row.kind), row.name);
    }
    EXPECT_EQ(gadget_from_name("ne9"), GadgetKind::ne9);
    EXPECT_EQ(gadget_from_name("s_bar"), GadgetKind::s_bar);
    EXPECT_FALSE(gadget_from_name("nope"));
}

TEST(Catalogue, CountsMatchBuiltGadgets)
{
    for (const auto& row : catalogue()) {
        FreshAllocator alloc;
        auto g = build_fresh(row.kind, alloc);
        EXPECT_EQ(g.aux.size(), row.aux_count) << row.name;
        EXPECT_EQ(g.clauses.size(), row.clause_count) << row.name;
        EXPECT_EQ(alloc.next(), row.boundary_arity + row.aux_count) << row.name;
        for (const auto& c : g.clauses) {
            EXPECT_EQ(c.flavor(), row.flavor) << row.name;
            EXPECT_LE(c.size(), 3u) << row.name;
        }
    }
}

TEST(Catalogue, EveryGadgetVerifies)
{
    for (const auto& row : catalogue()) {
        auto r = verify_gadget(row.kind);
        EXPECT_TRUE(r.ok) << row.name << ": " << r.reason;
    }
}

TEST(Catalogue, AcceptedSetsMatchFrozenTable)
{
    for (const auto& row : catalogue()) {
        FreshAllocator alloc;
        auto g = build_fresh(row.kind, alloc);
        for (std::uint64_t p = 0; p < (std::uint64_t{1} << row.boundary_arity); ++p)
            EXPECT_EQ(g.predicate.accepts(p), expected_accepts(row.kind, p)) << row.name << " pattern " << p;
    }
}

TEST(Catalogue, NaiveProjectionAgreesForSmallGadgets)
{
    for (const auto& row : catalogue()) {
        if (row.boundary_arity + row.aux_count > 20)
            continue;
        FreshAllocator alloc;
        auto g = build_fresh(row.kind, alloc);
        auto proj = naive_projection(g);
        for (std::uint64_t p = 0; p < proj.size(); ++p)
            EXPECT_EQ(proj[p], expected_accepts(row.kind, p)) << row.name << " pattern " << p;
    }
}

TEST(Catalogue, CompositesAreCheckedPartwise)
{
    for (auto k : {GadgetKind::f, GadgetKind::b, GadgetKind::b_bar}) {
        FreshAllocator alloc;
        auto g = build_fresh(k, alloc);
        EXPECT_FALSE(g.parts.empty());
        EXPECT_EQ(g.parts.size(), 3u);
        auto r = verify_instance(g);
        EXPECT_TRUE(r.ok) << r.reason;
        EXPECT_NE(r.subject.find("compositional"), std::string::npos);
    }
}

TEST(Catalogue, WrongClaimIsCaughtCompositionally)
{
    FreshAllocator alloc;
    auto g = build_fresh(GadgetKind::b, alloc);
    g.predicate = BoundaryPredicate::from_function(g.predicate.boundary(), [](std::uint64_t p) { return p == 7; });
    auto r = verify_instance(g);
    EXPECT_FALSE(r.ok);
    ASSERT_TRUE(r.witness.pattern);
    EXPECT_NE(*r.witness.pattern, 7u);
}

TEST(Catalogue, DroppedGlueIsCaught)
{
    FreshAllocator alloc;
    auto g = build_fresh(GadgetKind::f, alloc);
    g.glue.clear();
    g.clauses.pop_back();
    auto r = verify_instance(g);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.witness.pattern, 0u);
}

TEST(Duality, FlippedGadgetsHaveComplementedImages)
{
    FreshAllocator a1, a2;
    auto s = build_fresh(GadgetKind::s, a1);
    auto sb = build_fresh(GadgetKind::s_bar, a2);
    ASSERT_EQ(s.clauses.size(), sb.clauses.size());
    for (std::size_t i = 0; i < s.clauses.size(); ++i)
        EXPECT_EQ(s.clauses[i].flipped(), sb.clauses[i]);
    EXPECT_EQ(s.predicate.complemented_image(), sb.predicate);

    FreshAllocator b1, b2;
    auto b = build_fresh(GadgetKind::b, b1);
    auto bb = build_fresh(GadgetKind::b_bar, b2);
    ASSERT_EQ(b.clauses.size(), bb.clauses.size());
    for (std::size_t i = 0; i < b.clauses.size(); ++i)
        EXPECT_EQ(b.clauses[i].flipped(), bb.clauses[i]);
    EXPECT_EQ(b.predicate.complemented_image(), bb.predicate);
}

TEST(Substitution, DWithRepeatedSlotsIsOr)
{
    FreshAllocator alloc;
    auto yu = alloc.fresh(2);
    std::vector<Var> slots{yu[0], yu[1], yu[1], yu[1], yu[1], yu[1]};
    auto g = build_gadget(GadgetKind::d, slots, alloc);
    EXPECT_EQ(g.predicate.describe(), "{TF, FT, TT}");
    auto proj = naive_projection(g);
    EXPECT_EQ(proj, (std::vector<bool>{false, true, true, true}));
    EXPECT_TRUE(verify_instance(g).ok);
}

TEST(Substitution, RepeatedSlotsInOneClauseThrow)
{
    FreshAllocator alloc;
    auto x = alloc.fresh(3);
    std::vector<Var> slots{x[0], x[0]};
    // NE6's first clause holds both slots.
    EXPECT_THROW(build_gadget(GadgetKind::ne6, slots, alloc), std::invalid_argument);
    std::vector<Var> s3{x[0], x[1], x[1]};
    EXPECT_NO_THROW(build_gadget(GadgetKind::s, s3, alloc));
}

TEST(Substitution, ArityAndAllocationChecks)
{
    FreshAllocator alloc;
    auto x = alloc.fresh(2);
    EXPECT_THROW(build_gadget(GadgetKind::s, x, alloc), std::invalid_argument);
    std::vector<Var> late{x[0], 99};
    EXPECT_THROW(build_gadget(GadgetKind::ne9, late, alloc), std::invalid_argument);
}

TEST(Substitution, Eq4lOnRepeatedBoundaryIsNotLinear)
{
    FreshAllocator alloc;
    auto x = alloc.fresh(3);
    std::vector<Var> slots{x[0], x[0], x[1], x[2]};
    auto g = build_gadget(GadgetKind::eq4l, slots, alloc);
    // Clauses 1 and 4 now share x and a.
    auto inst = g.as_instance(alloc.next());
    EXPECT_FALSE(is_linear(inst, false).ok);
    FreshAllocator fresh;
    auto straight = build_fresh(GadgetKind::eq4l, fresh);
    EXPECT_TRUE(is_linear(straight.as_instance(fresh.next()), false).ok);
}

TEST(Profiles, Star22Appearances)
{
    FreshAllocator alloc;
    auto g = build_fresh(GadgetKind::star22, alloc);
    auto prof = appearance_profile(g.as_instance(alloc.next()));
    // Aux variables are (2,2); each slot has one free appearance left for
    // the host formula, positive on odd slots and negative on even ones.
    for (Var v = 0; v < 6; ++v) {
        bool odd_slot = v % 2 == 0;
        EXPECT_EQ(prof[v].positive, odd_slot ? 1u : 2u) << v;
        EXPECT_EQ(prof[v].negative, odd_slot ? 2u : 1u) << v;
    }
    for (Var v = 6; v < alloc.next(); ++v) {
        EXPECT_EQ(prof[v].positive, 2u) << v;
        EXPECT_EQ(prof[v].negative, 2u) << v;
    }
}

TEST(Profiles, BoundaryAppearancesOfCoreGadgets)
{
    // Number of boundary occurrences per slot, frozen from the tables.
    std::map<GadgetKind, std::vector<int>> slot_uses{
        {GadgetKind::ne6, {2, 2}},      {GadgetKind::p1, {1}},         {GadgetKind::ne9, {1, 2}},
        {GadgetKind::eq13, {1, 2}},     {GadgetKind::eq4l, {3, 3, 3, 3}}, {GadgetKind::s, {1, 1, 1}},
        {GadgetKind::a, {3, 3}},        {GadgetKind::g, {1, 1, 1}},    {GadgetKind::h, {1, 1, 1}},
        {GadgetKind::c12, {3, 1}},      {GadgetKind::inc32, {1, 1, 1}},
    };
    for (const auto& [k, uses] : slot_uses) {
        FreshAllocator alloc;
        auto g = build_fresh(k, alloc);
        auto prof = appearance_profile(g.as_instance(alloc.next()));
        for (std::size_t i = 0; i < uses.size(); ++i)
            EXPECT_EQ(static_cast<int>(prof[i].total()), uses[i]) << to_string(k) << " slot " << i;
    }
}

TEST(Subsumption, DFrameVersusProductSet)
{
    // D with its six x slots removed against U = {a,c,e} x {b,f,h} x {d,g,i}.
    FreshAllocator alloc;
    auto x = alloc.fresh(6);
    auto g = build_gadget(GadgetKind::d, x, alloc);
    std::vector<Clause> core;
    for (std::size_t i = 0; i < 14; ++i)
        core.push_back(g.clauses[i]);
    for (std::size_t i = 14; i < 20; ++i) {
        std::vector<Literal> lits;
        for (auto l : g.clauses[i])
            if (l.var() >= 6)
                lits.push_back(l);
        core.emplace_back(std::move(lits));
    }
    auto aux = [&](char c) { return g.aux[static_cast<std::size_t>(c - 'a')]; };
    std::vector<Clause> u;
    for (char p : {'a', 'c', 'e'})
        for (char q : {'b', 'f', 'h'})
            for (char r : {'d', 'g', 'i'})
                u.emplace_back(std::vector<Literal>{pos(aux(p)), pos(aux(q)), pos(aux(r))});
    const std::size_t n = alloc.next();
    CnfInstance frame{n, core, Mode::sat};
    CnfInstance product{n, u, Mode::sat};
    EXPECT_TRUE(subsumes(frame.clauses(), product.clauses()).ok);
    EXPECT_FALSE(naive_sat(frame));

    // Without clause 4 the check fails on {a,b,d}.
    std::vector<Clause> core4 = core;
    core4.erase(core4.begin() + 3);
    auto r = subsumes(core4, product.clauses());
    EXPECT_FALSE(r.ok);
}
