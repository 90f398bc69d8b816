#include "rsat/dimacs.hpp"
#include "rsat/generators.hpp"
#include "rsat/reductions.hpp"
#include "rsat/witnesses.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace rsat;
using namespace rsat::testing;

namespace {

std::size_t error_line(const std::string& text)
{
    try {
        parse_dimacs(text);
    } catch (const DimacsError& e) {
        return e.line();
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return 999;
}

} // namespace

TEST(Dimacs, MinimalFile)
{
    auto f = parse_dimacs("p cnf 3 1\n1 -2 3 0\n");
    EXPECT_EQ(f, make(3, {{1, -2, 3}}));
    EXPECT_EQ(f.mode(), Mode::sat);
}

TEST(Dimacs, EmptyInstance)
{
    auto f = parse_dimacs("p cnf 0 0\n");
    EXPECT_EQ(f.num_vars(), 0u);
    EXPECT_EQ(f.num_clauses(), 0u);
    EXPECT_EQ(parse_dimacs(emit_dimacs(f)), f);
}

TEST(Dimacs, CommentsPercentAndSplitClauses)
{
    auto f = parse_dimacs("c hello\ncomment-like line\np cnf 4 2\n1 2\n 3 0 -4\n-1 2 0\n%\n0\n");
    EXPECT_EQ(f, make(4, {{1, 2, 3}, {-4, -1, 2}}));
}

TEST(Dimacs, Annotations)
{
    auto file = parse_dimacs_file("c mode nae\nc variant mono-nae-e4\np cnf 3 1\n1 2 3 0\n");
    EXPECT_EQ(file.instance.mode(), Mode::nae);
    ASSERT_TRUE(file.variant);
    EXPECT_EQ(*file.variant, VariantSpec::parse("mono-nae-e4"));
}

TEST(Dimacs, MultisetLine)
{
    auto f = parse_dimacs("c duplicates allowed\np cnf 3 1\n1 1 3 0\n");
    ASSERT_EQ(f.num_clauses(), 1u);
    EXPECT_EQ(f.clause(0).flavor(), Flavor::multiset);
    EXPECT_EQ(f.clause(0).size(), 3u);
    EXPECT_TRUE(f.clause(0).has_repeated_literal());
    EXPECT_NE(emit_dimacs(f).find("1 1 3 0"), std::string::npos);
}

TEST(Dimacs, RepeatedLiteralInSetModeReportsItsLine)
{
    EXPECT_EQ(error_line("p cnf 3 2\n1 2 3 0\n\n2 2 3 0\n"), 4u);
}

TEST(Dimacs, Errors)
{
    EXPECT_EQ(error_line("p cnf 3 1\n1 4 2 0\n"), 2u);         // out of range
    EXPECT_EQ(error_line("p cnf 3 1\n1 x 2 0\n"), 2u);         // not an integer
    EXPECT_EQ(error_line("1 2 3 0\np cnf 3 1\n"), 1u);         // clause before header
    EXPECT_EQ(error_line("p cnf 3 1\np cnf 3 1\n1 2 3 0\n"), 2u);
    EXPECT_EQ(error_line("p dnf 3 1\n1 2 3 0\n"), 1u);
    EXPECT_EQ(error_line("c mode xor\np cnf 3 1\n1 2 3 0\n"), 1u);
    EXPECT_EQ(error_line("p cnf 3 1\n1 2 3\n"), 0u);           // missing terminator
    EXPECT_EQ(error_line("p cnf 3 2\n1 2 3 0\n"), 0u);         // count mismatch
    EXPECT_EQ(error_line(""), 0u);                             // no header
    EXPECT_EQ(error_line("c duplicates allowed\nc set-clauses 2\np cnf 3 1\n1 2 3 0\n"), 0u);
}

TEST(Dimacs, Mon51Header)
{
    auto text = emit_dimacs(known_unsat(KnownUnsat::mon51));
    EXPECT_NE(text.find("p cnf 102 204\n"), std::string::npos);
}

TEST(Dimacs, RoundTripRandomBothFlavors)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        auto base = random_kcnf(rng, 3 + i % 10, i % 25, 3, i % 2 ? Mode::nae : Mode::sat);
        EXPECT_EQ(parse_dimacs(emit_dimacs(base)), base);
        std::vector<Clause> ms;
        for (const auto& c : base.clauses())
            ms.push_back(c.with_flavor(Flavor::multiset));
        CnfInstance multi{base.num_vars(), ms, base.mode()};
        EXPECT_EQ(parse_dimacs(emit_dimacs(multi)), multi);
    }
}

TEST(Dimacs, RoundTripStarAndMixedFlavors)
{
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        auto f = random_nae_star(rng, 6, 6);
        EXPECT_EQ(parse_dimacs(emit_dimacs(f)), f);
    }
    // A set clause alongside a multiset one survives through set-clauses.
    CnfInstance mixed{3, {Clause{{pos(0), pos(1), pos(2)}}, Clause{{pos(0), pos(0), neg(2)}, Flavor::multiset}}};
    auto text = emit_dimacs(mixed);
    EXPECT_NE(text.find("c set-clauses 1\n"), std::string::npos);
    EXPECT_EQ(parse_dimacs(text), mixed);
}

TEST(Dimacs, RoundTripWitnessesAndReductionOutputs)
{
    for (auto w : all_known_unsat()) {
        auto f = known_unsat(w);
        EXPECT_EQ(parse_dimacs(emit_dimacs(f)), f) << to_string(w);
    }
    Rng rng(8);
    auto input = random_monotone_nae(rng, 6, 5);
    // R1 produces the E4 input that R3 expects.
    for (auto id : {ReductionId::r1, ReductionId::r3}) {
        auto out = apply_reduction(id, input).output;
        input = out;
        auto spec = output_spec(id);
        auto file = parse_dimacs_file(emit_dimacs(out, spec));
        EXPECT_EQ(file.instance, out);
        ASSERT_TRUE(file.variant);
        EXPECT_EQ(*file.variant, spec);
    }
}

TEST(Dimacs, FileHelpers)
{
    auto path = std::filesystem::temp_directory_path() / "rsat_dimacs_roundtrip.cnf";
    auto f = make(4, {{1, 2, 3}, {-2, -3, -4}});
    write_text_file(path.string(), emit_dimacs(f));
    EXPECT_EQ(parse_dimacs(read_text_file(path.string())), f);
    std::filesystem::remove(path);
    EXPECT_THROW(read_text_file("/nonexistent/dir/x.cnf"), std::runtime_error);
    EXPECT_THROW(write_text_file("/nonexistent/dir/x.cnf", "x"), std::runtime_error);
}
