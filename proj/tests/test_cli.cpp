#include "cli.hpp"

#include "rsat/dimacs.hpp"
#include "rsat/gadgets.hpp"
#include "rsat/generators.hpp"
#include "rsat/variant.hpp"
#include "support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <sstream>

using namespace rsat;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = {})
{
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir()
        : path_(std::filesystem::temp_directory_path() /
                ("rsat_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this))))
    {
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    [[nodiscard]] std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

const std::string kMonoNae = "c mode nae\np cnf 4 3\n1 2 3 0\n1 2 4 0\n2 3 4 0\n";

} // namespace

TEST(Cli, HelpAndUsage)
{
    auto help = run({"--help"});
    EXPECT_EQ(help.code, cli::kPass);
    EXPECT_NE(help.out.find("search-unsat"), std::string::npos);
    EXPECT_EQ(run({}).code, cli::kUsage);
    EXPECT_EQ(run({"solve"}).code, cli::kUsage);
    EXPECT_EQ(run({"solve", "-", "--engine", "magic"}, "p cnf 0 0\n").code, cli::kUsage);
    EXPECT_EQ(run({"reduce", "R99", "-"}, kMonoNae).code, cli::kUsage);
    EXPECT_EQ(run({"gadgets", "verify", "NOPE"}).code, cli::kUsage);
    EXPECT_EQ(run({"witness", "nope"}).code, cli::kUsage);
}

TEST(Cli, MalformedDimacsIsUsageErrorWithLine)
{
    auto r = run({"solve", "-"}, "p cnf 3 1\n1 1 2 0\n");
    EXPECT_EQ(r.code, cli::kUsage);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
    EXPECT_EQ(run({"check", "/nonexistent.cnf", "--variant", "e3"}).code, cli::kUsage);
}

TEST(Cli, CheckPassAndFail)
{
    auto ok = run({"check", "-", "--variant", "mono-nae"}, kMonoNae);
    EXPECT_EQ(ok.code, cli::kPass) << ok.out << ok.err;
    EXPECT_EQ(ok.out.rfind("PASS", 0), 0u);

    auto bad = run({"check", "-", "--variant", "mono-nae-e4", "--json"}, kMonoNae);
    EXPECT_EQ(bad.code, cli::kFail);
    auto j = json::parse(bad.out);
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["command"], "check");
    EXPECT_FALSE(j["report"]["ok"].get<bool>());
    EXPECT_FALSE(j["report"]["reason"].get<std::string>().empty());

    // Spec taken from the file when --variant is absent.
    EXPECT_EQ(run({"check", "-"}, "c variant mono-sat\np cnf 3 1\n1 2 3 0\n").code, cli::kPass);
    EXPECT_EQ(run({"check", "-"}, "p cnf 3 1\n1 2 3 0\n").code, cli::kUsage);
}

TEST(Cli, SolveSatUnsatUnknown)
{
    auto sat = run({"solve", "-", "--json"}, kMonoNae);
    EXPECT_EQ(sat.code, cli::kPass);
    auto j = json::parse(sat.out);
    EXPECT_EQ(j["status"], "SAT");
    ASSERT_EQ(j["model"].size(), 4u);
    std::vector<bool> bits;
    for (auto v : j["model"])
        bits.push_back(v.get<int>() > 0);
    auto inst = parse_dimacs(kMonoNae);
    for (const auto& c : inst.clauses())
        EXPECT_TRUE(clause_holds(c, Assignment{bits}, Mode::nae));

    auto unsat = run({"solve", "-", "--engine", "exhaustive"}, emit_dimacs(rsat::testing::unsat22_reference()));
    EXPECT_EQ(unsat.code, cli::kPass);
    EXPECT_EQ(unsat.out.rfind("UNSAT", 0), 0u);

    auto plain = run({"solve", "-"}, "p cnf 2 1\n1 2 0\n");
    EXPECT_NE(plain.out.find("\nv "), std::string::npos);

    // A unit clause can never be nae-satisfied.
    EXPECT_EQ(run({"solve", "-", "--mode", "nae"}, "p cnf 1 1\n1 0\n").out.rfind("UNSAT", 0), 0u);

    auto capped = run({"solve", "-", "--engine", "exhaustive", "--cap", "3"}, kMonoNae);
    EXPECT_EQ(capped.code, cli::kFail);
    EXPECT_EQ(capped.out.rfind("UNKNOWN", 0), 0u);
}

TEST(Cli, ReduceWithChecks)
{
    TempDir dir;
    auto out_path = dir.file("r1.cnf");
    auto r = run({"reduce", "R1", "-", "-o", out_path, "--check"}, kMonoNae);
    EXPECT_EQ(r.code, cli::kPass) << r.out << r.err;
    EXPECT_NE(r.out.find("PASS R1 equisatisfiability"), std::string::npos);
    auto file = parse_dimacs_file(read_text_file(out_path));
    ASSERT_TRUE(file.variant);
    EXPECT_TRUE(validate(file.instance, *file.variant).ok);

    // DIMACS on stdout, reports on stderr.
    auto piped = run({"reduce", "r1", "-", "--check"}, kMonoNae);
    EXPECT_EQ(piped.code, cli::kPass);
    EXPECT_EQ(parse_dimacs(piped.out), file.instance);
    EXPECT_NE(piped.err.find("PASS"), std::string::npos);

    auto j = json::parse(run({"reduce", "R1", "-", "--json", "--check"}, kMonoNae).out);
    EXPECT_EQ(j["command"], "reduce");
    EXPECT_EQ(j["checks"].size(), 3u);
    EXPECT_EQ(parse_dimacs(j["output"]["dimacs"].get<std::string>()), file.instance);
}

TEST(Cli, ReduceRejectsWrongInput)
{
    auto r = run({"reduce", "R1", "-"}, "c mode nae\np cnf 3 1\n1 -2 3 0\n");
    EXPECT_EQ(r.code, cli::kFail);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, Gadgets)
{
    auto list = run({"gadgets", "list"});
    EXPECT_EQ(list.code, cli::kPass);
    for (const auto& row : catalogue())
        EXPECT_NE(list.out.find(row.name), std::string::npos) << row.name;

    auto all = run({"gadgets", "verify", "ALL", "--json"});
    EXPECT_EQ(all.code, cli::kPass);
    auto j = json::parse(all.out);
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_EQ(j["results"].size(), catalogue().size());

    auto one = run({"gadgets", "verify", "S", "F"});
    EXPECT_EQ(one.code, cli::kPass);
    EXPECT_EQ(one.out.rfind("PASS S", 0), 0u);

    auto emitted = run({"gadgets", "emit", "S"});
    EXPECT_EQ(emitted.code, cli::kPass);
    auto g = parse_dimacs(emitted.out);
    EXPECT_EQ(g.num_vars(), 9u);
    EXPECT_EQ(g.num_clauses(), 13u);
}

TEST(Cli, Witness)
{
    auto list = run({"witness", "--list"});
    EXPECT_NE(list.out.find("mon51: 102 vars, 204 clauses"), std::string::npos);

    auto file = parse_dimacs_file(run({"witness", "mon51"}).out);
    EXPECT_EQ(file.instance.num_vars(), 102u);
    ASSERT_TRUE(file.variant);
    EXPECT_TRUE(validate(file.instance, *file.variant).ok);

    auto cert = run({"witness", "nine_var", "--certify"});
    EXPECT_EQ(cert.code, cli::kPass);
    EXPECT_EQ(cert.out.rfind("PASS", 0), 0u);
    EXPECT_EQ(run({"witness"}).code, cli::kUsage);
}

TEST(Cli, SearchUnsat)
{
    TempDir dir;
    auto journal = dir.file("j.jsonl");
    auto r = run({"search-unsat", "--profile", "2,2", "--max-n", "6", "--journal", journal});
    EXPECT_EQ(r.code, cli::kPass);
    EXPECT_NE(r.out.find("no unsatisfiable instance for n <= 6"), std::string::npos);
    std::istringstream lines(read_text_file(journal));
    std::string line;
    std::vector<json> entries;
    while (std::getline(lines, line))
        entries.push_back(json::parse(line));
    ASSERT_EQ(entries.size(), 2u);
    EXPECT_EQ(entries[1]["n"], 6);
    EXPECT_TRUE(entries[1]["exhausted"].get<bool>());

    auto j = json::parse(run({"search-unsat", "--profile", "5,1", "--max-n", "102", "--json"}).out);
    EXPECT_TRUE(j["found"].get<bool>());
    EXPECT_TRUE(j["certificate"]["ok"].get<bool>());

    EXPECT_EQ(run({"search-unsat", "--profile", "7,7"}).code, cli::kUsage);
    EXPECT_EQ(run({"search-unsat", "--profile", "22"}).code, cli::kUsage);
}
