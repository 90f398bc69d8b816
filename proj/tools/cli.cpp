#include "cli.hpp"

#include "rsat/dimacs.hpp"
#include "rsat/gadgets.hpp"
#include "rsat/oracle.hpp"
#include "rsat/reductions.hpp"
#include "rsat/report_json.hpp"
#include "rsat/variant.hpp"
#include "rsat/witnesses.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace rsat::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

json envelope(const std::string& command)
{
    return json{{"schema_version", kJsonSchemaVersion}, {"command", command}};
}

std::string read_input(const std::string& path, std::istream& in)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return read_text_file(path);
}

std::string model_line(const Assignment& a)
{
    std::string s = "v";
    for (Var v = 0; v < a.size(); ++v)
        s += " " + std::to_string(a[v] ? static_cast<long long>(v) + 1 : -static_cast<long long>(v) - 1);
    return s + " 0";
}

void print_report(std::ostream& out, const VerificationReport& r)
{
    out << (r.ok ? "PASS " : "FAIL ") << r.subject;
    if (!r.ok)
        out << ": " << r.reason;
    out << '\n';
    for (const auto& n : r.notes)
        out << "  " << n << '\n';
    const auto& w = r.witness;
    if (!w.clauses.empty()) {
        out << "  clauses:";
        for (auto c : w.clauses)
            out << ' ' << c + 1;
        out << '\n';
    }
    if (!w.variables.empty()) {
        out << "  variables:";
        for (auto v : w.variables)
            out << ' ' << v + 1;
        out << '\n';
    }
    if (w.pattern)
        out << "  pattern: " << *w.pattern << '\n';
    if (w.assignment)
        out << "  " << model_line(*w.assignment) << '\n';
}

long long elapsed_ms(std::chrono::steady_clock::time_point since)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - since).count();
}

Profile parse_profile(const std::string& text)
{
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError("profile must look like 2,2");
    try {
        std::size_t used = 0;
        auto p = std::stoul(text.substr(0, comma), &used);
        if (used != comma)
            throw UsageError("bad profile");
        auto rest = text.substr(comma + 1);
        auto q = std::stoul(rest, &used);
        if (used != rest.size())
            throw UsageError("bad profile");
        return {p, q};
    } catch (const std::logic_error&) {
        throw UsageError("profile must look like 2,2");
    }
}

std::optional<VariantSpec> witness_variant(KnownUnsat w)
{
    switch (w) {
    case KnownUnsat::ss_bar:
    case KnownUnsat::nine_var:
        return VariantSpec::exact(3, 3);
    case KnownUnsat::mon51:
        return VariantSpec::exact(5, 1);
    case KnownUnsat::hitting27:
        return VariantSpec::exact(9, 1);
    }
    return std::nullopt;
}

json journal_json(const JournalEntry& e, const Profile& profile)
{
    return json{{"schema_version", kJsonSchemaVersion},
                {"profile", std::to_string(profile.first) + "," + std::to_string(profile.second)},
                {"n", e.n},
                {"phase", e.phase},
                {"candidates", e.candidates},
                {"distinct", e.distinct},
                {"satisfiable", e.satisfiable},
                {"exhausted", e.exhausted},
                {"note", e.note}};
}

std::string journal_text(const JournalEntry& e)
{
    std::ostringstream s;
    s << "n=" << e.n << ' ' << e.phase << " candidates=" << e.candidates << " distinct=" << e.distinct
      << " satisfiable=" << e.satisfiable << (e.exhausted ? " exhausted" : " partial") << ": " << e.note;
    return s.str();
}

// ---------------------------------------------------------------------------

int cmd_check(const std::string& file, const std::string& variant_text, bool as_json, std::istream& in,
              std::ostream& out)
{
    auto parsed = parse_dimacs_file(read_input(file, in));
    std::optional<VariantSpec> spec = parsed.variant;
    if (!variant_text.empty())
        spec = VariantSpec::parse(variant_text);
    if (!spec)
        throw UsageError("no --variant given and the file has no 'c variant' line");
    auto r = validate(parsed.instance, *spec);
    r.subject = spec->to_string();
    if (as_json) {
        auto j = envelope("check");
        j["variant"] = spec->to_string();
        j["report"] = report_to_json(r);
        out << j.dump(2) << '\n';
    } else {
        print_report(out, r);
    }
    return r.ok ? kPass : kFail;
}

int cmd_solve(const std::string& file, const std::string& engine_name, const std::string& mode_name, std::size_t cap,
              double timeout_s, unsigned workers, bool as_json, std::istream& in, std::ostream& out)
{
    auto inst = parse_dimacs(read_input(file, in));
    if (mode_name == "sat")
        inst = inst.with_mode(Mode::sat);
    else if (mode_name == "nae")
        inst = inst.with_mode(Mode::nae);
    Engine engine = engine_name == "exhaustive" ? Engine::exhaustive : Engine::dpll;
    OracleLimits lim;
    lim.enumeration_cap = cap;
    lim.workers = workers;
    if (timeout_s > 0)
        lim.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000));

    auto start = std::chrono::steady_clock::now();
    SolveResult r;
    std::string problem;
    try {
        r = solve(inst, engine, lim);
    } catch (const EnumerationCapExceeded& e) {
        problem = e.what();
    }
    auto ms = elapsed_ms(start);
    const char* label = r.sat() ? "SAT" : r.unsat() ? "UNSAT" : "UNKNOWN";
    if (problem.empty() && r.status == SolveStatus::unknown)
        problem = "timed out";

    if (as_json) {
        auto j = envelope("solve");
        j["status"] = label;
        j["engine"] = to_string(engine);
        j["mode"] = to_string(inst.mode());
        j["num_vars"] = inst.num_vars();
        j["num_clauses"] = inst.num_clauses();
        j["elapsed_ms"] = ms;
        if (r.model)
            j["model"] = assignment_to_json(*r.model);
        if (!problem.empty())
            j["reason"] = problem;
        out << j.dump(2) << '\n';
    } else {
        out << label;
        if (!problem.empty())
            out << ": " << problem;
        out << " (" << to_string(engine) << ", " << to_string(inst.mode()) << ", " << inst.num_vars() << " vars, "
            << inst.num_clauses() << " clauses, " << ms << " ms)\n";
        if (r.model)
            out << model_line(*r.model) << '\n';
    }
    return r.status == SolveStatus::unknown ? kFail : kPass;
}

struct ReduceArgs {
    std::string id;
    std::string file;
    std::string output;
    std::size_t k = 0;
    std::string m_source;
    bool allow_star = false;
    bool pad_with_d = false;
    bool check = false;
    bool as_json = false;
};

int cmd_reduce(const ReduceArgs& a, std::size_t cap, std::istream& in, std::ostream& out, std::ostream& err)
{
    auto id = reduction_from_name(a.id);
    if (!id)
        throw UsageError("unknown reduction '" + a.id + "' (expected R1..R14)");
    auto input = parse_dimacs(read_input(a.file, in));
    ReductionParams params;
    if (a.k > 0)
        params.k = a.k;
    if (!a.m_source.empty())
        params.m_source = parse_dimacs(read_text_file(a.m_source));
    params.allow_star_source = a.allow_star;
    params.pad_with_d = a.pad_with_d;
    params.limits.enumeration_cap = cap;

    auto cert = apply_reduction(*id, input, params);
    auto text = emit_dimacs(cert.output, output_spec(*id, params));

    std::vector<VerificationReport> checks;
    if (a.check) {
        OracleLimits lim;
        lim.enumeration_cap = cap;
        auto spec = validate(cert.output, output_spec(*id, params));
        spec.subject = "output spec " + output_spec(*id, params).to_string();
        checks.push_back(spec);
        checks.push_back(check_traceability(cert));
        checks.push_back(check_equisat(cert, lim));
    }
    bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& r) { return r.ok; });

    if (!a.output.empty())
        write_text_file(a.output, text);
    if (a.as_json) {
        auto j = envelope("reduce");
        j["reduction"] = to_string(*id);
        j["input"] = {{"num_vars", input.num_vars()}, {"num_clauses", input.num_clauses()}};
        j["output"] = {{"num_vars", cert.output.num_vars()},
                       {"num_clauses", cert.output.num_clauses()},
                       {"variant", output_spec(*id, params).to_string()}};
        if (a.output.empty())
            j["output"]["dimacs"] = text;
        j["checks"] = json::array();
        for (const auto& r : checks)
            j["checks"].push_back(report_to_json(r));
        out << j.dump(2) << '\n';
    } else {
        std::ostream& report_stream = a.output.empty() ? err : out;
        if (a.output.empty())
            out << text;
        else
            out << to_string(*id) << ": " << cert.output.num_vars() << " vars, " << cert.output.num_clauses()
                << " clauses written to " << a.output << '\n';
        for (const auto& r : checks)
            print_report(report_stream, r);
    }
    return ok ? kPass : kFail;
}

int cmd_gadgets_list(bool as_json, std::ostream& out)
{
    if (as_json) {
        auto j = envelope("gadgets list");
        j["gadgets"] = json::array();
        for (const auto& row : catalogue())
            j["gadgets"].push_back({{"name", row.name},
                                    {"arity", row.boundary_arity},
                                    {"aux", row.aux_count},
                                    {"clauses", row.clause_count},
                                    {"mode", to_string(row.mode)},
                                    {"flavor", to_string(row.flavor)},
                                    {"compositional", row.compositional},
                                    {"accepted", row.accepted}});
        out << j.dump(2) << '\n';
        return kPass;
    }
    out << std::left << std::setw(12) << "name" << std::setw(7) << "arity" << std::setw(5) << "aux" << std::setw(9)
        << "clauses" << std::setw(6) << "mode" << std::setw(10) << "flavor" << std::setw(15) << "method"
        << "accepted\n";
    for (const auto& row : catalogue())
        out << std::left << std::setw(12) << row.name << std::setw(7) << row.boundary_arity << std::setw(5)
            << row.aux_count << std::setw(9) << row.clause_count << std::setw(6) << to_string(row.mode)
            << std::setw(10) << to_string(row.flavor) << std::setw(15)
            << (row.compositional ? "compositional" : "enumeration") << row.accepted << '\n';
    return kPass;
}

int cmd_gadgets_verify(const std::vector<std::string>& names, std::size_t cap, bool as_json, std::ostream& out)
{
    std::vector<GadgetKind> kinds;
    for (const auto& n : names) {
        if (n == "ALL" || n == "all") {
            for (const auto& row : catalogue())
                kinds.push_back(row.kind);
            continue;
        }
        auto k = gadget_from_name(n);
        if (!k)
            throw UsageError("unknown gadget '" + n + "'");
        kinds.push_back(*k);
    }
    bool ok = true;
    auto j = envelope("gadgets verify");
    j["results"] = json::array();
    auto start_all = std::chrono::steady_clock::now();
    for (auto k : kinds) {
        auto start = std::chrono::steady_clock::now();
        auto r = verify_gadget(k, cap);
        auto ms = elapsed_ms(start);
        ok = ok && r.ok;
        const auto& row = catalogue_row(k);
        if (as_json) {
            auto e = report_to_json(r);
            e["method"] = row.compositional ? "compositional" : "enumeration";
            e["elapsed_ms"] = ms;
            j["results"].push_back(e);
        } else {
            out << (r.ok ? "PASS " : "FAIL ") << std::left << std::setw(12) << row.name
                << (row.compositional ? "compositional " : "enumeration   ") << row.accepted << " (" << ms << " ms)";
            if (!r.ok) {
                out << ": " << r.reason;
                if (r.witness.assignment)
                    out << "\n  " << model_line(*r.witness.assignment);
            }
            out << '\n';
        }
    }
    auto total = elapsed_ms(start_all);
    if (as_json) {
        j["ok"] = ok;
        j["elapsed_ms"] = total;
        out << j.dump(2) << '\n';
    } else {
        out << (ok ? "all " : "some ") << kinds.size() << " gadgets " << (ok ? "verified" : "FAILED") << " in "
            << total << " ms\n";
    }
    return ok ? kPass : kFail;
}

int cmd_gadgets_emit(const std::string& name, std::ostream& out)
{
    auto k = gadget_from_name(name);
    if (!k)
        throw UsageError("unknown gadget '" + name + "'");
    const auto& row = catalogue_row(*k);
    std::vector<Var> boundary(row.boundary_arity);
    for (Var i = 0; i < boundary.size(); ++i)
        boundary[i] = i;
    FreshAllocator alloc(static_cast<Var>(boundary.size()));
    auto g = build_gadget(*k, boundary, alloc);
    out << "c gadget " << row.name << ", boundary 1.." << boundary.size() << ", accepts " << g.predicate.describe()
        << '\n';
    out << emit_dimacs(g.as_instance(alloc.next()));
    return kPass;
}

int cmd_witness(const std::string& name, bool list, bool certify, const std::string& output, bool as_json,
                std::ostream& out)
{
    if (list) {
        for (auto w : all_known_unsat()) {
            auto inst = known_unsat(w);
            out << to_string(w) << ": " << inst.num_vars() << " vars, " << inst.num_clauses() << " clauses\n";
        }
        return kPass;
    }
    if (name.empty())
        throw UsageError("witness name required (ss_bar, nine_var, mon51, hitting27)");
    auto w = known_unsat_from_name(name);
    if (!w)
        throw UsageError("unknown witness '" + name + "'");
    auto inst = known_unsat(*w);
    auto text = emit_dimacs(inst, witness_variant(*w));
    if (!output.empty())
        write_text_file(output, text);

    std::optional<VerificationReport> rep;
    if (certify)
        rep = certify_known_unsat(*w);
    if (as_json) {
        auto j = envelope("witness");
        j["name"] = name;
        j["num_vars"] = inst.num_vars();
        j["num_clauses"] = inst.num_clauses();
        if (output.empty())
            j["dimacs"] = text;
        if (rep)
            j["report"] = report_to_json(*rep);
        out << j.dump(2) << '\n';
    } else if (rep) {
        print_report(out, *rep);
    } else if (output.empty()) {
        out << text;
    }
    return !rep || rep->ok ? kPass : kFail;
}

struct SearchArgs {
    std::string profile = "2,2";
    std::size_t min_n = 0;
    std::size_t max_n = 9;
    std::uint64_t seed = 1;
    double timeout_s = 0;
    std::uint64_t budget = 2'000'000;
    std::uint64_t random = 0;
    unsigned workers = 1;
    std::string journal;
    std::string output;
    bool no_bounds = false;
    bool distinct_only = false;
    bool as_json = false;
};

int cmd_search(const SearchArgs& a, std::ostream& out)
{
    SearchOptions o;
    o.profile = parse_profile(a.profile);
    o.min_n = a.min_n;
    o.max_n = a.max_n;
    o.seed = a.seed;
    if (a.timeout_s > 0)
        o.timeout = std::chrono::milliseconds(static_cast<long long>(a.timeout_s * 1000));
    o.max_candidates = a.budget;
    o.random_samples = a.random;
    o.workers = std::max(1u, a.workers);
    o.respect_bounds = !a.no_bounds;
    o.allow_repeated_clauses = !a.distinct_only;

    std::ofstream journal;
    if (!a.journal.empty()) {
        journal.open(a.journal, std::ios::app);
        if (!journal)
            throw std::runtime_error("cannot open journal '" + a.journal + "'");
    }
    o.on_progress = [&](const JournalEntry& e) {
        if (journal.is_open())
            journal << journal_json(e, o.profile).dump() << '\n' << std::flush;
        if (!a.as_json)
            out << journal_text(e) << '\n' << std::flush;
    };

    SearchResult r;
    try {
        r = search_unsat(o);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::string summary;
    if (r.found) {
        summary = "unsatisfiable instance found with " + std::to_string(r.found->num_vars()) + " variables";
    } else if (r.exhausted_through) {
        summary = "no unsatisfiable instance for n <= " + std::to_string(*r.exhausted_through) +
                  " (exhausted modulo canonical form); no claim beyond";
    } else {
        summary = "nothing exhausted; no claim";
    }
    if (r.timed_out)
        summary += " (timed out)";

    std::string text;
    if (r.found) {
        text = emit_dimacs(*r.found, VariantSpec::exact(o.profile.first, o.profile.second));
        if (!a.output.empty())
            write_text_file(a.output, text);
    }
    const bool ok = !r.found || (r.certificate && r.certificate->ok);
    if (a.as_json) {
        auto j = envelope("search-unsat");
        j["profile"] = a.profile;
        j["journal"] = json::array();
        for (const auto& e : r.journal)
            j["journal"].push_back(journal_json(e, o.profile));
        j["exhausted_through"] = r.exhausted_through ? json(*r.exhausted_through) : json(nullptr);
        j["timed_out"] = r.timed_out;
        j["found"] = r.found.has_value();
        if (r.certificate)
            j["certificate"] = report_to_json(*r.certificate);
        if (r.found && a.output.empty())
            j["dimacs"] = text;
        j["summary"] = summary;
        out << j.dump(2) << '\n';
    } else {
        out << summary << '\n';
        if (r.certificate)
            print_report(out, *r.certificate);
        if (r.found && a.output.empty())
            out << text;
    }
    return ok ? kPass : kFail;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Restricted 3-SAT and NAE-3-SAT toolkit: validators, oracles, gadgets, reductions, witnesses"};
    app.name("rsat");
    app.require_subcommand(1);
    const std::size_t env_cap = enumeration_cap_from_env();

    // check
    auto* check = app.add_subcommand("check", "Validate a DIMACS file against a variant spec");
    std::string check_file, check_variant;
    bool check_json = false;
    check->add_option("file", check_file, "DIMACS file, or - for stdin")->required();
    check->add_option("--variant", check_variant, "Variant spec, e.g. mono-nae-e4-linear");
    check->add_flag("--json", check_json, "Machine-readable output");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Decide satisfiability under the file's mode");
    std::string solve_file, engine = "dpll", mode_override;
    std::size_t solve_cap = env_cap;
    double solve_timeout = 0;
    unsigned solve_workers = 1;
    bool solve_json = false;
    solve_cmd->add_option("file", solve_file, "DIMACS file, or - for stdin")->required();
    solve_cmd->add_option("--engine", engine, "exhaustive or dpll")
        ->check(CLI::IsMember({"exhaustive", "dpll"}))
        ->capture_default_str();
    solve_cmd->add_option("--mode", mode_override, "Override the file's mode")->check(CLI::IsMember({"sat", "nae"}));
    solve_cmd->add_option("--cap", solve_cap, "Exhaustive enumeration cap (RSAT_ORACLE_CAP)")->capture_default_str();
    solve_cmd->add_option("--timeout", solve_timeout, "DPLL time limit in seconds");
    solve_cmd->add_option("--workers", solve_workers, "Exhaustive worker threads (0 = all cores)");
    solve_cmd->add_flag("--json", solve_json, "Machine-readable output");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Apply a reduction R1..R14 and emit the output instance");
    ReduceArgs ra;
    std::size_t reduce_cap = env_cap;
    reduce->add_option("reduction", ra.id, "Reduction id, e.g. R5")->required();
    reduce->add_option("file", ra.file, "DIMACS input, or - for stdin")->required();
    reduce->add_option("-o,--output", ra.output, "Write the output DIMACS here");
    reduce->add_option("--k", ra.k, "Appearance level k for R6 and R8");
    reduce->add_option("--m-source", ra.m_source, "Unsatisfiable monotone (2,2) parameter for R10");
    reduce->add_flag("--allow-star-source", ra.allow_star, "R10: accept a parameter with repeated literals");
    reduce->add_flag("--pad-with-d", ra.pad_with_d, "R7: pad with D gadgets");
    reduce->add_flag("--check", ra.check, "Validate output, traceability and equisatisfiability");
    reduce->add_option("--cap", reduce_cap, "Exhaustive enumeration cap (RSAT_ORACLE_CAP)")->capture_default_str();
    reduce->add_flag("--json", ra.as_json, "Machine-readable output");

    // gadgets
    auto* gadgets = app.add_subcommand("gadgets", "Gadget catalogue");
    gadgets->require_subcommand(1);
    auto* glist = gadgets->add_subcommand("list", "List the catalogue");
    bool glist_json = false;
    glist->add_flag("--json", glist_json, "Machine-readable output");
    auto* gverify = gadgets->add_subcommand("verify", "Verify gadgets (names or ALL)");
    std::vector<std::string> gnames;
    std::size_t gcap = env_cap;
    bool gverify_json = false;
    gverify->add_option("names", gnames, "Gadget names or ALL")->required();
    gverify->add_option("--cap", gcap, "Exhaustive enumeration cap (RSAT_ORACLE_CAP)")->capture_default_str();
    gverify->add_flag("--json", gverify_json, "Machine-readable output");
    auto* gemit = gadgets->add_subcommand("emit", "Print a gadget on boundary variables 1..k as DIMACS");
    std::string gemit_name;
    gemit->add_option("name", gemit_name, "Gadget name")->required();

    // witness
    auto* witness = app.add_subcommand("witness", "Emit or certify a known unsatisfiable instance");
    std::string wname, woutput;
    bool wlist = false, wcertify = false, wjson = false;
    witness->add_option("name", wname, "ss_bar, nine_var, mon51 or hitting27");
    witness->add_flag("--list", wlist, "List the known instances");
    witness->add_flag("--certify", wcertify, "Certify unsatisfiability instead of printing DIMACS");
    witness->add_option("-o,--output", woutput, "Write the DIMACS here");
    witness->add_flag("--json", wjson, "Machine-readable output");

    // search-unsat
    auto* search = app.add_subcommand("search-unsat", "Search for unsatisfiable monotone instances");
    SearchArgs sa;
    search->add_option("--profile", sa.profile, "2,2 or 3,1 or 4,1 or 5,1")->capture_default_str();
    search->add_option("--min-n", sa.min_n, "Smallest n (default: smallest admissible)");
    search->add_option("--max-n", sa.max_n, "Largest n")->capture_default_str();
    search->add_option("--seed", sa.seed, "Random seed")->capture_default_str();
    search->add_option("--timeout", sa.timeout_s, "Wall-clock limit in seconds");
    search->add_option("--budget", sa.budget, "Exhaustive candidates per n")->capture_default_str();
    search->add_option("--random", sa.random, "Random samples per n after a partial exhaustive phase");
    search->add_option("--workers", sa.workers, "Worker threads")->capture_default_str();
    search->add_option("--journal", sa.journal, "Append JSON lines with per-n progress");
    search->add_option("-o,--output", sa.output, "Write a found instance here");
    search->add_flag("--no-bounds", sa.no_bounds, "Also search sizes a known bound settles");
    search->add_flag("--distinct-only", sa.distinct_only, "Skip instances with a repeated clause");
    search->add_flag("--json", sa.as_json, "Machine-readable output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*check)
            return cmd_check(check_file, check_variant, check_json, in, out);
        if (*solve_cmd)
            return cmd_solve(solve_file, engine, mode_override, solve_cap, solve_timeout, solve_workers, solve_json,
                             in, out);
        if (*reduce)
            return cmd_reduce(ra, reduce_cap, in, out, err);
        if (*glist)
            return cmd_gadgets_list(glist_json, out);
        if (*gverify)
            return cmd_gadgets_verify(gnames, gcap, gverify_json, out);
        if (*gemit)
            return cmd_gadgets_emit(gemit_name, out);
        if (*witness)
            return cmd_witness(wname, wlist, wcertify, woutput, wjson, out);
        if (*search)
            return cmd_search(sa, out);
    } catch (const UsageError& e) {
        err << "rsat: " << e.what() << '\n';
        return kUsage;
    } catch (const DimacsError& e) {
        err << "rsat: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        // Inputs that violate a precondition, such as a reduction's input spec.
        err << "rsat: " << e.what() << '\n';
        return kFail;
    } catch (const std::exception& e) {
        err << "rsat: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace rsat::cli
