#include "rsat/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace rsat {

DimacsError::DimacsError(std::size_t line, const std::string& what)
    : std::invalid_argument(line == 0 ? "end of input: " + what : "line " + std::to_string(line) + ": " + what),
      line_(line)
{
}

namespace {

std::vector<std::string_view> split_words(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view word, std::size_t line)
{
    long long v = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc{} || ptr != word.data() + word.size())
        throw DimacsError(line, "expected an integer, got '" + std::string(word) + "'");
    return v;
}

struct RawClause {
    std::vector<Literal> lits;
    std::size_t line;
};

} // namespace

DimacsFile parse_dimacs_file(std::string_view text)
{
    Mode mode = Mode::sat;
    bool duplicates = false;
    std::optional<VariantSpec> variant;
    std::vector<std::size_t> set_clauses;
    std::optional<std::size_t> num_vars, num_clauses;
    std::vector<RawClause> raw;
    std::vector<Literal> current;
    std::size_t current_line = 0;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto words = split_words(line);
        if (words.empty())
            continue;

        if (words[0].front() == 'c') {
            if (words.size() >= 3 && words[1] == "mode") {
                if (words[2] == "sat")
                    mode = Mode::sat;
                else if (words[2] == "nae")
                    mode = Mode::nae;
                else
                    throw DimacsError(line_no, "unknown mode '" + std::string(words[2]) + "'");
            } else if (words.size() >= 3 && words[1] == "duplicates") {
                if (words[2] == "allowed")
                    duplicates = true;
                else if (words[2] == "forbidden")
                    duplicates = false;
                else
                    throw DimacsError(line_no, "expected 'allowed' or 'forbidden'");
            } else if (words.size() >= 3 && words[1] == "variant") {
                try {
                    variant = VariantSpec::parse(words[2]);
                } catch (const std::invalid_argument& e) {
                    throw DimacsError(line_no, e.what());
                }
            } else if (words.size() >= 2 && words[1] == "set-clauses") {
                for (std::size_t i = 2; i < words.size(); ++i) {
                    auto v = parse_int(words[i], line_no);
                    if (v <= 0)
                        throw DimacsError(line_no, "clause index must be positive");
                    set_clauses.push_back(static_cast<std::size_t>(v - 1));
                }
            }
            continue;
        }
        if (words[0] == "%")
            break; // end marker used by some benchmark sets
        if (words[0] == "p") {
            if (num_vars)
                throw DimacsError(line_no, "second problem line");
            if (words.size() != 4 || words[1] != "cnf")
                throw DimacsError(line_no, "expected 'p cnf <vars> <clauses>'");
            auto v = parse_int(words[2], line_no);
            auto c = parse_int(words[3], line_no);
            if (v < 0 || c < 0)
                throw DimacsError(line_no, "negative count in problem line");
            num_vars = static_cast<std::size_t>(v);
            num_clauses = static_cast<std::size_t>(c);
            continue;
        }
        if (!num_vars)
            throw DimacsError(line_no, "clause before the problem line");
        for (auto w : words) {
            auto v = parse_int(w, line_no);
            if (current.empty())
                current_line = line_no;
            if (v == 0) {
                raw.push_back({std::move(current), current_line == 0 ? line_no : current_line});
                current.clear();
                current_line = 0;
                continue;
            }
            auto mag = static_cast<std::size_t>(v < 0 ? -v : v);
            if (mag > *num_vars)
                throw DimacsError(line_no, "literal " + std::string(w) + " out of range 1.." +
                                               std::to_string(*num_vars));
            current.push_back(Literal::from_dimacs(v));
        }
    }

    if (!num_vars)
        throw DimacsError(0, "missing problem line");
    if (!current.empty())
        throw DimacsError(0, "last clause lacks its 0 terminator (started on line " + std::to_string(current_line) +
                                 ")");
    if (raw.size() != *num_clauses)
        throw DimacsError(0, "problem line declares " + std::to_string(*num_clauses) + " clauses, found " +
                                 std::to_string(raw.size()));

    std::vector<bool> is_set(raw.size(), !duplicates);
    for (auto idx : set_clauses) {
        if (idx >= raw.size())
            throw DimacsError(0, "set-clauses index " + std::to_string(idx + 1) + " out of range");
        is_set[idx] = true;
    }

    std::vector<Clause> clauses;
    clauses.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        try {
            clauses.emplace_back(std::move(raw[i].lits), is_set[i] ? Flavor::set : Flavor::multiset);
        } catch (const std::invalid_argument& e) {
            throw DimacsError(raw[i].line, e.what());
        }
    }
    return DimacsFile{CnfInstance{*num_vars, std::move(clauses), mode}, variant};
}

CnfInstance parse_dimacs(std::string_view text) { return parse_dimacs_file(text).instance; }

std::string emit_dimacs(const CnfInstance& inst, const std::optional<VariantSpec>& variant)
{
    std::ostringstream out;
    out << "c mode " << to_string(inst.mode()) << '\n';
    std::vector<std::size_t> set_idx;
    for (std::size_t i = 0; i < inst.num_clauses(); ++i)
        if (inst.clause(i).flavor() == Flavor::set)
            set_idx.push_back(i);
    const bool any_multiset = set_idx.size() != inst.num_clauses();
    out << "c duplicates " << (any_multiset ? "allowed" : "forbidden") << '\n';
    if (any_multiset && !set_idx.empty()) {
        out << "c set-clauses";
        for (auto i : set_idx)
            out << ' ' << i + 1;
        out << '\n';
    }
    if (variant)
        out << "c variant " << variant->to_string() << '\n';
    out << "p cnf " << inst.num_vars() << ' ' << inst.num_clauses() << '\n';
    for (const auto& c : inst.clauses()) {
        for (auto l : c)
            out << l.dimacs() << ' ';
        out << "0\n";
    }
    return out.str();
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

} // namespace rsat
