#include "rsat/variant.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rsat {

namespace {

std::vector<std::string_view> split_dash(std::string_view text)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('-', start);
        if (end == std::string_view::npos)
            end = text.size();
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

std::optional<std::size_t> to_number(std::string_view s)
{
    if (s.empty())
        return std::nullopt;
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        return std::nullopt;
    return v;
}

bool is_choice_pair(std::string_view s)
{
    return s.size() == 2 && std::isdigit(static_cast<unsigned char>(s[0])) &&
           std::isdigit(static_cast<unsigned char>(s[1]));
}

[[noreturn]] void bad(std::string_view text, const std::string& why)
{
    throw std::invalid_argument("variant '" + std::string(text) + "': " + why);
}

std::string describe(Literal l) { return std::to_string(l.dimacs()); }

} // namespace

VariantSpec VariantSpec::parse(std::string_view text)
{
    VariantSpec s;
    auto tok = split_dash(text);
    for (std::size_t i = 0; i < tok.size(); ++i) {
        auto t = tok[i];
        if (t == "mono") {
            if (i + 1 >= tok.size())
                bad(text, "'mono' must be followed by 'sat' or 'nae'");
            auto kind = tok[++i];
            if (kind == "sat")
                s.monotonicity = Monotonicity::sat_monotone;
            else if (kind == "nae")
                s.monotonicity = Monotonicity::nae_monotone;
            else
                bad(text, "'mono' must be followed by 'sat' or 'nae'");
        } else if (t == "linear") {
            s.linearity = Linearity::linear;
        } else if (t == "xlinear") {
            s.linearity = Linearity::exact_linear;
        } else if (t == "star") {
            s.duplicates_allowed = true;
        } else if (t == "distinct") {
            s.distinct_clauses = true;
        } else if (t == "anyk") {
            s.clause_arity.reset();
        } else if (t == "choice") {
            std::size_t consumed = 0;
            while (i + 1 < tok.size() && is_choice_pair(tok[i + 1])) {
                auto pair = tok[++i];
                s.allowed_profiles.emplace_back(pair[0] - '0', pair[1] - '0');
                ++consumed;
            }
            if (consumed == 0)
                bad(text, "'choice' needs at least one two-digit pq pair");
        } else if (t.size() > 1 && t[0] == 'k' && to_number(t.substr(1))) {
            s.clause_arity = *to_number(t.substr(1));
        } else if (t.size() > 1 && t[0] == 'e' && to_number(t.substr(1))) {
            s.total_appearances = *to_number(t.substr(1));
        } else if (t.size() > 3 && t[0] == 'p' && t.find('q') != std::string_view::npos) {
            auto qpos = t.find('q');
            auto p = to_number(t.substr(1, qpos - 1));
            auto q = to_number(t.substr(qpos + 1));
            if (!p || !q)
                bad(text, "malformed profile token '" + std::string(t) + "'");
            s.allowed_profiles = {{*p, *q}};
        } else {
            bad(text, "unknown token '" + std::string(t) + "'");
        }
    }
    return s;
}

std::string VariantSpec::to_string() const
{
    std::vector<std::string> parts;
    if (monotonicity == Monotonicity::sat_monotone)
        parts.emplace_back("mono-sat");
    else if (monotonicity == Monotonicity::nae_monotone)
        parts.emplace_back("mono-nae");
    if (!clause_arity)
        parts.emplace_back("anyk");
    else if (*clause_arity != 3 || (parts.empty() && !duplicates_allowed && !total_appearances &&
                                    allowed_profiles.empty() && linearity == Linearity::no_check &&
                                    !distinct_clauses))
        parts.push_back("k" + std::to_string(*clause_arity));
    if (duplicates_allowed)
        parts.emplace_back("star");
    if (total_appearances)
        parts.push_back("e" + std::to_string(*total_appearances));
    if (allowed_profiles.size() == 1) {
        parts.push_back("p" + std::to_string(allowed_profiles[0].first) + "q" +
                        std::to_string(allowed_profiles[0].second));
    } else if (!allowed_profiles.empty()) {
        std::string c = "choice";
        for (auto [p, q] : allowed_profiles)
            c += "-" + std::to_string(p) + std::to_string(q);
        parts.push_back(c);
    }
    if (linearity == Linearity::linear)
        parts.emplace_back("linear");
    else if (linearity == Linearity::exact_linear)
        parts.emplace_back("xlinear");
    if (distinct_clauses)
        parts.emplace_back("distinct");

    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += '-';
        out += p;
    }
    return out;
}

VerificationReport is_linear(const CnfInstance& inst, bool exact)
{
    const std::string subject = exact ? "exact-linear" : "linear";
    for (std::size_t i = 0; i < inst.num_clauses(); ++i)
        if (inst.clause(i).flavor() == Flavor::multiset)
            throw std::invalid_argument("linearity is only defined for set clauses (clause " +
                                        std::to_string(i) + " is a multiset)");

    std::vector<std::vector<Var>> vars;
    vars.reserve(inst.num_clauses());
    for (const auto& c : inst.clauses())
        vars.push_back(c.variables());

    for (std::size_t i = 0; i < vars.size(); ++i) {
        for (std::size_t j = i + 1; j < vars.size(); ++j) {
            std::vector<Var> shared;
            std::set_intersection(vars[i].begin(), vars[i].end(), vars[j].begin(), vars[j].end(),
                                  std::back_inserter(shared));
            if (shared.size() > 1 || (exact && shared.size() != 1)) {
                Witness w;
                w.clauses = {i, j};
                w.variables = shared;
                return VerificationReport::fail(subject,
                                                "clauses " + std::to_string(i) + " and " + std::to_string(j) +
                                                    " share " + std::to_string(shared.size()) + " variables",
                                                std::move(w));
            }
        }
    }
    return VerificationReport::pass(subject);
}

VerificationReport validate(const CnfInstance& inst, const VariantSpec& spec)
{
    const std::string subject = "variant " + spec.to_string();

    for (std::size_t i = 0; i < inst.num_clauses(); ++i) {
        const auto& c = inst.clause(i);
        if (spec.clause_arity && c.size() != *spec.clause_arity) {
            Witness w;
            w.clauses = {i};
            return VerificationReport::fail(subject,
                                            "clause " + std::to_string(i) + " has " + std::to_string(c.size()) +
                                                " literals, expected " + std::to_string(*spec.clause_arity),
                                            std::move(w));
        }
    }

    if (!spec.duplicates_allowed) {
        for (std::size_t i = 0; i < inst.num_clauses(); ++i) {
            const auto& c = inst.clause(i);
            if (c.variables().size() != c.size()) {
                Witness w;
                w.clauses = {i};
                return VerificationReport::fail(subject,
                                                "clause " + std::to_string(i) + " repeats a variable",
                                                std::move(w));
            }
        }
    }

    for (std::size_t i = 0; i < inst.num_clauses(); ++i) {
        const auto& c = inst.clause(i);
        bool ok = true;
        std::string why;
        if (spec.monotonicity == Monotonicity::sat_monotone && !c.all_positive() && !c.all_negative()) {
            ok = false;
            why = "mixes negated and unnegated literals";
        } else if (spec.monotonicity == Monotonicity::nae_monotone && !c.all_positive()) {
            ok = false;
            why = "contains a negated literal";
        }
        if (!ok) {
            Witness w;
            w.clauses = {i};
            return VerificationReport::fail(subject, "clause " + std::to_string(i) + " " + why, std::move(w));
        }
    }

    if (spec.total_appearances || !spec.allowed_profiles.empty()) {
        auto prof = appearance_profile(inst);
        for (Var v = 0; v < prof.size(); ++v) {
            const auto& a = prof[v];
            std::ostringstream got;
            got << "(" << a.positive << "," << a.negative << ")";
            if (spec.total_appearances && a.total() != *spec.total_appearances) {
                Witness w;
                w.variables = {v};
                return VerificationReport::fail(subject,
                                                "variable " + std::to_string(v + 1) + " appears " +
                                                    std::to_string(a.total()) + " times, expected " +
                                                    std::to_string(*spec.total_appearances),
                                                std::move(w));
            }
            if (!spec.allowed_profiles.empty()) {
                bool match = std::any_of(spec.allowed_profiles.begin(), spec.allowed_profiles.end(),
                                         [&](auto pq) { return pq.first == a.positive && pq.second == a.negative; });
                if (!match) {
                    Witness w;
                    w.variables = {v};
                    return VerificationReport::fail(
                        subject, "variable " + std::to_string(v + 1) + " has profile " + got.str(), std::move(w));
                }
            }
        }
    }

    if (spec.linearity != Linearity::no_check) {
        for (std::size_t i = 0; i < inst.num_clauses(); ++i) {
            if (inst.clause(i).flavor() == Flavor::multiset) {
                Witness w;
                w.clauses = {i};
                return VerificationReport::fail(subject, "linearity requested on multiset clause " +
                                                             std::to_string(i),
                                                std::move(w));
            }
        }
        auto lin = is_linear(inst, spec.linearity == Linearity::exact_linear);
        if (!lin.ok) {
            lin.subject = subject;
            return lin;
        }
    }

    if (spec.distinct_clauses) {
        std::map<std::vector<Literal>, std::size_t> seen;
        for (std::size_t i = 0; i < inst.num_clauses(); ++i) {
            auto [it, fresh] = seen.emplace(inst.clause(i).literals(), i);
            if (!fresh) {
                Witness w;
                w.clauses = {it->second, i};
                std::string lits;
                for (auto l : inst.clause(i))
                    lits += " " + describe(l);
                return VerificationReport::fail(subject,
                                                "clauses " + std::to_string(it->second) + " and " +
                                                    std::to_string(i) + " are identical:" + lits,
                                                std::move(w));
            }
        }
    }

    return VerificationReport::pass(subject);
}

} // namespace rsat
