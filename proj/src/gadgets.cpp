#include "rsat/gadgets.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rsat {

namespace {

// Clause templates. Tokens name a boundary slot or an auxiliary variable;
// a leading '-' negates. Numbering follows the published lists.
struct Template {
    std::vector<std::string> slots;
    std::vector<std::string> aux;
    std::vector<std::string> clauses;
};

const Template kNe6{{"x", "y"}, {"a", "b", "u", "v", "w"}, {"x y a", "x y b", "a b u", "a b v", "a b w", "u v w"}};

const Template kP1{{"x"}, {"a", "b", "c", "d", "e"}, {"x a b", "a c d", "a b e", "a d e", "b c d", "b c e", "c d e"}};

const Template kNe9{{"x", "y"},
                    {"a", "b", "c", "d", "e", "f"},
                    {"x a b", "y c d", "y e f", "c e f", "b c e", "a c f", "a d e", "a b d", "b d f"}};

const Template kEq13{{"x", "y"},
                     {"a", "b", "c", "d", "e", "f", "g", "h", "i"},
                     {"x a b", "y c d", "y e f", "a c g", "a e d", "a h i", "b e h", "b f h", "b g i", "c e i",
                      "c f g", "d g h", "d f i"}};

const Template kEq4l{{"x", "y", "z", "u"},
                     {"a", "b", "c", "d", "e", "f"},
                     {"x a e", "x b d", "x c f", "y a b", "y c e", "y d f", "z a f", "z c d", "z u b", "u a c",
                      "u d e", "b e f"}};

const Template kS{{"x", "y", "z"},
                  {"a", "b", "c", "d", "e", "f"},
                  {"x a b", "y c d", "z e f", "a c f", "a d e", "b c e", "b d f", "-a -c -f", "-a -d -e", "-a -e -f",
                   "-b -c -d", "-b -c -e", "-b -d -f"}};

const Template kA{{"x", "y"},
                  {"a", "b", "c", "d"},
                  {"-a -b -x", "-a -c -x", "-a -d -x", "-b -c -y", "-b -d -y", "-c -d -y", "a b c", "a b d", "a c d",
                   "b c d"}};

const Template kD{{"x1", "x2", "x3", "x4", "x5", "x6"},
                  {"a", "b", "c", "d", "e", "f", "g", "h", "i"},
                  {"-a -c -e", "-b -f -h", "-d -g -i", "a b d", "a d f", "a f i", "a h i", "b c d", "b c g", "b e g",
                   "c g h", "c h i", "e f g", "e f i", "a g x1", "b i x2", "c f x3", "d e x4", "d h x5", "e h x6"}};

const Template kG{{"x", "y", "z"},
                  {"a", "b", "c", "d", "e", "f"},
                  {"-a -b -f", "-a -c -d", "-b -c -e", "-d -e -f", "a b f", "a c d", "b c e", "d e f", "a e x",
                   "b d y", "c f z"}};

const Template kH{{"x", "y", "z"},
                  {"a", "b", "c", "d", "e", "f", "g", "h", "i"},
                  {"-a -d -x", "-b -g -y", "-f -i -z", "-a -b -e", "-c -e -i", "-c -g -h", "-d -f -h", "a c f",
                   "a f g", "a g h", "b c d", "b e h", "b h i", "c e i", "d e f", "d g i"}};

const Template kC12{{"x", "y"},
                    {"a", "b", "c", "d", "e", "f", "g", "h"},
                    {"-a -c -e", "-a -c -f", "-a -d -g", "-b -c -h", "-b -e -g", "-b -f -g", "-d -e -h", "-d -f -h",
                     "a b x", "c d x", "e f x", "g h y"}};

const Template kChain22{{"x1", "x2", "x3", "x4", "x5", "x6"},
                        {},
                        {"x1 x2", "-x2 -x3", "x3 x4", "-x4 -x5", "x5 x6", "-x6 -x1"}};

const Template kChain22Neg{{"x1", "x2", "x3", "x4", "x5", "x6"}, {}, {"-x1 -x2 -x6", "-x3 -x4 -x5"}};

const Template kStar22{{"x1", "x2", "x3", "x4", "x5", "x6"},
                       {"y1", "y2", "y3", "y4", "y5", "y6", "y7", "y8", "y9"},
                       {"x1 y9 y9", "-x1 -y1 -y1", "-x1 -y2 -y2", "x2 y1 y1", "x2 y2 y2", "-x2 -y3 -y3",
                        "x3 y3 y3", "-x3 -y4 -y4", "-x3 -y5 -y5", "x4 y4 y4", "x4 y5 y5", "-x4 -y6 -y6",
                        "x5 y6 y6", "-x5 -y7 -y7", "-x5 -y8 -y8", "x6 y7 y7", "x6 y8 y8", "-x6 -y9 -y9"}};

const Template kInc32{{"x", "y", "z"},
                      {"a", "b", "c", "d", "e", "f"},
                      {"a b x", "c d y", "e f z", "a b c", "a b d", "a e f", "b e f", "c d e", "c d f", "-a -b -d",
                       "-a -b -f", "-c -d -e", "-c -e -f"}};

bool all_equal_bits(std::uint64_t p, std::initializer_list<int> bits)
{
    bool first = ((p >> *bits.begin()) & 1u) != 0;
    return std::all_of(bits.begin(), bits.end(), [&](int b) { return (((p >> b) & 1u) != 0) == first; });
}

/// Accepted slot patterns; bit i holds slot i.
bool slot_accepts(GadgetKind k, std::uint64_t p, std::size_t arity)
{
    const std::uint64_t all = (std::uint64_t{1} << arity) - 1;
    switch (k) {
    case GadgetKind::ne6:
    case GadgetKind::ne9:
        return p == 1 || p == 2;
    case GadgetKind::eq_ne:
    case GadgetKind::eq13:
    case GadgetKind::eq4l:
    case GadgetKind::star22:
        return p == 0 || p == all;
    case GadgetKind::p1:
    case GadgetKind::inc32:
        return true;
    case GadgetKind::s:
    case GadgetKind::d:
    case GadgetKind::g:
    case GadgetKind::c12:
    case GadgetKind::b:
        return p != 0;
    case GadgetKind::s_bar:
    case GadgetKind::a:
    case GadgetKind::h:
    case GadgetKind::b_bar:
        return p != all;
    case GadgetKind::f:
        return p == 1;
    case GadgetKind::chain22:
        return all_equal_bits(p, {0, 2, 4}) && all_equal_bits(p, {1, 3, 5}) && ((p & 1u) != ((p >> 1) & 1u));
    case GadgetKind::chain22_neg:
        return !((p & 0b100011u) == 0b100011u) && !((p & 0b011100u) == 0b011100u);
    }
    return false;
}

const std::vector<CatalogueRow>& rows()
{
    static const std::vector<CatalogueRow> r{
        {GadgetKind::ne6, "NE6", 2, 5, 6, Mode::nae, Flavor::set, false, "x != y"},
        {GadgetKind::eq_ne, "EQ_NE", 2, 13, 14, Mode::nae, Flavor::set, false, "x = y"},
        {GadgetKind::p1, "P1", 1, 5, 7, Mode::nae, Flavor::set, false, "any"},
        {GadgetKind::ne9, "NE9", 2, 6, 9, Mode::nae, Flavor::set, false, "x != y"},
        {GadgetKind::eq13, "EQ13", 2, 9, 13, Mode::nae, Flavor::set, false, "x = y"},
        {GadgetKind::eq4l, "EQ4L", 4, 6, 12, Mode::nae, Flavor::set, false, "x = y = z = u"},
        {GadgetKind::s, "S", 3, 6, 13, Mode::sat, Flavor::set, false, "at least one true"},
        {GadgetKind::s_bar, "S_BAR", 3, 6, 13, Mode::sat, Flavor::set, false, "at least one false"},
        {GadgetKind::a, "A", 2, 4, 10, Mode::sat, Flavor::set, false, "at least one false"},
        {GadgetKind::d, "D", 6, 9, 20, Mode::sat, Flavor::set, false, "at least one true"},
        {GadgetKind::f, "F", 1, 30, 61, Mode::sat, Flavor::set, true, "y true"},
        {GadgetKind::g, "G", 3, 6, 11, Mode::sat, Flavor::set, false, "at least one true"},
        {GadgetKind::h, "H", 3, 9, 16, Mode::sat, Flavor::set, false, "at least one false"},
        {GadgetKind::c12, "C12", 2, 8, 12, Mode::sat, Flavor::set, false, "at least one true"},
        {GadgetKind::b, "B", 3, 27, 37, Mode::sat, Flavor::set, true, "at least one true"},
        {GadgetKind::b_bar, "B_BAR", 3, 27, 37, Mode::sat, Flavor::set, true, "at least one false"},
        {GadgetKind::chain22, "CHAIN22", 6, 0, 6, Mode::sat, Flavor::set, false, "x1 = x3 = x5 != x2 = x4 = x6"},
        {GadgetKind::chain22_neg, "CHAIN22_NEG", 6, 0, 2, Mode::sat, Flavor::set, false,
         "not (x1 and x2 and x6) and not (x3 and x4 and x5)"},
        {GadgetKind::star22, "STAR22", 6, 9, 18, Mode::sat, Flavor::multiset, false, "x1 = ... = x6"},
        {GadgetKind::inc32, "INC32", 3, 6, 13, Mode::sat, Flavor::set, false, "any"},
    };
    return r;
}

const Template* template_for(GadgetKind k)
{
    switch (k) {
    case GadgetKind::ne6:
        return &kNe6;
    case GadgetKind::p1:
        return &kP1;
    case GadgetKind::ne9:
        return &kNe9;
    case GadgetKind::eq13:
        return &kEq13;
    case GadgetKind::eq4l:
        return &kEq4l;
    case GadgetKind::s:
    case GadgetKind::s_bar:
        return &kS;
    case GadgetKind::a:
        return &kA;
    case GadgetKind::d:
        return &kD;
    case GadgetKind::g:
        return &kG;
    case GadgetKind::h:
        return &kH;
    case GadgetKind::c12:
        return &kC12;
    case GadgetKind::chain22:
        return &kChain22;
    case GadgetKind::chain22_neg:
        return &kChain22Neg;
    case GadgetKind::star22:
        return &kStar22;
    case GadgetKind::inc32:
        return &kInc32;
    default:
        return nullptr;
    }
}

BoundaryPredicate make_predicate(GadgetKind k, const std::vector<Var>& slots)
{
    std::vector<Var> distinct;
    std::vector<std::size_t> index(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
        auto it = std::find(distinct.begin(), distinct.end(), slots[i]);
        index[i] = static_cast<std::size_t>(it - distinct.begin());
        if (it == distinct.end())
            distinct.push_back(slots[i]);
    }
    return BoundaryPredicate::from_function(distinct, [&](std::uint64_t q) {
        std::uint64_t p = 0;
        for (std::size_t i = 0; i < slots.size(); ++i)
            p |= ((q >> index[i]) & 1u) << i;
        return slot_accepts(k, p, slots.size());
    });
}

GadgetInstance instantiate(GadgetKind kind, const Template& t, std::span<const Var> boundary, FreshAllocator& alloc,
                           bool flip, Flavor flavor)
{
    GadgetInstance g;
    g.kind = kind;
    g.boundary.assign(boundary.begin(), boundary.end());
    g.mode = catalogue_row(kind).mode;
    std::map<std::string, Var, std::less<>> names;
    for (std::size_t i = 0; i < t.slots.size(); ++i)
        names[t.slots[i]] = boundary[i];
    for (const auto& a : t.aux) {
        Var v = alloc.fresh();
        names[a] = v;
        g.aux.push_back(v);
    }
    for (std::size_t ci = 0; ci < t.clauses.size(); ++ci) {
        std::istringstream in(t.clauses[ci]);
        std::vector<Literal> lits;
        for (std::string tok; in >> tok;) {
            bool negated = tok[0] == '-';
            if (negated)
                tok.erase(0, 1);
            lits.emplace_back(names.at(tok), negated != flip);
        }
        try {
            g.clauses.emplace_back(std::move(lits), flavor);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(catalogue_row(kind).name + " clause " + std::to_string(ci + 1) +
                                        " after substitution: " + e.what());
        }
    }
    g.predicate = make_predicate(kind, g.boundary);
    return g;
}

GadgetInstance flipped(GadgetInstance g, GadgetKind as)
{
    g.kind = as;
    for (auto& c : g.clauses)
        c = c.flipped();
    for (auto& c : g.glue)
        c = c.flipped();
    for (auto& p : g.parts)
        p = flipped(std::move(p), p.kind);
    g.predicate = g.predicate.complemented_image();
    return g;
}

GadgetInstance composite(GadgetKind kind, std::span<const Var> boundary, std::vector<Var> interface,
                         std::vector<GadgetInstance> parts, std::vector<Clause> glue)
{
    GadgetInstance g;
    g.kind = kind;
    g.boundary.assign(boundary.begin(), boundary.end());
    g.mode = catalogue_row(kind).mode;
    g.aux = std::move(interface);
    for (const auto& p : parts) {
        g.aux.insert(g.aux.end(), p.aux.begin(), p.aux.end());
        g.clauses.insert(g.clauses.end(), p.clauses.begin(), p.clauses.end());
    }
    g.clauses.insert(g.clauses.end(), glue.begin(), glue.end());
    g.parts = std::move(parts);
    g.glue = std::move(glue);
    g.predicate = make_predicate(kind, g.boundary);
    return g;
}

std::string upper(std::string_view s)
{
    std::string out(s);
    for (auto& c : out)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

std::string to_string(GadgetKind k) { return catalogue_row(k).name; }

std::optional<GadgetKind> gadget_from_name(std::string_view name)
{
    auto u = upper(name);
    if (u == "SBAR" || u == "S-BAR")
        u = "S_BAR";
    if (u == "BBAR" || u == "B-BAR")
        u = "B_BAR";
    for (const auto& r : rows())
        if (r.name == u)
            return r.kind;
    return std::nullopt;
}

const std::vector<CatalogueRow>& catalogue() { return rows(); }

const CatalogueRow& catalogue_row(GadgetKind k)
{
    for (const auto& r : rows())
        if (r.kind == k)
            return r;
    throw std::invalid_argument("unknown gadget kind");
}

std::vector<Var> FreshAllocator::fresh(std::size_t count)
{
    std::vector<Var> out(count);
    for (auto& v : out)
        v = next_++;
    return out;
}

CnfInstance GadgetInstance::as_instance(std::size_t num_vars) const { return CnfInstance{num_vars, clauses, mode}; }

GadgetInstance build_gadget(GadgetKind kind, std::span<const Var> boundary, FreshAllocator& alloc)
{
    const auto& row = catalogue_row(kind);
    if (boundary.size() != row.boundary_arity)
        throw std::invalid_argument(row.name + " takes " + std::to_string(row.boundary_arity) +
                                    " boundary variables, got " + std::to_string(boundary.size()));
    for (auto v : boundary)
        if (v >= alloc.next())
            throw std::invalid_argument(row.name + ": boundary variable " + std::to_string(v + 1) +
                                        " was not allocated");

    switch (kind) {
    case GadgetKind::eq_ne: {
        auto pqr = alloc.fresh(3);
        std::vector<GadgetInstance> parts;
        std::vector<Var> pq{pqr[0], pqr[1]}, pr{pqr[0], pqr[2]};
        parts.push_back(build_gadget(GadgetKind::ne6, pq, alloc));
        parts.push_back(build_gadget(GadgetKind::ne6, pr, alloc));
        std::vector<Clause> glue{Clause{pos(boundary[0]), pos(pqr[1]), pos(pqr[2])},
                                 Clause{pos(boundary[1]), pos(pqr[1]), pos(pqr[2])}};
        return composite(kind, boundary, pqr, std::move(parts), std::move(glue));
    }
    case GadgetKind::f: {
        auto u = alloc.fresh(3);
        std::vector<GadgetInstance> parts;
        for (auto ui : u) {
            std::vector<Var> x{boundary[0], ui, ui, ui, ui, ui};
            parts.push_back(build_gadget(GadgetKind::d, x, alloc));
        }
        std::vector<Clause> glue{Clause{neg(u[0]), neg(u[1]), neg(u[2])}};
        return composite(kind, boundary, u, std::move(parts), std::move(glue));
    }
    case GadgetKind::b: {
        auto uvw = alloc.fresh(3);
        std::vector<GadgetInstance> parts;
        for (int i = 0; i < 3; ++i) {
            std::vector<Var> xy{uvw[i], boundary[i]};
            parts.push_back(build_gadget(GadgetKind::c12, xy, alloc));
        }
        std::vector<Clause> glue{Clause{neg(uvw[0]), neg(uvw[1]), neg(uvw[2])}};
        return composite(kind, boundary, uvw, std::move(parts), std::move(glue));
    }
    case GadgetKind::b_bar:
        return flipped(build_gadget(GadgetKind::b, boundary, alloc), GadgetKind::b_bar);
    case GadgetKind::s_bar:
        return instantiate(kind, kS, boundary, alloc, true, Flavor::set);
    default:
        return instantiate(kind, *template_for(kind), boundary, alloc, false, row.flavor);
    }
}

namespace {

VerificationReport verify_compositionally(const GadgetInstance& g, std::size_t cap)
{
    const std::string subject = to_string(g.kind) + " (compositional)";
    std::vector<std::string> notes;

    std::set<Var> part_aux;
    for (const auto& p : g.parts) {
        auto r = verify_instance(p, cap);
        if (!r.ok) {
            r.subject = subject;
            r.reason = "part " + to_string(p.kind) + ": " + r.reason;
            return r;
        }
        notes.push_back("part " + to_string(p.kind) + " accepted " + p.predicate.describe());
        for (auto v : p.aux)
            if (!part_aux.insert(v).second) {
                Witness w;
                w.variables = {v};
                return VerificationReport::fail(subject, "auxiliary variable shared between parts", std::move(w));
            }
    }

    const auto& boundary = g.predicate.boundary();
    std::vector<Var> frame = boundary;
    for (auto v : g.aux)
        if (!part_aux.count(v))
            frame.push_back(v);
    std::set<Var> frame_set(frame.begin(), frame.end());
    for (auto v : boundary)
        if (part_aux.count(v))
            return VerificationReport::fail(subject, "boundary variable is auxiliary in a part");
    for (const auto& c : g.glue)
        for (auto l : c)
            if (!frame_set.count(l.var()))
                return VerificationReport::fail(subject, "glue clause reaches into a part's auxiliary variables");
    for (const auto& p : g.parts)
        for (auto v : p.predicate.boundary())
            if (!frame_set.count(v))
                return VerificationReport::fail(subject, "part boundary outside the frame");
        // Aux variables of one part must not occur in another part's clauses.
    for (std::size_t i = 0; i < g.parts.size(); ++i) {
        std::set<Var> own(g.parts[i].aux.begin(), g.parts[i].aux.end());
        for (std::size_t j = 0; j < g.parts.size(); ++j) {
            if (i == j)
                continue;
            for (const auto& c : g.parts[j].clauses)
                for (auto l : c)
                    if (own.count(l.var()))
                        return VerificationReport::fail(subject, "part clauses share auxiliary variables");
        }
    }

    if (frame.size() > cap)
        throw EnumerationCapExceeded(frame.size(), cap);

    // With disjoint auxiliaries, a frame assignment extends iff every part
    // predicate accepts its boundary and the glue holds.
    Var top = 0;
    for (auto v : frame)
        top = std::max(top, v);
    std::vector<bool> reachable(std::size_t{1} << boundary.size(), false);
    std::vector<std::optional<Assignment>> example(reachable.size());
    Assignment a(top + 1);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << frame.size()); ++bits) {
        for (std::size_t i = 0; i < frame.size(); ++i)
            a.set(frame[i], ((bits >> i) & 1u) != 0);
        bool ok = std::all_of(g.glue.begin(), g.glue.end(), [&](const Clause& c) { return clause_holds(c, a, g.mode); });
        for (const auto& p : g.parts) {
            if (!ok)
                break;
            std::uint64_t q = 0;
            const auto& pb = p.predicate.boundary();
            for (std::size_t i = 0; i < pb.size(); ++i)
                q |= std::uint64_t{a[pb[i]]} << i;
            ok = p.predicate.accepts(q);
        }
        if (ok) {
            auto pattern = bits & ((std::uint64_t{1} << boundary.size()) - 1);
            if (!reachable[pattern])
                example[pattern] = a;
            reachable[pattern] = true;
        }
    }
    for (std::uint64_t p = 0; p < reachable.size(); ++p) {
        if (reachable[p] == g.predicate.accepts(p))
            continue;
        Witness w;
        w.pattern = p;
        w.variables = boundary;
        std::string reason = "boundary pattern " + g.predicate.pattern_string(p);
        if (reachable[p]) {
            reason += " is rejected by the predicate but extends through the parts";
            w.assignment = example[p];
        } else {
            reason += " is accepted by the predicate but has no extension";
        }
        return VerificationReport::fail(subject, std::move(reason), std::move(w));
    }
    notes.push_back("accepted = " + g.predicate.describe());
    return VerificationReport::pass(subject, std::move(notes));
}

} // namespace

VerificationReport verify_instance(const GadgetInstance& g, std::size_t cap)
{
    const auto& distinct = g.predicate.boundary();
    bool composite_kind = catalogue_row(g.kind).compositional && !g.parts.empty();
    if (composite_kind || (distinct.size() + g.aux.size() > cap && !g.parts.empty()))
        return verify_compositionally(g, cap);

    Var top = 0;
    for (auto v : distinct)
        top = std::max(top, v);
    for (auto v : g.aux)
        top = std::max(top, v);
    auto r = check_extension_property(g.as_instance(top + 1), g.predicate, g.aux, cap);
    r.subject = to_string(g.kind);
    return r;
}

VerificationReport verify_gadget(GadgetKind kind, std::size_t cap)
{
    const auto& row = catalogue_row(kind);
    FreshAllocator alloc;
    auto boundary = alloc.fresh(row.boundary_arity);
    auto g = build_gadget(kind, boundary, alloc);
    if (g.aux.size() != row.aux_count || g.clauses.size() != row.clause_count)
        return VerificationReport::fail(row.name, "built " + std::to_string(g.aux.size()) + " aux / " +
                                                      std::to_string(g.clauses.size()) +
                                                      " clauses, catalogue says " + std::to_string(row.aux_count) +
                                                      " / " + std::to_string(row.clause_count));
    auto r = verify_instance(g, cap);
    r.subject = row.name;
    return r;
}

} // namespace rsat
