#pragma once

#include "rsat/formula.hpp"
#include "rsat/oracle.hpp"
#include "rsat/report.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rsat {

enum class GadgetKind {
    ne6,
    eq_ne,
    p1,
    ne9,
    eq13,
    eq4l,
    s,
    s_bar,
    a,
    d,
    f,
    g,
    h,
    c12,
    b,
    b_bar,
    chain22,
    chain22_neg,
    star22,
    inc32,
};

std::string to_string(GadgetKind k);
/// Case-insensitive; accepts the catalogue names ("NE9", "S_BAR", ...).
std::optional<GadgetKind> gadget_from_name(std::string_view name);

struct CatalogueRow {
    GadgetKind kind;
    std::string name;
    std::size_t boundary_arity;
    std::size_t aux_count;
    std::size_t clause_count;
    Mode mode;
    Flavor flavor;
    /// Too large for direct enumeration; verified part by part.
    bool compositional;
    std::string accepted; // human readable
};

const std::vector<CatalogueRow>& catalogue();
const CatalogueRow& catalogue_row(GadgetKind k);

/// Hands out consecutive variable ids starting at `next`.
class FreshAllocator {
public:
    explicit FreshAllocator(Var next = 0) : next_(next) {}
    Var fresh() { return next_++; }
    std::vector<Var> fresh(std::size_t count);
    [[nodiscard]] Var next() const { return next_; }

private:
    Var next_;
};

struct GadgetInstance {
    GadgetKind kind{};
    /// One entry per slot; repeated entries are allowed.
    std::vector<Var> boundary;
    std::vector<Var> aux;
    std::vector<Clause> clauses;
    /// Claimed predicate over the distinct boundary variables, in
    /// first-occurrence order.
    BoundaryPredicate predicate;
    Mode mode = Mode::sat;
    /// Sub-gadgets and connecting clauses of composite kinds; `clauses` is
    /// their concatenation (parts first).
    std::vector<GadgetInstance> parts;
    std::vector<Clause> glue;

    [[nodiscard]] std::vector<Var> distinct_boundary() const { return predicate.boundary(); }
    /// Clauses as an instance over ids [0, num_vars).
    [[nodiscard]] CnfInstance as_instance(std::size_t num_vars) const;
};

/// Instantiates `kind` on the given slot variables with fresh auxiliary
/// variables. Throws std::invalid_argument on an arity mismatch or when the
/// substitution puts a repeated or complementary literal in a set clause.
GadgetInstance build_gadget(GadgetKind kind, std::span<const Var> boundary, FreshAllocator& alloc);

/// Checks the extension property of an already built gadget. Composite
/// gadgets over the cap are checked part by part.
VerificationReport verify_instance(const GadgetInstance& g, std::size_t cap = kDefaultEnumerationCap);

/// Builds `kind` on distinct fresh boundary variables and verifies it,
/// including the catalogue clause and aux counts.
VerificationReport verify_gadget(GadgetKind kind, std::size_t cap = kDefaultEnumerationCap);

} // namespace rsat
