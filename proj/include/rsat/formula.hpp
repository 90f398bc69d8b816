#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rsat {

using Var = std::uint32_t;

/// A variable together with a polarity. Variables are dense ids 0..n-1;
/// names only exist in the I/O layer.
class Literal {
public:
    constexpr Literal() = default;
    constexpr Literal(Var var, bool negated) : var_(var), negated_(negated) {}

    [[nodiscard]] constexpr Var var() const { return var_; }
    [[nodiscard]] constexpr bool negated() const { return negated_; }
    [[nodiscard]] constexpr bool positive() const { return !negated_; }

    /// Truth value of the literal when its variable takes `value`.
    [[nodiscard]] constexpr bool eval(bool value) const { return value != negated_; }

    /// DIMACS integer: var+1, negative when negated.
    [[nodiscard]] long long dimacs() const;
    static Literal from_dimacs(long long lit);

    constexpr Literal operator~() const { return Literal{var_, !negated_}; }

    friend constexpr bool operator==(Literal, Literal) = default;
    friend constexpr auto operator<=>(Literal a, Literal b)
    {
        if (a.var_ != b.var_)
            return a.var_ <=> b.var_;
        return a.negated_ <=> b.negated_;
    }

private:
    Var var_ = 0;
    bool negated_ = false;
};

constexpr Literal pos(Var v) { return Literal{v, false}; }
constexpr Literal neg(Var v) { return Literal{v, true}; }

enum class Flavor { set, multiset };
enum class Mode { sat, nae };

std::string to_string(Mode m);
std::string to_string(Flavor f);

/// A clause. Literals are kept sorted so that two clauses with the same
/// literal multiset compare equal.
///
/// Set flavor rejects repeated literals and complementary pairs; multiset
/// flavor accepts both.
class Clause {
public:
    Clause() = default;
    Clause(std::vector<Literal> literals, Flavor flavor = Flavor::set);
    Clause(std::initializer_list<Literal> literals, Flavor flavor = Flavor::set)
        : Clause(std::vector<Literal>(literals), flavor)
    {
    }

    [[nodiscard]] const std::vector<Literal>& literals() const { return lits_; }
    [[nodiscard]] Flavor flavor() const { return flavor_; }
    [[nodiscard]] std::size_t size() const { return lits_.size(); }
    [[nodiscard]] bool empty() const { return lits_.empty(); }
    [[nodiscard]] auto begin() const { return lits_.begin(); }
    [[nodiscard]] auto end() const { return lits_.end(); }

    [[nodiscard]] bool has_repeated_literal() const;
    [[nodiscard]] bool all_positive() const;
    [[nodiscard]] bool all_negative() const;
    /// Distinct variables, ascending.
    [[nodiscard]] std::vector<Var> variables() const;
    [[nodiscard]] bool contains(Literal l) const;

    /// Every literal negated; flavor kept.
    [[nodiscard]] Clause flipped() const;
    [[nodiscard]] Clause with_flavor(Flavor f) const { return Clause{lits_, f}; }

    friend bool operator==(const Clause&, const Clause&) = default;

private:
    std::vector<Literal> lits_;
    Flavor flavor_ = Flavor::set;
};

class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::size_t n, bool value = false) : values_(n, value) {}
    explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] bool operator[](Var v) const { return values_[v]; }
    void set(Var v, bool value) { values_[v] = value; }
    void flip(Var v) { values_[v] = !values_[v]; }
    [[nodiscard]] bool value(Literal l) const { return l.eval(values_[l.var()]); }
    [[nodiscard]] const std::vector<bool>& bits() const { return values_; }

    friend bool operator==(const Assignment&, const Assignment&) = default;

private:
    std::vector<bool> values_;
};

/// Immutable CNF formula with a satisfaction semantics attached.
class CnfInstance {
public:
    CnfInstance() = default;
    /// Throws std::invalid_argument when a literal refers to a variable >= num_vars.
    CnfInstance(std::size_t num_vars, std::vector<Clause> clauses, Mode mode = Mode::sat);

    [[nodiscard]] std::size_t num_vars() const { return num_vars_; }
    [[nodiscard]] std::size_t num_clauses() const { return clauses_.size(); }
    [[nodiscard]] const std::vector<Clause>& clauses() const { return clauses_; }
    [[nodiscard]] const Clause& clause(std::size_t i) const { return clauses_[i]; }
    [[nodiscard]] Mode mode() const { return mode_; }
    /// True when any clause has multiset flavor.
    [[nodiscard]] bool duplicates_allowed() const;

    [[nodiscard]] CnfInstance with_mode(Mode m) const { return CnfInstance{num_vars_, clauses_, m}; }

    friend bool operator==(const CnfInstance&, const CnfInstance&) = default;

private:
    std::size_t num_vars_ = 0;
    std::vector<Clause> clauses_;
    Mode mode_ = Mode::sat;
};

/// Clause is satisfied (sat) or nae-satisfied (nae) under `a`.
bool clause_holds(const Clause& c, const Assignment& a, Mode mode);
/// Index of the first clause not holding under `a`, if any.
std::optional<std::size_t> first_violated(const CnfInstance& inst, const Assignment& a);
inline bool evaluates_true(const CnfInstance& inst, const Assignment& a)
{
    return a.size() == inst.num_vars() && !first_violated(inst, a);
}

struct Appearances {
    std::size_t positive = 0;
    std::size_t negative = 0;
    [[nodiscard]] std::size_t total() const { return positive + negative; }
    friend bool operator==(const Appearances&, const Appearances&) = default;
};

/// Per-variable (unnegated, negated) occurrence counts; multiset duplicates
/// count separately.
using AppearanceProfile = std::vector<Appearances>;

AppearanceProfile appearance_profile(const CnfInstance& inst);

/// Flips the polarity of every literal of the selected variables. Ids are
/// kept, so applying it twice yields the original instance.
CnfInstance negate_rename(const CnfInstance& inst, std::span<const Var> vars);

/// Flips every literal of every clause.
CnfInstance flip_all(const CnfInstance& inst);

} // namespace rsat
