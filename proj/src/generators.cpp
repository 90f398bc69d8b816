#include "rsat/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rsat {

namespace {

std::size_t repeats(const Literal* c)
{
    return (c[0].var() == c[1].var()) + (c[0].var() == c[2].var()) + (c[1].var() == c[2].var());
}

std::size_t shared_excess(const Literal* a, const Literal* b)
{
    std::size_t shared = 0;
    for (int i = 0; i < 3; ++i) {
        bool dup = false;
        for (int j = 0; j < i; ++j)
            dup = dup || a[j].var() == a[i].var();
        if (dup)
            continue;
        for (int j = 0; j < 3; ++j)
            if (a[i].var() == b[j].var()) {
                ++shared;
                break;
            }
    }
    return shared > 1 ? shared - 1 : 0;
}

/// Swap-based repair of a slot layout. Swaps stay inside [lo, hi) regions
/// given by `region_of`, so monotone layouts keep their polarity blocks.
class Repair {
public:
    Repair(std::vector<Literal>& slots, std::size_t split, bool linear)
        : slots_(slots), split_(split), linear_(linear), m_(slots.size() / 3)
    {
    }

    bool run(Rng& rng, std::size_t budget)
    {
        std::size_t cost = total();
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (std::size_t it = 0; it < budget && cost > 0; ++it) {
            std::size_t c1 = bad_clause(rng);
            std::size_t s1 = 3 * c1 + std::uniform_int_distribution<std::size_t>(0, 2)(rng);
            auto [lo, hi] = region(s1);
            std::size_t s2 = std::uniform_int_distribution<std::size_t>(lo, hi - 1)(rng);
            std::size_t c2 = s2 / 3;
            if (c1 == c2)
                continue;
            std::size_t before = local(c1) + local(c2) - pair(c1, c2);
            std::swap(slots_[s1], slots_[s2]);
            std::size_t after = local(c1) + local(c2) - pair(c1, c2);
            if (after <= before || unit(rng) < 0.02) {
                cost = cost + after - before;
            } else {
                std::swap(slots_[s1], slots_[s2]);
            }
        }
        return cost == 0;
    }

private:
    std::pair<std::size_t, std::size_t> region(std::size_t s) const
    {
        return s < split_ ? std::pair{std::size_t{0}, split_} : std::pair{split_, slots_.size()};
    }

    const Literal* clause(std::size_t c) const { return slots_.data() + 3 * c; }

    std::size_t pair(std::size_t a, std::size_t b) const { return linear_ ? shared_excess(clause(a), clause(b)) : 0; }

    std::size_t local(std::size_t c) const
    {
        std::size_t v = repeats(clause(c));
        if (linear_)
            for (std::size_t d = 0; d < m_; ++d)
                if (d != c)
                    v += pair(c, d);
        return v;
    }

    std::size_t total() const
    {
        std::size_t v = 0;
        for (std::size_t c = 0; c < m_; ++c) {
            v += repeats(clause(c));
            for (std::size_t d = c + 1; d < m_; ++d)
                v += pair(c, d);
        }
        return v;
    }

    std::size_t bad_clause(Rng& rng) const
    {
        std::vector<std::size_t> bad;
        for (std::size_t c = 0; c < m_; ++c)
            if (local(c) > 0)
                bad.push_back(c);
        if (bad.empty())
            return 0;
        return bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)];
    }

    std::vector<Literal>& slots_;
    std::size_t split_;
    bool linear_;
    std::size_t m_;
};

CnfInstance from_slots(std::size_t n, const std::vector<Literal>& slots, Flavor flavor, Mode mode)
{
    std::vector<Clause> clauses;
    for (std::size_t i = 0; i < slots.size(); i += 3)
        clauses.emplace_back(std::vector<Literal>{slots[i], slots[i + 1], slots[i + 2]}, flavor);
    return CnfInstance{n, std::move(clauses), mode};
}

} // namespace

std::optional<CnfInstance> random_with_profiles(Rng& rng, const std::vector<Profile>& profiles, bool monotone,
                                                Flavor flavor, Mode mode, std::size_t budget)
{
    std::vector<Literal> plus, minus;
    for (Var v = 0; v < profiles.size(); ++v) {
        plus.insert(plus.end(), profiles[v].first, pos(v));
        minus.insert(minus.end(), profiles[v].second, neg(v));
    }
    std::vector<Literal> slots;
    std::size_t split = 0;
    if (monotone) {
        if (plus.size() % 3 != 0 || minus.size() % 3 != 0)
            return std::nullopt;
        std::shuffle(plus.begin(), plus.end(), rng);
        std::shuffle(minus.begin(), minus.end(), rng);
        slots = plus;
        slots.insert(slots.end(), minus.begin(), minus.end());
        split = plus.size();
    } else {
        slots = plus;
        slots.insert(slots.end(), minus.begin(), minus.end());
        if (slots.size() % 3 != 0)
            return std::nullopt;
        std::shuffle(slots.begin(), slots.end(), rng);
        split = slots.size();
    }
    if (flavor == Flavor::set && !Repair(slots, split, false).run(rng, budget))
        return std::nullopt;
    return from_slots(profiles.size(), slots, flavor, mode);
}

std::optional<CnfInstance> random_uniform_profile(Rng& rng, std::size_t n, std::size_t p, std::size_t q,
                                                  bool monotone, Flavor flavor)
{
    return random_with_profiles(rng, std::vector<Profile>(n, Profile{p, q}), monotone, flavor);
}

std::optional<CnfInstance> random_e4_choice(Rng& rng, std::size_t n)
{
    if (n % 3 != 0)
        return std::nullopt;
    // The number of (3,1) variables must be a multiple of 3 as well.
    std::size_t t = 3 * std::uniform_int_distribution<std::size_t>(0, n / 3)(rng);
    std::vector<Profile> prof(n, Profile{1, 3});
    std::fill(prof.begin(), prof.begin() + static_cast<std::ptrdiff_t>(t), Profile{3, 1});
    std::shuffle(prof.begin(), prof.end(), rng);
    return random_with_profiles(rng, prof, true);
}

CnfInstance random_monotone_nae(Rng& rng, std::size_t n, std::size_t m)
{
    if (n < 3 || 3 * m < n)
        throw std::invalid_argument("need n >= 3 and 3m >= n");
    std::vector<Var> vars(n);
    std::iota(vars.begin(), vars.end(), 0);
    for (;;) {
        std::vector<Clause> cls;
        std::vector<bool> used(n, false);
        for (std::size_t i = 0; i < m; ++i) {
            std::shuffle(vars.begin(), vars.end(), rng);
            cls.push_back(Clause{pos(vars[0]), pos(vars[1]), pos(vars[2])});
            used[vars[0]] = used[vars[1]] = used[vars[2]] = true;
        }
        if (std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
            return CnfInstance{n, std::move(cls), Mode::nae};
    }
}

CnfInstance random_nae_star(Rng& rng, std::size_t n, std::size_t m)
{
    if (n == 0 || 3 * m < n)
        throw std::invalid_argument("need n >= 1 and 3m >= n");
    std::uniform_int_distribution<Var> var(0, static_cast<Var>(n - 1));
    std::bernoulli_distribution coin(0.5);
    for (;;) {
        std::vector<Clause> cls;
        std::vector<bool> used(n, false);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Literal> lits;
            for (int j = 0; j < 3; ++j) {
                lits.emplace_back(var(rng), coin(rng));
                used[lits.back().var()] = true;
            }
            cls.emplace_back(std::move(lits), Flavor::multiset);
        }
        if (std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
            return CnfInstance{n, std::move(cls), Mode::nae};
    }
}

std::optional<CnfInstance> random_nae_e4(Rng& rng, std::size_t n, bool linear, std::size_t budget)
{
    if (n % 3 != 0)
        return std::nullopt;
    std::vector<Literal> slots;
    for (Var v = 0; v < n; ++v)
        slots.insert(slots.end(), 4, pos(v));
    std::shuffle(slots.begin(), slots.end(), rng);
    if (!Repair(slots, slots.size(), linear).run(rng, budget))
        return std::nullopt;
    return from_slots(n, slots, Flavor::set, Mode::nae);
}

CnfInstance random_canonical(Rng& rng, std::size_t n, std::size_t m_plus)
{
    std::vector<Clause> cls;
    for (Var t = 0; t + 2 < n; t += 3)
        cls.push_back(Clause{neg(t), neg(t + 1), neg(t + 2)});
    std::vector<Var> vars(n);
    std::iota(vars.begin(), vars.end(), 0);
    for (std::size_t i = 0; i < m_plus; ++i) {
        std::shuffle(vars.begin(), vars.end(), rng);
        cls.push_back(Clause{pos(vars[0]), pos(vars[1]), pos(vars[2])});
    }
    return CnfInstance{n, std::move(cls), Mode::sat};
}

} // namespace rsat
