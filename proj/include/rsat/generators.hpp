#pragma once

#include "rsat/formula.hpp"

#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace rsat {

using Rng = std::mt19937_64;
using Profile = std::pair<std::size_t, std::size_t>;

/// Random 3-clause instance in which variable i has exactly profiles[i]
/// (unnegated, negated) appearances. With `monotone`, positive and negative
/// occurrences are grouped into separate clauses; otherwise they are mixed.
/// Set flavor repairs clauses with a repeated variable by random swaps.
/// Returns nullopt when the slot counts do not divide into triples or the
/// repair budget runs out.
std::optional<CnfInstance> random_with_profiles(Rng& rng, const std::vector<Profile>& profiles, bool monotone,
                                                Flavor flavor = Flavor::set, Mode mode = Mode::sat,
                                                std::size_t budget = 20000);

/// Every variable (p,q); nullopt on a divisibility mismatch.
std::optional<CnfInstance> random_uniform_profile(Rng& rng, std::size_t n, std::size_t p, std::size_t q,
                                                  bool monotone, Flavor flavor = Flavor::set);

/// Monotone E4 instance, each variable (3,1) or (1,3); n must be a
/// multiple of 3.
std::optional<CnfInstance> random_e4_choice(Rng& rng, std::size_t n);

/// m positive 3-clauses over n variables in nae mode, every variable used.
CnfInstance random_monotone_nae(Rng& rng, std::size_t n, std::size_t m);

/// m random nae clauses of three literals with repeats allowed.
CnfInstance random_nae_star(Rng& rng, std::size_t n, std::size_t m);

/// Monotone nae instance with every variable in exactly four clauses; with
/// `linear`, no two clauses share two variables. n must be a multiple of 3.
std::optional<CnfInstance> random_nae_e4(Rng& rng, std::size_t n, bool linear, std::size_t budget = 200000);

/// Canonical (k,1)-style shape: negative triples {1,2,3},{4,5,6},... plus
/// m_plus random positive 3-clauses. n must be a multiple of 3.
CnfInstance random_canonical(Rng& rng, std::size_t n, std::size_t m_plus);

} // namespace rsat
