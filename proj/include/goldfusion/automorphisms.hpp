#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "goldfusion/constructors.hpp"
#include "goldfusion/fusion_ring.hpp"

namespace goldfusion {

/// All basis permutations fixing the unit, commuting with duality and
/// preserving every structure constant, found by backtracking pruned on
/// (dimension, dual-orbit, unit) fingerprints. Intended for rank <= 16.
std::vector<RingAutomorphism> find_automorphisms(const FusionRing& ring);

/// A basis bijection source -> target carrying unit to unit, duals to duals
/// and structure constants to structure constants, or nullopt.
std::optional<std::vector<std::uint32_t>> find_isomorphism(const FusionRing& source,
                                                           const FusionRing& target);

}  // namespace goldfusion
