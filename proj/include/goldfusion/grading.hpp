#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "goldfusion/fusion_ring.hpp"

namespace goldfusion {

/// Universal grading data: the adjoint subring ad = tensor closure of all
/// x (x) x*, and the finest partition of the basis with ad in the unit
/// component such that tensoring respects the partition. The component
/// products recover the group law.
struct Grading {
    std::vector<std::uint32_t> adjoint_basis;   // sorted basis indices of ad
    std::vector<std::uint32_t> component_of;    // basis -> component id; unit component = 0
    std::uint32_t group_order = 1;
    std::vector<std::vector<std::uint32_t>> group_table;  // component products
    bool cyclic = false;
    std::string group_name;  // "Z_k" when cyclic, "G(order k)" otherwise
};

/// Computes the adjoint subring and universal grading. Throws if the
/// partition fails to yield a group (malformed ring).
Grading adjoint_and_grading(const FusionRing& ring);

}  // namespace goldfusion
