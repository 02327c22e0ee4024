#pragma once

#include <cstdint>
#include <vector>

#include "gqlab/group.hpp"

namespace gqlab {

// G of order s^2 t with t+1 subgroups A[i] of order s inside A_star[i] of
// order st. Index 0 is the member each constructor treats as "infinity".
struct KantorFamily {
    FiniteGroup group;
    std::uint32_t s = 0;
    std::uint32_t t = 0;
    std::vector<Subgroup> members;
    std::vector<Subgroup> star_members;
};

// Builds subgroups from member lists (closure is checked, StructureError otherwise).
KantorFamily make_family(const FiniteGroup& g, std::uint32_t s, std::uint32_t t,
                         const std::vector<std::vector<Element>>& members,
                         const std::vector<std::vector<Element>>& star_members);

}  // namespace gqlab
