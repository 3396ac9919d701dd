#pragma once

#include <vector>

#include "copex/rgraph.hpp"

namespace copex {

// Canonical relabeling of h: the lexicographically least edge list over all
// vertex permutations, with the search pruned by iterated color refinement.
// canonical_form(g) == canonical_form(h) iff g and h are isomorphic.
RGraph canonical_form(const RGraph& h);

struct CanonicalResult {
    RGraph graph;
    // One permutation (old -> new) achieving the canonical labeling.
    std::vector<int> labeling;
    // Generators are not separated out; this is the full automorphism group
    // of the input, as permutations old -> old. Always contains the identity.
    std::vector<std::vector<int>> automorphisms;
};

CanonicalResult canonicalize(const RGraph& h);

bool is_isomorphic(const RGraph& g, const RGraph& h);

// Orbit partition of the given r-sets under a permutation group; returns one
// representative index per orbit (the least element of each orbit).
std::vector<int> orbit_representatives(const std::vector<Edge>& items,
                                       const std::vector<std::vector<int>>& group);

}  // namespace copex
