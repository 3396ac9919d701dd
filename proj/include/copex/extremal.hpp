#pragma once

#include <vector>

#include "copex/family.hpp"
#include "copex/rgraph.hpp"

namespace copex {

struct ExtremalResult {
    int n = 0;
    int value = 0;
    std::vector<RGraph> witnesses;  // canonical, sorted, capped at 100
    int witness_classes = 0;        // total count before the cap
};

// Exact co+ex(n, forbidden): the maximum minimum positive co-degree over all
// forbidden-free r-graphs on n vertices, by exhaustive enumeration up to
// isomorphism. Soft limit n <= 7 (warns beyond).
ExtremalResult co_plus_ex_exact(int n, int r, const ForbiddenSpec& forbidden);

// Independent brute-force oracle over all labeled graphs: no isomorphism
// machinery in the search (the witness list is canonicalized for reporting
// only). Hard limit n <= 5.
ExtremalResult naive_oracle(int n, int r, const ForbiddenSpec& forbidden);

// Burnside count of isomorphism classes of r-graphs on n vertices (no
// forbidden family): an independent oracle for enumeration counts.
long burnside_class_count(int n, int r);

}  // namespace copex
