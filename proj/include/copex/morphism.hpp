#pragma once

#include <optional>
#include <vector>

#include "copex/rational.hpp"
#include "copex/rgraph.hpp"

namespace copex {

// Injective map sending edges of f to edges of h; when induced, non-edges of
// f must land on non-edges of h. Returns one witness map (f vertex -> h
// vertex) or nullopt.
std::optional<std::vector<int>> exists_embedding(const RGraph& f, const RGraph& h,
                                                 bool induced);

// Not necessarily injective map phi with |phi(e)| = r and phi(e) in E(h) for
// every edge e of f.
std::optional<std::vector<int>> exists_homomorphism(const RGraph& f, const RGraph& h);

// Checks that a given map is a valid homomorphism (edges land on edges, with
// r distinct images per edge).
bool is_homomorphism(const RGraph& f, const RGraph& h, const std::vector<int>& map);

// Fraction of |V(g)|-subsets S of V(h) with h[S] isomorphic to g.
Rat induced_density(const RGraph& g, const RGraph& h);

// Fraction of |V(g)|-subsets S of V(h) whose induced subgraph contains a
// (not necessarily induced) copy of g.
Rat noninduced_density(const RGraph& g, const RGraph& h);

enum class GammaRegion { Zero, OneOverR, AtLeastTwoOver2rMinus1 };

// Classifies gamma^+({f}) into {0}, {1/r}, or [2/(2r-1), 1]: Zero iff f is
// r-partite (maps into a single r-edge), OneOverR iff f is not r-partite but
// maps into the r-triangle T^r.
GammaRegion classify_gamma_region(const RGraph& f);

const char* gamma_region_name(GammaRegion g);

}  // namespace copex
