#pragma once

#include <string>
#include <vector>

#include "copex/rational.hpp"
#include "copex/rgraph.hpp"

namespace copex {

// Single r-edge on r vertices.
RGraph single_r_edge(int r);

// The r-triangle T^r: a triangle plus r-2 vertices added to all three edges.
// Vertices 0,1,2 are the base triangle; 3..r are the spike vertices.
// T^2 is the plain triangle, T^3 = K_4^{3-}.
RGraph r_triangle(int r);

RGraph complete_3graph(int n);  // K_n^3
RGraph fano_plane();            // lines 123,345,156,246,147,257,367 (1-based)
RGraph fano_complement();       // the 28 non-line triples
RGraph j_graph(int k);          // J_k: edges {0,i,j} for 1 <= i < j <= k
RGraph tight_cycle(int l);      // C_l
RGraph tight_cycle_minus(int l);  // C_l minus one edge

// Looks up a construction by CLI name, e.g. "Jk:4", "Cminus:7", "Tr:3",
// "FanoComplement", "K43", "F32++1", "Edge:3", "Empty:6". Throws
// std::invalid_argument for unknown names or bad parameters.
RGraph named_construction(const std::string& spec);

// Names accepted by named_construction, for help output.
std::vector<std::string> named_construction_catalog();

struct WeightedBlowup {
    RGraph base;
    std::vector<Rat> weights;  // nonnegative, summing to 1

    WeightedBlowup(RGraph b, std::vector<Rat> w);
};

// Blow-up with the given class sizes (one per base vertex); vertices of class
// i form a contiguous block, blocks in base-vertex order. Edges are the
// rainbow r-sets over base edges.
RGraph instantiate_blowup(const RGraph& base, const std::vector<int>& class_sizes);

// Asymptotic minimum positive co-degree of the weighted blow-up, as a
// fraction of n: min over (r-1)-sets S of base vertices with nonempty base
// neighborhood of the total weight of that neighborhood. Requires >= 1 edge.
Rat blowup_mpcd_fraction(const WeightedBlowup& b);

struct BlowupOptimum {
    Rat value;
    std::vector<Rat> weights;  // lexicographically least optimal point
    int optimal_face_dim;      // dimension of the set of optimal weightings
};

// Maximizes blowup_mpcd_fraction over weightings of the base, in exact
// rational arithmetic. Requires >= 1 edge.
BlowupOptimum optimize_blowup_weights(const RGraph& base);

// Integer class sizes summing to n, each within 1 of n*w_i, largest
// fractional remainders rounded up (ties broken by lower vertex index).
std::vector<int> integer_class_sizes(const WeightedBlowup& b, int n);

}  // namespace copex
