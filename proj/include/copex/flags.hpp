#pragma once

#include <string>
#include <vector>

#include "copex/family.hpp"
#include "copex/rational.hpp"
#include "copex/rgraph.hpp"

namespace copex {

// A type: a graph whose vertices are all labeled, in order 0..s-1.
struct FlagType {
    RGraph sigma;

    int size() const { return sigma.vertex_count(); }
    bool operator==(const FlagType& o) const { return sigma == o.sigma; }
};

// A flag: a graph together with labeled vertices 0..s-1 realizing the type
// as an induced ordered subgraph. Flags are normalized so that equal flags
// compare equal: the unlabeled part carries the least edge serialization
// over relabelings fixing 0..s-1 pointwise.
struct Flag {
    RGraph graph;
    int s = 0;

    bool operator==(const Flag& o) const { return s == o.s && graph == o.graph; }
    bool operator<(const Flag& o) const;
};

// Normalizes (graph, s) into a Flag; validates that 0..s-1 induce the type.
Flag make_flag(const RGraph& graph, const FlagType& type);

// The 2-labeled type on an edgeless pair, its edge flag (third vertex forms
// an edge with the labeled pair) and its unit flag (no extra vertex).
FlagType pair_type();
Flag edge_flag();
Flag unit_flag_of(const FlagType& type);

// Does theta (an ordered injective tuple in host) realize the type?
bool realizes_type(const RGraph& host, const std::vector<int>& theta,
                   const FlagType& type);

// All flags on n_total vertices over the given type whose underlying graph
// is admissible, up to label-preserving isomorphism, deterministically
// ordered.
std::vector<Flag> generate_flags(const FlagType& type, int n_total,
                                 const ForbiddenSpec& admissible);

// Probability that a uniformly random (|V(f)|-s)-subset of V(host) - theta
// extends theta to an induced labeled copy of f. theta must realize f's
// type (throws std::invalid_argument otherwise).
Rat flag_density(const Flag& f, const FlagType& type, const RGraph& host,
                 const std::vector<int>& theta);

// Densities of all given flags (same type, same size) at one placement,
// computed by classifying each extension subset once.
std::vector<Rat> flag_profile(const std::vector<Flag>& flags, const FlagType& type,
                              const RGraph& host, const std::vector<int>& theta);

// Coefficients c_H over the basis such that, for a host G,
//   avg_theta flag_density(f1) * flag_density(f2)
//     = sum_H c_H d(H, G) + O(1/|V(G)|),
// computed exactly: c_H is the label-averaged product density inside H
// itself. Requires |V(f1)| + |V(f2)| - s <= k and a basis of k-vertex
// graphs.
std::vector<Rat> product_expansion(const Flag& f1, const Flag& f2,
                                   const FlagType& type, int k, const Family& basis);

// Basis vector of q*E^2 - p*E*U on the pair type, where E is the edge flag
// and U the unit: nonnegative (up to O(1/n)) on hosts whose positive pairs
// all have co-degree at least (p/q)(n-2).
std::vector<Rat> pos_codegree_constraint(int threshold_num, int threshold_den,
                                         int k, const Family& basis);

// The per-pair value (d/(n-2)) * (q*d/(n-2) - p) of the co-degree
// constraint at one pair of the host.
Rat per_pair_codegree_value(const RGraph& host, int a, int b, int threshold_num,
                            int threshold_den);

// Basis vector of q*E - p*U on the pair type: nonnegative on hosts whose
// minimum co-degree (over all pairs) is at least (p/q)(n-2).
std::vector<Rat> min_codegree_constraint(int threshold_num, int threshold_den,
                                         int k, const Family& basis);

// Induced density profile d(H_i, host) over the basis. Throws if some
// induced subgraph of host is missing from the basis (i.e. host is not
// admissible for it).
std::vector<Rat> density_profile(const RGraph& host, const Family& basis);

// A host's rational density profile over a canonical basis; coords are
// nonnegative and sum to 1.
struct DensityVector {
    Family basis;
    std::vector<Rat> coords;
};

DensityVector make_density_vector(const RGraph& host, const Family& basis);

}  // namespace copex
