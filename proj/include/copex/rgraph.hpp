#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace copex {

using Edge = std::vector<int>;  // sorted, distinct vertices

// An r-uniform hypergraph on vertices 0..n-1. Edges are stored as sorted
// tuples in lexicographic order, so serialization is deterministic.
class RGraph {
public:
    RGraph() = default;
    RGraph(int r, int n, std::vector<Edge> edges);

    int uniformity() const { return r_; }
    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(const Edge& sorted_edge) const;

    bool operator==(const RGraph& o) const {
        return r_ == o.r_ && n_ == o.n_ && edges_ == o.edges_;
    }
    bool operator!=(const RGraph& o) const { return !(*this == o); }
    bool operator<(const RGraph& o) const;

    // Relabels vertices by perm (old index -> new index); perm must be a
    // permutation of 0..n-1.
    RGraph relabeled(const std::vector<int>& perm) const;

    std::string key() const;  // compact serialization, used for hashing

private:
    int r_ = 3;
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Co-degree of an (r-1)-set S: the number of vertices v with S+{v} an edge.
// S must have exactly r-1 distinct in-range members.
int codegree(const RGraph& h, const std::vector<int>& s);

// Vertices v such that S+{v} is an edge.
std::vector<int> neighborhood(const RGraph& h, const std::vector<int>& s);

// Minimum co-degree over (r-1)-sets with co-degree >= 1; 0 for the edgeless
// graph.
int min_pos_codegree(const RGraph& h);

// Link of v: the (r-1)-graph on the remaining n-1 vertices (relabeled to
// 0..n-2 preserving order) whose edges e satisfy e+{v} in E(h). Requires
// r >= 3.
RGraph link_graph(const RGraph& h, int v);

// Adds one new vertex (index n) to every edge, raising uniformity by one.
RGraph suspension(const RGraph& h);

// Induced subgraph on the sorted vertex set s, relabeled to 0..|s|-1.
RGraph induced_subgraph(const RGraph& h, const std::vector<int>& s);

// All r-subsets of 0..n-1 in lexicographic order.
std::vector<Edge> all_r_subsets(int n, int r);

}  // namespace copex
