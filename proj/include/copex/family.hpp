#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "copex/rgraph.hpp"

namespace copex {

// A list of pairwise non-isomorphic canonical graphs of one uniformity, kept
// in sorted order so serialization is deterministic.
class Family {
public:
    Family() = default;
    explicit Family(int r) : r_(r) {}

    int uniformity() const { return r_; }
    const std::vector<RGraph>& members() const { return members_; }
    const std::vector<std::string>& names() const { return names_; }
    int size() const { return static_cast<int>(members_.size()); }

    // Canonicalizes g and inserts it unless an isomorphic member exists.
    // Returns the member index either way.
    int add(const RGraph& g, const std::string& name = "");

    // Index of the member isomorphic to g (g need not be canonical), or -1.
    int find(const RGraph& g) const;
    int find_canonical(const RGraph& canon) const;

private:
    int r_ = 3;
    std::vector<RGraph> members_;
    std::vector<std::string> names_;
};

enum class ForbidMode { Subgraph, Induced };

struct ForbiddenSpec {
    Family family;
    ForbidMode mode = ForbidMode::Subgraph;

    bool empty() const { return family.size() == 0; }
    bool excludes(const RGraph& g) const;  // true iff some member embeds in g
};

// All r-graphs on n vertices up to isomorphism that avoid the forbidden
// family, generated edge-by-edge via the canonical construction path (no
// global seen-set). Subgraph-mode forbidden graphs prune the search tree;
// induced mode filters the output. Soft limit n <= 8: larger n warns on
// stderr but proceeds.
Family enumerate_up_to_iso(int n, int r, const ForbiddenSpec& forbidden);
Family enumerate_up_to_iso(int n, int r);

// Streaming variant: calls visit for each generated forbidden-free class.
void enumerate_classes(int n, int r, const ForbiddenSpec& forbidden,
                       const std::function<void(const RGraph&)>& visit);

// All isomorphism classes of k-vertex induced subgraphs of arbitrarily large
// blow-ups of base: instantiate the blow-up on every k-multiset of base
// vertices and canonicalize.
Family induced_family_of_blowup(const RGraph& base, int k,
                                std::vector<std::string>* multiset_names = nullptr);

// All isomorphism classes of k-vertex induced subgraphs of family members.
Family induced_subgraph_family(const Family& fam, int k);

// Members containing target, as a subgraph or induced subgraph.
Family filter_containing(const Family& fam, const RGraph& target, bool induced);

}  // namespace copex
