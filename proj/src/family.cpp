#include "copex/family.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <stdexcept>

#include "copex/canonical.hpp"
#include "copex/constructions.hpp"
#include "copex/morphism.hpp"

namespace copex {

int Family::add(const RGraph& g, const std::string& name) {
    if (g.uniformity() != r_)
        throw std::invalid_argument("family uniformity mismatch");
    RGraph canon = canonical_form(g);
    auto it = std::lower_bound(members_.begin(), members_.end(), canon);
    if (it != members_.end() && *it == canon)
        return static_cast<int>(it - members_.begin());
    int idx = static_cast<int>(it - members_.begin());
    members_.insert(it, canon);
    names_.insert(names_.begin() + idx, name);
    return idx;
}

int Family::find(const RGraph& g) const {
    return find_canonical(canonical_form(g));
}

int Family::find_canonical(const RGraph& canon) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), canon);
    if (it != members_.end() && *it == canon)
        return static_cast<int>(it - members_.begin());
    return -1;
}

bool ForbiddenSpec::excludes(const RGraph& g) const {
    for (const auto& f : family.members()) {
        if (f.vertex_count() > g.vertex_count()) continue;
        if (exists_embedding(f, g, mode == ForbidMode::Induced)) return true;
    }
    return false;
}

namespace {

// Edge of c mapped by the canonical labeling to the last canonical edge;
// removing it gives the canonical parent.
Edge designated_edge(const CanonicalResult& canon, const RGraph& c) {
    const Edge& last = canon.graph.edges().back();
    std::vector<int> inv(c.vertex_count());
    for (int v = 0; v < c.vertex_count(); ++v) inv[canon.labeling[v]] = v;
    Edge e;
    for (int v : last) e.push_back(inv[v]);
    std::sort(e.begin(), e.end());
    return e;
}

bool same_orbit(const Edge& a, const Edge& b,
                const std::vector<std::vector<int>>& group) {
    for (const auto& perm : group) {
        Edge img(a.size());
        for (size_t i = 0; i < a.size(); ++i) img[i] = perm[a[i]];
        std::sort(img.begin(), img.end());
        if (img == b) return true;
    }
    return false;
}

struct Generator {
    int n, r;
    const ForbiddenSpec* forbidden;  // subgraph-mode members prune in-tree
    const std::function<void(const RGraph&)>* visit;
    std::vector<RGraph> subgraph_forbidden;

    void run() {
        RGraph empty(r, n, {});
        if (forbidden) {
            for (const auto& f : forbidden->family.members())
                if (forbidden->mode == ForbidMode::Subgraph)
                    subgraph_forbidden.push_back(f);
        }
        recurse(empty, canonicalize(empty));
    }

    bool contains_forbidden(const RGraph& g) const {
        for (const auto& f : subgraph_forbidden) {
            if (f.vertex_count() > g.vertex_count() || f.edge_count() > g.edge_count())
                continue;
            if (exists_embedding(f, g, false)) return true;
        }
        return false;
    }

    void recurse(const RGraph& g, const CanonicalResult& canon) {
        (*visit)(g);
        std::vector<Edge> nonedges;
        for (const auto& e : all_r_subsets(n, r))
            if (!g.has_edge(e)) nonedges.push_back(e);
        for (int rep : orbit_representatives(nonedges, canon.automorphisms)) {
            std::vector<Edge> edges = g.edges();
            edges.push_back(nonedges[rep]);
            RGraph child(r, n, std::move(edges));
            if (contains_forbidden(child)) continue;
            CanonicalResult ccanon = canonicalize(child);
            if (same_orbit(nonedges[rep], designated_edge(ccanon, child),
                           ccanon.automorphisms))
                recurse(child, ccanon);
        }
    }
};

}  // namespace

void enumerate_classes(int n, int r, const ForbiddenSpec& forbidden,
                       const std::function<void(const RGraph&)>& visit) {
    if (r > n) throw std::invalid_argument("need r <= n to enumerate");
    if (n > 8)
        std::cerr << "warning: enumerating on " << n
                  << " vertices may take a very long time\n";
    Generator gen;
    gen.n = n;
    gen.r = r;
    gen.forbidden = &forbidden;
    if (forbidden.mode == ForbidMode::Induced && !forbidden.empty()) {
        std::function<void(const RGraph&)> filtered = [&](const RGraph& g) {
            if (!forbidden.excludes(g)) visit(g);
        };
        gen.visit = &filtered;
        gen.run();
        return;
    }
    gen.visit = &visit;
    gen.run();
}

Family enumerate_up_to_iso(int n, int r, const ForbiddenSpec& forbidden) {
    Family out(r);
    enumerate_classes(n, r, forbidden, [&](const RGraph& g) { out.add(g); });
    return out;
}

Family enumerate_up_to_iso(int n, int r) {
    ForbiddenSpec none;
    none.family = Family(r);
    return enumerate_up_to_iso(n, r, none);
}

Family induced_family_of_blowup(const RGraph& base, int k,
                                std::vector<std::string>* multiset_names) {
    if (k < base.uniformity())
        throw std::invalid_argument("need k >= r for blow-up extraction");
    Family out(base.uniformity());
    const int m = base.vertex_count();
    std::vector<int> sizes(m, 0);
    std::function<void(int, int)> rec = [&](int vertex, int remaining) {
        if (vertex == m) {
            if (remaining == 0) {
                RGraph g = instantiate_blowup(base, sizes);
                int before = out.size();
                int idx = out.add(g);
                if (multiset_names && out.size() > before) {
                    std::string name;
                    for (int i = 0; i < m; ++i)
                        name += (i ? "," : "") + std::to_string(sizes[i]);
                    multiset_names->insert(multiset_names->begin() + idx, name);
                }
            }
            return;
        }
        for (int s = 0; s <= remaining; ++s) {
            sizes[vertex] = s;
            rec(vertex + 1, remaining - s);
        }
        sizes[vertex] = 0;
    };
    rec(0, k);
    return out;
}

Family induced_subgraph_family(const Family& fam, int k) {
    Family out(fam.uniformity());
    std::vector<int> cur;
    for (const auto& g : fam.members()) {
        if (g.vertex_count() < k) continue;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(cur.size()) == k) {
                out.add(induced_subgraph(g, cur));
                return;
            }
            for (int v = start; v < g.vertex_count(); ++v) {
                cur.push_back(v);
                rec(v + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }
    return out;
}

Family filter_containing(const Family& fam, const RGraph& target, bool induced) {
    Family out(fam.uniformity());
    for (int i = 0; i < fam.size(); ++i) {
        const auto& g = fam.members()[i];
        if (target.vertex_count() > g.vertex_count()) continue;
        if (exists_embedding(target, g, induced)) out.add(g, fam.names()[i]);
    }
    return out;
}

}  // namespace copex
