#include "copex/morphism.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "copex/canonical.hpp"
#include "copex/constructions.hpp"

namespace copex {

namespace {

// Vertex order for the backtracking searches: descending degree, then index.
std::vector<int> search_order(const RGraph& f) {
    std::vector<int> deg(f.vertex_count(), 0);
    for (const auto& e : f.edges())
        for (int v : e) ++deg[v];
    std::vector<int> order(f.vertex_count());
    for (int i = 0; i < f.vertex_count(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });
    return order;
}

struct MorphismSearch {
    const RGraph& f;
    const RGraph& h;
    bool injective;
    bool induced;
    std::vector<int> order;        // f vertices in placement order
    std::vector<int> rank;         // f vertex -> placement step
    std::vector<std::vector<Edge>> check_at;  // f-edges fully placed at step i
    std::vector<std::vector<Edge>> nonedges_at;
    std::vector<int> map;          // f vertex -> h vertex (-1 unset)
    std::vector<bool> used;

    MorphismSearch(const RGraph& ff, const RGraph& hh, bool inj, bool ind)
        : f(ff), h(hh), injective(inj), induced(ind) {
        order = search_order(f);
        rank.assign(f.vertex_count(), 0);
        for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
        check_at.resize(order.size() + 1);
        nonedges_at.resize(order.size() + 1);
        for (const auto& e : f.edges()) {
            int last = 0;
            for (int v : e) last = std::max(last, rank[v]);
            check_at[last + 1].push_back(e);
        }
        if (induced) {
            for (const auto& e : all_r_subsets(f.vertex_count(), f.uniformity())) {
                if (f.has_edge(e)) continue;
                int last = 0;
                for (int v : e) last = std::max(last, rank[v]);
                nonedges_at[last + 1].push_back(e);
            }
        }
        map.assign(f.vertex_count(), -1);
        used.assign(h.vertex_count(), false);
    }

    bool feasible_at(size_t step) {
        Edge img(f.uniformity());
        for (const auto& e : check_at[step]) {
            for (size_t i = 0; i < e.size(); ++i) img[i] = map[e[i]];
            std::sort(img.begin(), img.end());
            for (size_t i = 1; i < img.size(); ++i)
                if (img[i] == img[i - 1]) return false;  // collapsed edge
            if (!h.has_edge(img)) return false;
        }
        for (const auto& e : nonedges_at[step]) {
            for (size_t i = 0; i < e.size(); ++i) img[i] = map[e[i]];
            std::sort(img.begin(), img.end());
            bool distinct = true;
            for (size_t i = 1; i < img.size(); ++i)
                if (img[i] == img[i - 1]) distinct = false;
            if (distinct && h.has_edge(img)) return false;
        }
        return true;
    }

    bool search(size_t step) {
        if (step == order.size()) return true;
        int v = order[step];
        for (int w = 0; w < h.vertex_count(); ++w) {
            if (injective && used[w]) continue;
            map[v] = w;
            if (injective) used[w] = true;
            if (feasible_at(step + 1) && search(step + 1)) return true;
            if (injective) used[w] = false;
            map[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> exists_embedding(const RGraph& f, const RGraph& h,
                                                 bool induced) {
    if (f.uniformity() != h.uniformity())
        throw std::invalid_argument("uniformity mismatch in embedding test");
    if (f.vertex_count() > h.vertex_count()) return std::nullopt;
    MorphismSearch s(f, h, /*inj=*/true, induced);
    if (s.search(0)) return s.map;
    return std::nullopt;
}

std::optional<std::vector<int>> exists_homomorphism(const RGraph& f, const RGraph& h) {
    if (f.uniformity() != h.uniformity())
        throw std::invalid_argument("uniformity mismatch in homomorphism test");
    if (f.edge_count() > 0 && h.edge_count() == 0) return std::nullopt;
    MorphismSearch s(f, h, /*inj=*/false, /*induced=*/false);
    if (s.search(0)) return s.map;
    return std::nullopt;
}

bool is_homomorphism(const RGraph& f, const RGraph& h, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != f.vertex_count()) return false;
    for (int w : map)
        if (w < 0 || w >= h.vertex_count()) return false;
    for (const auto& e : f.edges()) {
        Edge img;
        for (int v : e) img.push_back(map[v]);
        std::sort(img.begin(), img.end());
        for (size_t i = 1; i < img.size(); ++i)
            if (img[i] == img[i - 1]) return false;
        if (!h.has_edge(img)) return false;
    }
    return true;
}

namespace {

void for_subsets(int n, int k, std::vector<int>& cur, int start,
                 const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == k) {
        fn(cur);
        return;
    }
    for (int v = start; v < n; ++v) {
        cur.push_back(v);
        for_subsets(n, k, cur, v + 1, fn);
        cur.pop_back();
    }
}

Rat subset_density(const RGraph& g, const RGraph& h,
                   const std::function<bool(const RGraph&)>& pred) {
    if (g.uniformity() != h.uniformity())
        throw std::invalid_argument("uniformity mismatch in density");
    if (g.vertex_count() > h.vertex_count())
        throw std::invalid_argument("pattern larger than host in density");
    long hits = 0, total = 0;
    std::vector<int> cur;
    for_subsets(h.vertex_count(), g.vertex_count(), cur, 0,
                [&](const std::vector<int>& s) {
                    ++total;
                    if (pred(induced_subgraph(h, s))) ++hits;
                });
    return frac(hits, total);
}

}  // namespace

Rat induced_density(const RGraph& g, const RGraph& h) {
    RGraph gc = canonical_form(g);
    return subset_density(g, h,
                          [&](const RGraph& sub) { return canonical_form(sub) == gc; });
}

Rat noninduced_density(const RGraph& g, const RGraph& h) {
    return subset_density(g, h, [&](const RGraph& sub) {
        return exists_embedding(g, sub, false).has_value();
    });
}

GammaRegion classify_gamma_region(const RGraph& f) {
    RGraph single_edge = single_r_edge(f.uniformity());
    if (exists_homomorphism(f, single_edge)) return GammaRegion::Zero;
    if (exists_homomorphism(f, r_triangle(f.uniformity())))
        return GammaRegion::OneOverR;
    return GammaRegion::AtLeastTwoOver2rMinus1;
}

const char* gamma_region_name(GammaRegion g) {
    switch (g) {
        case GammaRegion::Zero: return "zero";
        case GammaRegion::OneOverR: return "1/r";
        case GammaRegion::AtLeastTwoOver2rMinus1: return ">=2/(2r-1)";
    }
    return "?";
}

}  // namespace copex
