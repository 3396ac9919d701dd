#include "copex/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace copex {

namespace {

uint64_t pack_edge(const int* v, int r) {
    uint64_t k = 0;
    for (int i = 0; i < r; ++i) k = (k << 8) | static_cast<uint64_t>(v[i] + 1);
    return k;
}

// Iso-invariant color refinement. Colors are ids into a sorted key table, so
// isomorphic graphs get identical color multisets.
std::vector<int> refine_colors(const RGraph& g, std::vector<int> color) {
    const int n = g.vertex_count();
    for (int round = 0; round < n + 1; ++round) {
        using Key = std::pair<int, std::vector<std::vector<int>>>;
        std::vector<Key> keys(n);
        for (int v = 0; v < n; ++v) keys[v].first = color[v];
        for (const auto& e : g.edges()) {
            for (int v : e) {
                std::vector<int> rest;
                for (int w : e)
                    if (w != v) rest.push_back(color[w]);
                std::sort(rest.begin(), rest.end());
                keys[v].second.push_back(std::move(rest));
            }
        }
        for (int v = 0; v < n; ++v)
            std::sort(keys[v].second.begin(), keys[v].second.end());
        std::map<Key, int> ids;
        for (int v = 0; v < n; ++v) ids[keys[v]] = 0;
        int next = 0;
        for (auto& kv : ids) kv.second = next++;
        std::vector<int> fresh(n);
        for (int v = 0; v < n; ++v) fresh[v] = ids[keys[v]];
        if (fresh == color) break;
        color = std::move(fresh);
    }
    return color;
}

std::vector<std::vector<int>> color_classes(const std::vector<int>& color) {
    int num = 0;
    for (int c : color) num = std::max(num, c + 1);
    std::vector<std::vector<int>> classes(num);
    for (size_t v = 0; v < color.size(); ++v) classes[color[v]].push_back(static_cast<int>(v));
    return classes;
}

long double ordering_count(const std::vector<std::vector<int>>& classes) {
    long double c = 1;
    for (const auto& cl : classes)
        for (size_t i = 2; i <= cl.size(); ++i) c *= static_cast<long double>(i);
    return c;
}

struct Search {
    const RGraph& g;
    int n, r;
    std::vector<uint64_t> best;  // current minimal serialization
    bool have_best = false;
    std::vector<std::vector<int>> minimal_perms;  // old -> new, attaining best

    explicit Search(const RGraph& graph)
        : g(graph), n(graph.vertex_count()), r(graph.uniformity()) {}

    void try_perm(const std::vector<int>& perm) {
        std::vector<uint64_t> ser;
        ser.reserve(g.edges().size());
        int buf[16];
        for (const auto& e : g.edges()) {
            for (int i = 0; i < r; ++i) buf[i] = perm[e[i]];
            std::sort(buf, buf + r);
            ser.push_back(pack_edge(buf, r));
        }
        std::sort(ser.begin(), ser.end());
        if (!have_best || ser < best) {
            best = std::move(ser);
            have_best = true;
            minimal_perms.clear();
            minimal_perms.push_back(perm);
        } else if (ser == best) {
            minimal_perms.push_back(perm);
        }
    }

    // Enumerate all orderings consistent with the class sequence.
    void enumerate(const std::vector<std::vector<int>>& classes) {
        std::vector<int> perm(n, -1);
        place(classes, 0, 0, perm);
    }

    void place(const std::vector<std::vector<int>>& classes, size_t ci, int pos,
               std::vector<int>& perm) {
        if (ci == classes.size()) {
            try_perm(perm);
            return;
        }
        const auto& cl = classes[ci];
        std::vector<int> order(cl);
        std::sort(order.begin(), order.end());
        do {
            for (size_t i = 0; i < order.size(); ++i)
                perm[order[i]] = pos + static_cast<int>(i);
            place(classes, ci + 1, pos + static_cast<int>(order.size()), perm);
        } while (std::next_permutation(order.begin(), order.end()));
        for (int v : cl) perm[v] = -1;
    }

    // Refine, individualizing large classes to bound the ordering count.
    void run(std::vector<int> color) {
        color = refine_colors(g, color);
        auto classes = color_classes(color);
        if (ordering_count(classes) > 500000.0L) {
            for (const auto& cl : classes) {
                if (cl.size() <= 1) continue;
                int num = static_cast<int>(classes.size());
                for (int v : cl) {
                    std::vector<int> branch = color;
                    branch[v] = num;  // distinguish v
                    run(std::move(branch));
                }
                return;
            }
        }
        enumerate(classes);
    }
};

}  // namespace

CanonicalResult canonicalize(const RGraph& h) {
    const int n = h.vertex_count();
    Search search(h);
    search.run(std::vector<int>(n, 0));

    CanonicalResult out;
    out.labeling = search.minimal_perms.front();
    out.graph = h.relabeled(out.labeling);
    // aut = sigma0^{-1} . sigma over all minimal sigma
    std::vector<int> inv0(n);
    for (int v = 0; v < n; ++v) inv0[search.minimal_perms[0][v]] = v;
    std::set<std::vector<int>> seen;
    for (const auto& sigma : search.minimal_perms) {
        std::vector<int> a(n);
        for (int v = 0; v < n; ++v) a[v] = inv0[sigma[v]];
        if (seen.insert(a).second) out.automorphisms.push_back(std::move(a));
    }
    return out;
}

RGraph canonical_form(const RGraph& h) {
    Search search(h);
    search.run(std::vector<int>(h.vertex_count(), 0));
    return h.relabeled(search.minimal_perms.front());
}

bool is_isomorphic(const RGraph& g, const RGraph& h) {
    if (g.uniformity() != h.uniformity())
        throw std::invalid_argument("uniformity mismatch in isomorphism test");
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return false;
    return canonical_form(g) == canonical_form(h);
}

std::vector<int> orbit_representatives(const std::vector<Edge>& items,
                                       const std::vector<std::vector<int>>& group) {
    std::map<Edge, int> index;
    for (size_t i = 0; i < items.size(); ++i) index[items[i]] = static_cast<int>(i);
    std::vector<bool> seen(items.size(), false);
    std::vector<int> reps;
    for (size_t i = 0; i < items.size(); ++i) {
        if (seen[i]) continue;
        reps.push_back(static_cast<int>(i));
        // BFS over the orbit of items[i]
        std::vector<int> stack = {static_cast<int>(i)};
        seen[i] = true;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (const auto& perm : group) {
                Edge img(items[cur].size());
                for (size_t j = 0; j < img.size(); ++j) img[j] = perm[items[cur][j]];
                std::sort(img.begin(), img.end());
                auto it = index.find(img);
                if (it != index.end() && !seen[it->second]) {
                    seen[it->second] = true;
                    stack.push_back(it->second);
                }
            }
        }
    }
    return reps;
}

}  // namespace copex
