#include "copex/extremal.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <stdexcept>

#include "copex/canonical.hpp"
#include "copex/rational.hpp"

namespace copex {

namespace {

constexpr int kWitnessCap = 100;

}  // namespace

ExtremalResult co_plus_ex_exact(int n, int r, const ForbiddenSpec& forbidden) {
    if (n > 7)
        std::cerr << "warning: exact co+ex beyond n=7 may take a very long time\n";
    ExtremalResult res;
    res.n = n;
    res.value = 0;
    std::vector<RGraph> witnesses;
    enumerate_classes(n, r, forbidden, [&](const RGraph& g) {
        int v = min_pos_codegree(g);
        if (v > res.value) {
            res.value = v;
            witnesses.clear();
        }
        if (v == res.value) witnesses.push_back(canonical_form(g));
    });
    std::sort(witnesses.begin(), witnesses.end());
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
    res.witness_classes = static_cast<int>(witnesses.size());
    if (witnesses.size() > kWitnessCap) witnesses.resize(kWitnessCap);
    res.witnesses = std::move(witnesses);
    return res;
}

namespace {

// Self-contained labeled-graph routines for the oracle; deliberately not
// routed through the library's search code.
struct LabeledGraph {
    int n, r;
    const std::vector<Edge>* universe;
    uint64_t mask;

    bool has(size_t idx) const { return mask >> idx & 1; }
};

int oracle_mpcd(const LabeledGraph& g, const std::vector<Edge>& sets,
                const std::vector<std::vector<size_t>>& set_edges) {
    if (g.mask == 0) return 0;
    int best = -1;
    for (size_t si = 0; si < sets.size(); ++si) {
        int d = 0;
        for (size_t ei : set_edges[si])
            if (g.has(ei)) ++d;
        if (d >= 1 && (best < 0 || d < best)) best = d;
    }
    return best < 0 ? 0 : best;
}

bool oracle_embeds(const RGraph& f, const LabeledGraph& g,
                   const std::map<Edge, size_t>& edge_index) {
    std::vector<int> map(f.vertex_count(), -1);
    std::vector<bool> used(g.n, false);
    std::function<bool(int)> bt = [&](int i) -> bool {
        if (i == f.vertex_count()) return true;
        for (int w = 0; w < g.n; ++w) {
            if (used[w]) continue;
            map[i] = w;
            used[w] = true;
            bool ok = true;
            for (const auto& e : f.edges()) {
                if (*std::max_element(e.begin(), e.end()) != i) continue;
                Edge img;
                for (int v : e) img.push_back(map[v]);
                std::sort(img.begin(), img.end());
                auto it = edge_index.find(img);
                if (it == edge_index.end() || !g.has(it->second)) {
                    ok = false;
                    break;
                }
            }
            if (ok && bt(i + 1)) return true;
            used[w] = false;
            map[i] = -1;
        }
        return false;
    };
    return bt(0);
}

}  // namespace

ExtremalResult naive_oracle(int n, int r, const ForbiddenSpec& forbidden) {
    auto universe = all_r_subsets(n, r);
    if (n > 5)
        throw std::invalid_argument("naive oracle is limited to n <= 5");
    if (forbidden.mode != ForbidMode::Subgraph && !forbidden.empty())
        throw std::invalid_argument("naive oracle handles subgraph-mode families");
    std::map<Edge, size_t> edge_index;
    for (size_t i = 0; i < universe.size(); ++i) edge_index[universe[i]] = i;
    auto sets = all_r_subsets(n, r - 1);
    std::vector<std::vector<size_t>> set_edges(sets.size());
    for (size_t si = 0; si < sets.size(); ++si) {
        for (int v = 0; v < n; ++v) {
            if (std::binary_search(sets[si].begin(), sets[si].end(), v)) continue;
            Edge e = sets[si];
            e.insert(std::lower_bound(e.begin(), e.end(), v), v);
            set_edges[si].push_back(edge_index.at(e));
        }
    }

    ExtremalResult res;
    res.n = n;
    res.value = 0;
    std::vector<RGraph> witnesses;
    const uint64_t total = uint64_t{1} << universe.size();
    for (uint64_t mask = 0; mask < total; ++mask) {
        LabeledGraph g{n, r, &universe, mask};
        bool bad = false;
        for (const auto& f : forbidden.family.members()) {
            if (f.vertex_count() > n) continue;
            if (oracle_embeds(f, g, edge_index)) {
                bad = true;
                break;
            }
        }
        if (bad) continue;
        int v = oracle_mpcd(g, sets, set_edges);
        if (v < res.value) continue;
        if (v > res.value) {
            res.value = v;
            witnesses.clear();
        }
        std::vector<Edge> edges;
        for (size_t i = 0; i < universe.size(); ++i)
            if (mask >> i & 1) edges.push_back(universe[i]);
        witnesses.push_back(canonical_form(RGraph(r, n, std::move(edges))));
    }
    std::sort(witnesses.begin(), witnesses.end());
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
    res.witness_classes = static_cast<int>(witnesses.size());
    if (witnesses.size() > kWitnessCap) witnesses.resize(kWitnessCap);
    res.witnesses = std::move(witnesses);
    return res;
}

long burnside_class_count(int n, int r) {
    auto universe = all_r_subsets(n, r);
    std::map<Edge, int> index;
    for (size_t i = 0; i < universe.size(); ++i)
        index[universe[i]] = static_cast<int>(i);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // sum of 2^(orbits of the permutation action on r-sets), / n!
    mpz_class total = 0;
    long nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    do {
        std::vector<bool> seen(universe.size(), false);
        int orbits = 0;
        for (size_t i = 0; i < universe.size(); ++i) {
            if (seen[i]) continue;
            ++orbits;
            size_t cur = i;
            while (!seen[cur]) {
                seen[cur] = true;
                Edge img(universe[cur].size());
                for (size_t j = 0; j < img.size(); ++j) img[j] = perm[universe[cur][j]];
                std::sort(img.begin(), img.end());
                cur = index.at(img);
            }
        }
        mpz_class pow = 1;
        pow <<= orbits;
        total += pow;
    } while (std::next_permutation(perm.begin(), perm.end()));
    mpz_class count = total / nfact;
    return count.get_si();
}

}  // namespace copex
