#include "copex/rgraph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace copex {

RGraph::RGraph(int r, int n, std::vector<Edge> edges) : r_(r), n_(n) {
    if (r < 2) throw std::invalid_argument("uniformity must be >= 2");
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != r)
            throw std::invalid_argument("edge has wrong size");
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n)
                throw std::invalid_argument("edge vertex out of range");
            if (i > 0 && e[i] == e[i - 1])
                throw std::invalid_argument("edge has repeated vertex");
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

bool RGraph::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool RGraph::operator<(const RGraph& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (r_ != o.r_) return r_ < o.r_;
    return edges_ < o.edges_;
}

RGraph RGraph::relabeled(const std::vector<int>& perm) const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) {
        Edge f(e.size());
        for (size_t i = 0; i < e.size(); ++i) f[i] = perm[e[i]];
        out.push_back(std::move(f));
    }
    return RGraph(r_, n_, std::move(out));
}

std::string RGraph::key() const {
    std::string s;
    s.reserve(3 + edges_.size() * (r_ + 1));
    s.push_back(static_cast<char>(r_));
    s.push_back(static_cast<char>(n_));
    for (const auto& e : edges_) {
        for (int v : e) s.push_back(static_cast<char>(v + 1));
        s.push_back('\0');
    }
    return s;
}

std::vector<int> neighborhood(const RGraph& h, const std::vector<int>& s) {
    if (static_cast<int>(s.size()) != h.uniformity() - 1)
        throw std::invalid_argument("co-degree set must have r-1 vertices");
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= h.vertex_count())
            throw std::invalid_argument("co-degree set vertex out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("co-degree set has repeated vertex");
    }
    std::vector<int> out;
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (std::binary_search(sorted.begin(), sorted.end(), v)) continue;
        Edge e = sorted;
        e.insert(std::lower_bound(e.begin(), e.end(), v), v);
        if (h.has_edge(e)) out.push_back(v);
    }
    return out;
}

int codegree(const RGraph& h, const std::vector<int>& s) {
    return static_cast<int>(neighborhood(h, s).size());
}

namespace {

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn,
                     std::vector<int>& cur, int start) {
    if (static_cast<int>(cur.size()) == k) {
        fn(cur);
        return;
    }
    for (int v = start; v < n; ++v) {
        cur.push_back(v);
        for_each_subset(n, k, fn, cur, v + 1);
        cur.pop_back();
    }
}

}  // namespace

int min_pos_codegree(const RGraph& h) {
    if (h.edge_count() == 0) return 0;
    int best = -1;
    std::vector<int> cur;
    for_each_subset(
        h.vertex_count(), h.uniformity() - 1,
        [&](const std::vector<int>& s) {
            int d = codegree(h, s);
            if (d >= 1 && (best < 0 || d < best)) best = d;
        },
        cur, 0);
    return best < 0 ? 0 : best;
}

RGraph link_graph(const RGraph& h, int v) {
    if (h.uniformity() < 3)
        throw std::invalid_argument("link graph needs uniformity >= 3");
    if (v < 0 || v >= h.vertex_count())
        throw std::invalid_argument("link vertex out of range");
    std::vector<Edge> out;
    for (const auto& e : h.edges()) {
        if (!std::binary_search(e.begin(), e.end(), v)) continue;
        Edge f;
        for (int w : e)
            if (w != v) f.push_back(w > v ? w - 1 : w);
        out.push_back(std::move(f));
    }
    return RGraph(h.uniformity() - 1, h.vertex_count() - 1, std::move(out));
}

RGraph suspension(const RGraph& h) {
    int spike = h.vertex_count();
    std::vector<Edge> out;
    for (const auto& e : h.edges()) {
        Edge f = e;
        f.push_back(spike);
        out.push_back(std::move(f));
    }
    return RGraph(h.uniformity() + 1, h.vertex_count() + 1, std::move(out));
}

RGraph induced_subgraph(const RGraph& h, const std::vector<int>& s) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> rel(h.vertex_count(), -1);
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= h.vertex_count())
            throw std::invalid_argument("induced vertex out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("induced vertex set has repeats");
        rel[sorted[i]] = static_cast<int>(i);
    }
    std::vector<Edge> out;
    for (const auto& e : h.edges()) {
        Edge f;
        bool inside = true;
        for (int v : e) {
            if (rel[v] < 0) {
                inside = false;
                break;
            }
            f.push_back(rel[v]);
        }
        if (inside) out.push_back(std::move(f));
    }
    return RGraph(h.uniformity(), static_cast<int>(sorted.size()), std::move(out));
}

std::vector<Edge> all_r_subsets(int n, int r) {
    std::vector<Edge> out;
    std::vector<int> cur;
    for_each_subset(
        n, r, [&](const std::vector<int>& s) { out.push_back(s); }, cur, 0);
    return out;
}

}  // namespace copex
