#include "copex/flags.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "copex/canonical.hpp"

namespace copex {

namespace {

// Least edge list over permutations fixing 0..s-1 pointwise.
RGraph label_canonical(const RGraph& g, int s) {
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<int> tail(perm.begin() + s, perm.end());
    std::sort(tail.begin(), tail.end());
    RGraph best = g;
    bool first = true;
    do {
        for (int i = s; i < n; ++i) perm[i] = tail[i - s];
        RGraph cand = g.relabeled(perm);
        if (first || cand < best) {
            best = cand;
            first = false;
        }
    } while (std::next_permutation(tail.begin(), tail.end()));
    return best;
}

void for_subsets_excluding(int n, int k, const std::vector<bool>& excluded,
                           const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            fn(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            if (excluded[v]) continue;
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

bool Flag::operator<(const Flag& o) const {
    if (s != o.s) return s < o.s;
    return graph < o.graph;
}

Flag make_flag(const RGraph& graph, const FlagType& type) {
    const int s = type.size();
    if (graph.vertex_count() < s)
        throw std::invalid_argument("flag smaller than its type");
    if (graph.uniformity() != type.sigma.uniformity())
        throw std::invalid_argument("flag/type uniformity mismatch");
    std::vector<int> ids(s);
    for (int i = 0; i < s; ++i) ids[i] = i;
    if (induced_subgraph(graph, ids) != type.sigma)
        throw std::invalid_argument("labeled vertices do not induce the type");
    return Flag{label_canonical(graph, s), s};
}

FlagType pair_type() { return FlagType{RGraph(3, 2, {})}; }

Flag edge_flag() {
    return make_flag(RGraph(3, 3, {{0, 1, 2}}), pair_type());
}

Flag unit_flag_of(const FlagType& type) {
    return Flag{type.sigma, type.size()};
}

bool realizes_type(const RGraph& host, const std::vector<int>& theta,
                   const FlagType& type) {
    if (static_cast<int>(theta.size()) != type.size()) return false;
    std::vector<int> sorted = theta;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= host.vertex_count()) return false;
        if (i > 0 && sorted[i] == sorted[i - 1]) return false;
    }
    // Relabel theta_i -> i and compare against sigma.
    std::vector<Edge> edges;
    std::map<int, int> rel;
    for (size_t i = 0; i < theta.size(); ++i) rel[theta[i]] = static_cast<int>(i);
    for (const auto& e : host.edges()) {
        Edge f;
        bool inside = true;
        for (int v : e) {
            auto it = rel.find(v);
            if (it == rel.end()) {
                inside = false;
                break;
            }
            f.push_back(it->second);
        }
        if (inside) edges.push_back(std::move(f));
    }
    return RGraph(host.uniformity(), type.size(), std::move(edges)) == type.sigma;
}

std::vector<Flag> generate_flags(const FlagType& type, int n_total,
                                 const ForbiddenSpec& admissible) {
    const int s = type.size();
    const int r = type.sigma.uniformity();
    if (n_total < s) throw std::invalid_argument("flag size below type size");
    // Potential edges not contained in the labeled set.
    std::vector<Edge> free_edges;
    for (const auto& e : all_r_subsets(n_total, r))
        if (e.back() >= s) free_edges.push_back(e);
    std::vector<RGraph> seen;
    std::vector<Flag> out;
    const size_t combos = size_t{1} << free_edges.size();
    for (size_t mask = 0; mask < combos; ++mask) {
        std::vector<Edge> edges = type.sigma.edges();
        for (size_t i = 0; i < free_edges.size(); ++i)
            if (mask >> i & 1) edges.push_back(free_edges[i]);
        RGraph g(r, n_total, std::move(edges));
        if (!admissible.empty() && admissible.excludes(g)) continue;
        RGraph norm = label_canonical(g, s);
        auto it = std::lower_bound(seen.begin(), seen.end(), norm);
        if (it != seen.end() && *it == norm) continue;
        seen.insert(it, norm);
    }
    for (auto& g : seen) out.push_back(Flag{std::move(g), s});
    return out;
}

Rat flag_density(const Flag& f, const FlagType& type, const RGraph& host,
                 const std::vector<int>& theta) {
    if (!realizes_type(host, theta, type))
        throw std::invalid_argument("theta does not realize the flag type");
    const int s = f.s;
    const int ext = f.graph.vertex_count() - s;
    std::vector<bool> excluded(host.vertex_count(), false);
    for (int v : theta) excluded[v] = true;
    long hits = 0, total = 0;
    std::vector<int> verts(theta);
    for_subsets_excluding(host.vertex_count(), ext, excluded,
                          [&](const std::vector<int>& subset) {
                              ++total;
                              verts.resize(s);
                              for (int v : subset) verts.push_back(v);
                              // Relabel: theta_i -> i, extension -> s.. in
                              // sorted order (the extension order is then
                              // absorbed by label_canonical).
                              std::map<int, int> rel;
                              for (size_t i = 0; i < verts.size(); ++i)
                                  rel[verts[i]] = static_cast<int>(i);
                              std::vector<Edge> edges;
                              for (const auto& e : host.edges()) {
                                  Edge g;
                                  bool inside = true;
                                  for (int v : e) {
                                      auto it = rel.find(v);
                                      if (it == rel.end()) {
                                          inside = false;
                                          break;
                                      }
                                      g.push_back(it->second);
                                  }
                                  if (inside) edges.push_back(std::move(g));
                              }
                              RGraph ind(host.uniformity(), s + ext, std::move(edges));
                              if (label_canonical(ind, s) == f.graph) ++hits;
                          });
    if (total == 0) return Rat(0);
    return frac(hits, total);
}

std::vector<Rat> flag_profile(const std::vector<Flag>& flags, const FlagType& type,
                              const RGraph& host, const std::vector<int>& theta) {
    if (!realizes_type(host, theta, type))
        throw std::invalid_argument("theta does not realize the flag type");
    const int s = type.size();
    if (flags.empty()) return {};
    const int nf = flags.front().graph.vertex_count();
    std::map<RGraph, int> index;
    for (size_t i = 0; i < flags.size(); ++i) {
        if (flags[i].s != s || flags[i].graph.vertex_count() != nf)
            throw std::invalid_argument("flag profile needs uniform flag shape");
        index[flags[i].graph] = static_cast<int>(i);
    }
    std::vector<long> counts(flags.size(), 0);
    long total = 0;
    std::vector<bool> excluded(host.vertex_count(), false);
    for (int v : theta) excluded[v] = true;
    std::vector<int> verts(theta);
    for_subsets_excluding(host.vertex_count(), nf - s, excluded,
                          [&](const std::vector<int>& subset) {
                              ++total;
                              verts.resize(s);
                              for (int v : subset) verts.push_back(v);
                              std::map<int, int> rel;
                              for (size_t i = 0; i < verts.size(); ++i)
                                  rel[verts[i]] = static_cast<int>(i);
                              std::vector<Edge> edges;
                              for (const auto& e : host.edges()) {
                                  Edge g;
                                  bool inside = true;
                                  for (int v : e) {
                                      auto it = rel.find(v);
                                      if (it == rel.end()) {
                                          inside = false;
                                          break;
                                      }
                                      g.push_back(it->second);
                                  }
                                  if (inside) edges.push_back(std::move(g));
                              }
                              RGraph norm = label_canonical(
                                  RGraph(host.uniformity(), nf, std::move(edges)), s);
                              auto it = index.find(norm);
                              if (it != index.end()) ++counts[it->second];
                          });
    std::vector<Rat> out(flags.size(), Rat(0));
    if (total == 0) return out;
    for (size_t i = 0; i < flags.size(); ++i) out[i] = frac(counts[i], total);
    return out;
}

namespace {

void for_each_ordered_tuple(int n, int s,
                            const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> tuple;
    std::vector<bool> used(n, false);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(tuple.size()) == s) {
            fn(tuple);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            tuple.push_back(v);
            rec();
            tuple.pop_back();
            used[v] = false;
        }
    };
    rec();
}

}  // namespace

std::vector<Rat> product_expansion(const Flag& f1, const Flag& f2,
                                   const FlagType& type, int k, const Family& basis) {
    if (f1.s != type.size() || f2.s != type.size())
        throw std::invalid_argument("flags do not match the type");
    if (f1.graph.vertex_count() + f2.graph.vertex_count() - type.size() > k)
        throw std::invalid_argument("flag product does not fit in k vertices");
    std::vector<Rat> out(basis.size(), Rat(0));
    for (int h = 0; h < basis.size(); ++h) {
        const RGraph& host = basis.members()[h];
        if (host.vertex_count() != k)
            throw std::invalid_argument("basis member is not a k-vertex graph");
        Rat total(0);
        long placements = 0;
        for_each_ordered_tuple(k, type.size(), [&](const std::vector<int>& theta) {
            ++placements;
            if (!realizes_type(host, theta, type)) return;
            total += flag_density(f1, type, host, theta) *
                     flag_density(f2, type, host, theta);
        });
        if (placements > 0) out[h] = total / placements;
    }
    return out;
}

std::vector<Rat> pos_codegree_constraint(int threshold_num, int threshold_den,
                                         int k, const Family& basis) {
    if (threshold_den <= 0 || threshold_num < 0 || threshold_num > threshold_den)
        throw std::invalid_argument("threshold must be a fraction in [0,1]");
    if (k < 3) throw std::invalid_argument("need k >= 3");
    FlagType type = pair_type();
    Flag e = edge_flag();
    Flag u = unit_flag_of(type);
    auto ee = product_expansion(e, e, type, k, basis);
    auto eu = product_expansion(e, u, type, k, basis);
    std::vector<Rat> out(basis.size());
    for (int i = 0; i < basis.size(); ++i)
        out[i] = Rat(threshold_den) * ee[i] - Rat(threshold_num) * eu[i];
    return out;
}

std::vector<Rat> min_codegree_constraint(int threshold_num, int threshold_den,
                                         int k, const Family& basis) {
    if (threshold_den <= 0 || threshold_num < 0 || threshold_num > threshold_den)
        throw std::invalid_argument("threshold must be a fraction in [0,1]");
    if (k < 3) throw std::invalid_argument("need k >= 3");
    FlagType type = pair_type();
    Flag e = edge_flag();
    Flag u = unit_flag_of(type);
    auto eu = product_expansion(e, u, type, k, basis);
    auto uu = product_expansion(u, u, type, k, basis);
    std::vector<Rat> out(basis.size());
    for (int i = 0; i < basis.size(); ++i)
        out[i] = Rat(threshold_den) * eu[i] - Rat(threshold_num) * uu[i];
    return out;
}

Rat per_pair_codegree_value(const RGraph& host, int a, int b, int threshold_num,
                            int threshold_den) {
    if (host.uniformity() != 3)
        throw std::invalid_argument("per-pair value is for 3-graphs");
    if (host.vertex_count() < 3)
        throw std::invalid_argument("host too small for a pair extension");
    Rat d = frac(codegree(host, {a, b}), host.vertex_count() - 2);
    return d * (Rat(threshold_den) * d - Rat(threshold_num));
}

std::vector<Rat> density_profile(const RGraph& host, const Family& basis) {
    if (basis.size() == 0) throw std::invalid_argument("empty basis");
    const int k = basis.members().front().vertex_count();
    if (host.vertex_count() < k)
        throw std::invalid_argument("host smaller than the basis size");
    std::vector<long> counts(basis.size(), 0);
    long total = 0;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            ++total;
            int idx = basis.find(induced_subgraph(host, cur));
            if (idx < 0)
                throw std::runtime_error("host has an induced subgraph outside the basis");
            ++counts[idx];
            return;
        }
        for (int v = start; v < host.vertex_count(); ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::vector<Rat> out(basis.size());
    for (int i = 0; i < basis.size(); ++i) out[i] = frac(counts[i], total);
    return out;
}

DensityVector make_density_vector(const RGraph& host, const Family& basis) {
    return DensityVector{basis, density_profile(host, basis)};
}

}  // namespace copex
