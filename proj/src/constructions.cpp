#include "copex/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "copex/simplex.hpp"

namespace copex {

RGraph single_r_edge(int r) {
    Edge e(r);
    for (int i = 0; i < r; ++i) e[i] = i;
    return RGraph(r, r, {e});
}

RGraph r_triangle(int r) {
    if (r < 2) throw std::invalid_argument("T^r needs r >= 2");
    std::vector<Edge> edges;
    for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
        Edge e = {a, b};
        for (int s = 3; s <= r; ++s) e.push_back(s);
        edges.push_back(e);
    }
    return RGraph(r, r + 1, edges);
}

RGraph complete_3graph(int n) {
    if (n < 3) throw std::invalid_argument("complete 3-graph needs n >= 3");
    return RGraph(3, n, all_r_subsets(n, 3));
}

RGraph fano_plane() {
    // 1-based lines 123,345,156,246,147,257,367
    return RGraph(3, 7,
                  {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}, {1, 3, 5}, {0, 3, 6}, {1, 4, 6}, {2, 5, 6}});
}

RGraph fano_complement() {
    RGraph fano = fano_plane();
    std::vector<Edge> edges;
    for (const auto& e : all_r_subsets(7, 3))
        if (!fano.has_edge(e)) edges.push_back(e);
    return RGraph(3, 7, edges);
}

RGraph j_graph(int k) {
    if (k < 3) throw std::invalid_argument("J_k needs k >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) edges.push_back({0, i, j});
    return RGraph(3, k + 1, edges);
}

RGraph tight_cycle(int l) {
    if (l < 4) throw std::invalid_argument("C_l needs l >= 4");
    std::vector<Edge> edges;
    for (int i = 0; i < l; ++i) edges.push_back({i, (i + 1) % l, (i + 2) % l});
    return RGraph(3, l, edges);
}

RGraph tight_cycle_minus(int l) {
    if (l < 4) throw std::invalid_argument("C_l^- needs l >= 4");
    std::vector<Edge> edges;
    for (int i = 0; i < l - 1; ++i) edges.push_back({i, (i + 1) % l, (i + 2) % l});
    return RGraph(3, l, edges);
}

namespace {

RGraph from_one_based(int n, std::vector<Edge> edges) {
    for (auto& e : edges)
        for (auto& v : e) --v;
    return RGraph(3, n, std::move(edges));
}

}  // namespace

RGraph named_construction(const std::string& spec) {
    std::string name = spec;
    std::vector<int> params;
    if (auto pos = spec.find(':'); pos != std::string::npos) {
        name = spec.substr(0, pos);
        std::string rest = spec.substr(pos + 1);
        size_t at = 0;
        while (at < rest.size()) {
            auto next = rest.find(':', at);
            std::string tok = rest.substr(at, next == std::string::npos ? next : next - at);
            try {
                params.push_back(std::stoi(tok));
            } catch (...) {
                throw std::invalid_argument("bad parameter in construction: " + spec);
            }
            if (next == std::string::npos) break;
            at = next + 1;
        }
    }
    auto want = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("construction " + name + " needs " +
                                        std::to_string(k) + " parameter(s)");
    };
    if (name == "K43") { want(0); return complete_3graph(4); }
    if (name == "K43-" || name == "K43m") {
        want(0);
        return from_one_based(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
    }
    if (name == "K53") { want(0); return complete_3graph(5); }
    if (name == "Kn3") { want(1); return complete_3graph(params[0]); }
    if (name == "F32") {
        want(0);
        return from_one_based(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {3, 4, 5}});
    }
    if (name == "F42") {
        want(0);
        return from_one_based(
            6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {1, 5, 6}, {2, 5, 6}, {3, 5, 6}, {4, 5, 6}});
    }
    if (name == "F33") {
        want(0);
        std::vector<Edge> edges = {{0, 1, 2}};
        for (int a : {0, 1, 2})
            for (int b : {3, 4, 5})
                for (int c : {3, 4, 5})
                    if (b < c) edges.push_back({a, b, c});
        return RGraph(3, 6, edges);
    }
    if (name == "F5") {
        want(0);
        return from_one_based(5, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}});
    }
    if (name == "Fano") { want(0); return fano_plane(); }
    if (name == "FanoComplement") { want(0); return fano_complement(); }
    if (name == "Jk") { want(1); return j_graph(params[0]); }
    if (name == "C") { want(1); return tight_cycle(params[0]); }
    if (name == "Cminus") { want(1); return tight_cycle_minus(params[0]); }
    if (name == "Tr") { want(1); return r_triangle(params[0]); }
    if (name == "F1") {
        want(0);
        // vertices a..g, edges abe,ace,bce,abf,adf,bdf,cdg
        return from_one_based(
            7, {{1, 2, 5}, {1, 3, 5}, {2, 3, 5}, {1, 2, 6}, {1, 4, 6}, {2, 4, 6}, {3, 4, 7}});
    }
    if (name == "F2") {
        want(0);
        // vertices a..e,g, edges abe,ace,bce,ade,bde,cdg
        return from_one_based(
            6, {{1, 2, 5}, {1, 3, 5}, {2, 3, 5}, {1, 4, 5}, {2, 4, 5}, {3, 4, 6}});
    }
    if (name == "F32++1") {
        want(0);
        // F32 on {a..e} = {abc,abd,abe,cde} plus {acd,ace}
        return from_one_based(
            5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {3, 4, 5}, {1, 3, 4}, {1, 3, 5}});
    }
    if (name == "F32++2") {
        want(0);
        // F32 plus {acd,bce}
        return from_one_based(
            5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {3, 4, 5}, {1, 3, 4}, {2, 3, 5}});
    }
    if (name == "Edge") { want(1); return single_r_edge(params[0]); }
    if (name == "Empty") {
        if (params.size() == 1) return RGraph(3, params[0], {});
        want(2);
        return RGraph(params[1], params[0], {});
    }
    throw std::invalid_argument("unknown construction: " + spec);
}

std::vector<std::string> named_construction_catalog() {
    return {"K43",  "K43-",    "K53",    "Kn3:n",  "F32",   "F42",      "F33",
            "F5",   "Fano",    "FanoComplement",   "Jk:k",  "C:l",      "Cminus:l",
            "Tr:r", "F1",      "F2",     "F32++1", "F32++2", "Edge:r",  "Empty:n[:r]"};
}

WeightedBlowup::WeightedBlowup(RGraph b, std::vector<Rat> w)
    : base(std::move(b)), weights(std::move(w)) {
    if (static_cast<int>(weights.size()) != base.vertex_count())
        throw std::invalid_argument("one weight per base vertex required");
    Rat total(0);
    for (const auto& x : weights) {
        if (x < 0) throw std::invalid_argument("weights must be nonnegative");
        total += x;
    }
    if (total != 1) throw std::invalid_argument("weights must sum to 1");
}

RGraph instantiate_blowup(const RGraph& base, const std::vector<int>& class_sizes) {
    if (static_cast<int>(class_sizes.size()) != base.vertex_count())
        throw std::invalid_argument("one class size per base vertex required");
    std::vector<int> start(class_sizes.size() + 1, 0);
    for (size_t i = 0; i < class_sizes.size(); ++i) {
        if (class_sizes[i] < 0) throw std::invalid_argument("negative class size");
        start[i + 1] = start[i] + class_sizes[i];
    }
    int n = start.back();
    std::vector<Edge> edges;
    for (const auto& e : base.edges()) {
        // rainbow r-sets: one vertex from each class of the base edge
        Edge pick(e.size());
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == e.size()) {
                edges.push_back(pick);
                return;
            }
            for (int v = start[e[i]]; v < start[e[i] + 1]; ++v) {
                pick[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
    }
    return RGraph(base.uniformity(), n, std::move(edges));
}

namespace {

// Positive (r-1)-sets of the base together with their neighborhoods.
std::vector<std::pair<std::vector<int>, std::vector<int>>> positive_sets(const RGraph& base) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& s : all_r_subsets(base.vertex_count(), base.uniformity() - 1)) {
        auto nb = neighborhood(base, s);
        if (!nb.empty()) out.emplace_back(s, nb);
    }
    return out;
}

}  // namespace

Rat blowup_mpcd_fraction(const WeightedBlowup& b) {
    if (b.base.edge_count() == 0)
        throw std::domain_error("blow-up fraction needs a base with an edge");
    bool first = true;
    Rat best(0);
    for (const auto& [s, nb] : positive_sets(b.base)) {
        Rat total(0);
        for (int v : nb) total += b.weights[v];
        if (first || total < best) {
            best = total;
            first = false;
        }
    }
    return best;
}

BlowupOptimum optimize_blowup_weights(const RGraph& base) {
    if (base.edge_count() == 0)
        throw std::domain_error("weight optimization needs a base with an edge");
    const int m = base.vertex_count();
    auto sets = positive_sets(base);

    // Variables: w_0..w_{m-1}, t. Maximize t subject to
    // sum_{v in N(S)} w_v - t >= 0 for every positive S, sum w = 1, w >= 0.
    auto neighborhood_row = [&](const std::vector<int>& nb, int width) {
        std::vector<Rat> row(width, Rat(0));
        for (int v : nb) row[v] = 1;
        return row;
    };

    LinearProgram lp(m + 1);
    for (const auto& [s, nb] : sets) {
        auto row = neighborhood_row(nb, m + 1);
        row[m] = -1;
        lp.add_row(std::move(row), LinearProgram::Sense::GE, Rat(0));
    }
    {
        std::vector<Rat> row(m + 1, Rat(1));
        row[m] = 0;
        lp.add_row(std::move(row), LinearProgram::Sense::EQ, Rat(1));
    }
    std::vector<Rat> obj(m + 1, Rat(0));
    obj[m] = -1;
    lp.set_objective(std::move(obj));
    auto res = lp.solve();
    if (res.status != LinearProgram::Status::Optimal)
        throw std::runtime_error("blow-up weight LP failed unexpectedly");
    Rat value = -res.value;

    // Lexicographically least optimal point: fix the value, then minimize
    // each coordinate in turn.
    std::vector<Rat> fixed;
    for (int i = 0; i < m; ++i) {
        LinearProgram step(m);
        for (const auto& [s, nb] : sets)
            step.add_row(neighborhood_row(nb, m), LinearProgram::Sense::GE, value);
        step.add_row(std::vector<Rat>(m, Rat(1)), LinearProgram::Sense::EQ, Rat(1));
        for (int j = 0; j < static_cast<int>(fixed.size()); ++j) {
            std::vector<Rat> row(m, Rat(0));
            row[j] = 1;
            step.add_row(std::move(row), LinearProgram::Sense::EQ, fixed[j]);
        }
        std::vector<Rat> c(m, Rat(0));
        c[i] = 1;
        step.set_objective(std::move(c));
        auto r = step.solve();
        if (r.status != LinearProgram::Status::Optimal)
            throw std::runtime_error("lexicographic refinement LP failed");
        fixed.push_back(r.value);
    }

    // Optimal face dimension: find the constraints (rows and w_i >= 0
    // bounds) that are tight at every optimal point, then take the rank of
    // their gradients together with the sum constraint.
    std::vector<std::vector<Rat>> tight_rows;
    tight_rows.push_back(std::vector<Rat>(m, Rat(1)));  // sum w = 1
    auto max_slack = [&](const std::vector<Rat>& grad, const Rat& rhs) -> Rat {
        LinearProgram sp(m);
        for (const auto& [s, nb] : sets)
            sp.add_row(neighborhood_row(nb, m), LinearProgram::Sense::GE, value);
        sp.add_row(std::vector<Rat>(m, Rat(1)), LinearProgram::Sense::EQ, Rat(1));
        std::vector<Rat> c(m);
        for (int j = 0; j < m; ++j) c[j] = -grad[j];
        sp.set_objective(std::move(c));
        auto r = sp.solve();
        if (r.status != LinearProgram::Status::Optimal)
            throw std::runtime_error("slack LP failed");
        return -r.value - rhs;
    };
    for (const auto& [s, nb] : sets) {
        auto grad = neighborhood_row(nb, m);
        if (max_slack(grad, value) == 0) tight_rows.push_back(grad);
    }
    for (int i = 0; i < m; ++i) {
        std::vector<Rat> grad(m, Rat(0));
        grad[i] = 1;
        if (max_slack(grad, Rat(0)) == 0) tight_rows.push_back(grad);
    }
    // Rank by Gaussian elimination.
    int rank = 0;
    for (int col = 0; col < m && rank < static_cast<int>(tight_rows.size()); ++col) {
        int pivot = -1;
        for (int i = rank; i < static_cast<int>(tight_rows.size()); ++i)
            if (tight_rows[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(tight_rows[rank], tight_rows[pivot]);
        for (int i = 0; i < static_cast<int>(tight_rows.size()); ++i) {
            if (i == rank || tight_rows[i][col] == 0) continue;
            Rat f = tight_rows[i][col] / tight_rows[rank][col];
            for (int j = 0; j < m; ++j) tight_rows[i][j] -= f * tight_rows[rank][j];
        }
        ++rank;
    }

    return {value, std::move(fixed), m - rank};
}

std::vector<int> integer_class_sizes(const WeightedBlowup& b, int n) {
    const int m = b.base.vertex_count();
    if (n < m) throw std::invalid_argument("n must be at least the base size");
    std::vector<int> sizes(m);
    std::vector<std::pair<Rat, int>> rem;
    int assigned = 0;
    for (int i = 0; i < m; ++i) {
        Rat exact = Rat(n) * b.weights[i];
        mpz_class fl = exact.get_num() / exact.get_den();  // weights >= 0
        sizes[i] = static_cast<int>(fl.get_si());
        assigned += sizes[i];
        rem.emplace_back(exact - Rat(fl), i);
    }
    std::stable_sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    for (int k = 0; k < n - assigned; ++k) ++sizes[rem[k % m].second];
    return sizes;
}

}  // namespace copex
