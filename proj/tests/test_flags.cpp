#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "copex/constructions.hpp"
#include "copex/family.hpp"
#include "copex/flags.hpp"

using namespace copex;

namespace {

ForbiddenSpec no_forbidden() {
    ForbiddenSpec spec;
    spec.family = Family(3);
    return spec;
}

ForbiddenSpec forbid(const RGraph& g) {
    ForbiddenSpec spec;
    spec.family = Family(3);
    spec.family.add(g);
    return spec;
}

// direct label-averaged product density inside a host
Rat direct_average(const Flag& f1, const Flag& f2, const FlagType& type,
                   const RGraph& host) {
    Rat total(0);
    long placements = 0;
    std::vector<int> tuple;
    std::vector<bool> used(host.vertex_count(), false);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(tuple.size()) == type.size()) {
            ++placements;
            if (realizes_type(host, tuple, type))
                total += flag_density(f1, type, host, tuple) *
                         flag_density(f2, type, host, tuple);
            return;
        }
        for (int w = 0; w < host.vertex_count(); ++w) {
            if (used[w]) continue;
            used[w] = true;
            tuple.push_back(w);
            rec();
            tuple.pop_back();
            used[w] = false;
        }
    };
    rec();
    return total / placements;
}

}  // namespace

TEST_CASE("flag generation counts") {
    // 2-labeled empty type, one free vertex: edge there or not
    CHECK(generate_flags(pair_type(), 3, no_forbidden()).size() == 2);
    // 1-labeled type, two free vertices: only the edge through all three
    FlagType point{RGraph(3, 1, {})};
    CHECK(generate_flags(point, 3, no_forbidden()).size() == 2);
    // no type: 4-vertex classes avoiding K43
    FlagType none{RGraph(3, 0, {})};
    CHECK(generate_flags(none, 4, forbid(named_construction("K43"))).size() == 4);
    // 2-labeled flags on 4 vertices (the J4-free block of the 6-vertex SDP)
    CHECK(generate_flags(pair_type(), 4, forbid(named_construction("Jk:4"))).size() == 12);
}

TEST_CASE("flag density fixtures") {
    FlagType type = pair_type();
    Flag e = edge_flag();
    RGraph k43 = named_construction("K43");
    CHECK(flag_density(e, type, k43, {0, 1}) == Rat(1));
    RGraph k43m = named_construction("K43-");
    // pair of co-degree 1 in K4^3- (paper labels 2,3 -> 0-indexed 1,2)
    CHECK(flag_density(e, type, k43m, {1, 2}) == Rat(1, 2));
    RGraph fano14 = instantiate_blowup(fano_complement(), std::vector<int>(7, 2));
    CHECK(flag_density(e, type, fano14, {0, 2}) == Rat(2, 3));
    CHECK_THROWS_AS(flag_density(e, type, k43, {0, 0}), std::invalid_argument);
}

TEST_CASE("product expansion against direct averages on 4-vertex hosts") {
    FlagType type = pair_type();
    Flag e = edge_flag();
    Flag u = unit_flag_of(type);
    Family basis4 = enumerate_up_to_iso(4, 3);
    auto ee = product_expansion(e, e, type, 4, basis4);
    auto eu = product_expansion(e, u, type, 4, basis4);
    for (int h = 0; h < basis4.size(); ++h) {
        const RGraph& host = basis4.members()[h];
        CHECK(ee[h] == direct_average(e, e, type, host));
        CHECK(eu[h] == direct_average(e, u, type, host));
    }
    // coefficient of K4^3 in E*E is 1; in the non-edge square it is 0
    int k43 = basis4.find(named_construction("K43"));
    CHECK(ee[k43] == Rat(1));
    Flag nonedge = make_flag(RGraph(3, 3, {}), type);
    auto nn = product_expansion(nonedge, nonedge, type, 4, basis4);
    CHECK(nn[k43] == Rat(0));
}

TEST_CASE("product expansion against direct averages on 5-vertex hosts") {
    FlagType point{RGraph(3, 1, {})};
    auto flags = generate_flags(point, 3, no_forbidden());
    REQUIRE(flags.size() == 2);
    Family basis5 = enumerate_up_to_iso(5, 3);
    for (const Flag& f1 : flags) {
        for (const Flag& f2 : flags) {
            auto coeffs = product_expansion(f1, f2, point, 5, basis5);
            for (int h = 0; h < basis5.size(); ++h)
                CHECK(coeffs[h] == direct_average(f1, f2, point, basis5.members()[h]));
        }
    }
}

TEST_CASE("positive co-degree constraint values") {
    // per-pair value on the 14-vertex Fano complement blow-up
    RGraph fano14 = instantiate_blowup(fano_complement(), std::vector<int>(7, 2));
    for (int a = 0; a < 14; ++a) {
        for (int b = a + 1; b < 14; ++b) {
            Rat v = per_pair_codegree_value(fano14, a, b, 4, 7);
            if (codegree(fano14, {a, b}) == 0)
                CHECK(v == Rat(0));
            else
                CHECK(v == Rat(4, 9));
        }
    }
    // threshold 0 reduces to q E^2: nonnegative on every host
    Family basis4 = enumerate_up_to_iso(4, 3);
    auto zero = pos_codegree_constraint(0, 1, 4, basis4);
    FlagType type = pair_type();
    Flag e = edge_flag();
    auto ee = product_expansion(e, e, type, 4, basis4);
    CHECK(zero == ee);
    CHECK_THROWS_AS(pos_codegree_constraint(8, 7, 4, basis4), std::invalid_argument);
}

TEST_CASE("per-pair sign for all legal co-degree values up to n = 7") {
    // The per-pair value depends only on the pair's co-degree d and on n, so
    // checking every d in {0} u [ceil(4(n-2)/7), n-2] covers every 3-graph
    // with min positive co-degree at least the threshold.
    for (int n = 3; n <= 7; ++n) {
        int lo = (4 * (n - 2) + 6) / 7;
        for (int d = 0; d <= n - 2; ++d) {
            if (d != 0 && d < lo) continue;
            Rat density(d, n - 2);
            Rat value = density * (Rat(7) * density - Rat(4));
            CHECK(value >= 0);
        }
    }
}

TEST_CASE("per-pair sign on enumerated hosts meeting the threshold") {
    for (int n = 5; n <= 6; ++n) {
        Family all = enumerate_up_to_iso(n, 3);
        int lo = (4 * (n - 2) + 6) / 7;
        for (const auto& host : all.members()) {
            if (host.edge_count() == 0 || min_pos_codegree(host) < lo) continue;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    CHECK(per_pair_codegree_value(host, a, b, 4, 7) >= 0);
        }
    }
}

TEST_CASE("density profile normalization on random hosts") {
    Family basis = enumerate_up_to_iso(6, 3);
    std::mt19937 rng(23);
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<int> size(6, 8);
    for (int trial = 0; trial < 10; ++trial) {
        int n = size(rng);
        std::vector<Edge> edges;
        for (const auto& e : all_r_subsets(n, 3))
            if (coin(rng)) edges.push_back(e);
        RGraph host(3, n, edges);
        auto d = density_profile(host, basis);
        Rat total(0);
        for (const auto& x : d) total += x;
        CHECK(total == Rat(1));
    }
}
