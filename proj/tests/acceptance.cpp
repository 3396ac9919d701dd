// Acceptance suite: runs one check per criterion and prints a PASS/FAIL
// line for each. Exits nonzero if any criterion fails.
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "copex/canonical.hpp"
#include "copex/certificate.hpp"
#include "copex/constructions.hpp"
#include "copex/extremal.hpp"
#include "copex/family.hpp"
#include "copex/flags.hpp"
#include "copex/io.hpp"
#include "copex/morphism.hpp"
#include "copex/pattern.hpp"
#include "copex/sdp.hpp"

using namespace copex;

namespace {

std::string g_fixtures = "fixtures";
int g_failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " " << number << ". " << name;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

ForbiddenSpec forbid(const std::vector<std::string>& names) {
    ForbiddenSpec spec;
    spec.family = Family(3);
    for (const auto& n : names) spec.family.add(named_construction(n));
    return spec;
}

bool families_match(const Family& got, const Family& expect, std::string& detail) {
    if (got.size() != expect.size()) {
        detail = "sizes " + std::to_string(got.size()) + " vs " +
                 std::to_string(expect.size());
        return false;
    }
    for (int i = 0; i < expect.size(); ++i) {
        if (got.find_canonical(expect.members()[i]) < 0) {
            detail = "fixture member " + expect.names()[i] + " not extracted";
            return false;
        }
    }
    return true;
}

bool check_optimal_values(std::string& detail) {
    for (int r = 2; r <= 5; ++r) {
        if (optimize_blowup_weights(r_triangle(r)).value != Rat(2, 2 * r - 1)) {
            detail = "T^" + std::to_string(r);
            return false;
        }
    }
    for (int k = 4; k <= 8; ++k) {
        if (optimize_blowup_weights(j_graph(k - 1)).value != Rat(k - 2, 2 * k - 3)) {
            detail = "J_" + std::to_string(k - 1);
            return false;
        }
    }
    if (optimize_blowup_weights(complete_3graph(5)).value != Rat(3, 5)) {
        detail = "K5^3";
        return false;
    }
    if (optimize_blowup_weights(fano_complement()).value != Rat(4, 7)) {
        detail = "Fano complement";
        return false;
    }
    detail = "T^r, J_{k-1}, K5^3, Fano complement all exact";
    return true;
}

bool check_family_extraction(std::string& detail) {
    Family thirteen = induced_family_of_blowup(fano_complement(), 6);
    Family fixture13 = load_family_file(g_fixtures + "/thirteen-family.json");
    if (!families_match(thirteen, fixture13, detail)) return false;
    Family seven = induced_family_of_blowup(complete_3graph(5), 6);
    Family fixture7 = load_family_file(g_fixtures + "/seven-family.json");
    if (!families_match(seven, fixture7, detail)) return false;
    detail = "13 and 7 members, member-for-member";
    return true;
}

bool check_ab_search(std::string& detail) {
    Family thirteen = load_family_file(g_fixtures + "/thirteen-family.json");
    Family five = induced_subgraph_family(thirteen, 5);
    Family with_k43 = filter_containing(five, named_construction("K43"), false);
    Family ab = load_family_file(g_fixtures + "/ab-subgraphs.json");
    if (!families_match(with_k43, ab, detail)) return false;
    detail = "exactly the two classes A and B";
    return true;
}

bool check_case_suites(std::string& detail) {
    int entries = 0;
    for (const std::string& file :
         {"j4-claims.json", "f42-claims.json", "two-fifths-cases.json"}) {
        Suite suite = load_suite_file(g_fixtures + "/" + file);
        auto report = check_case_suite(suite);
        entries += static_cast<int>(report.results.size());
        if (report.failures != 0) {
            detail = file;
            return false;
        }
    }
    detail = std::to_string(entries) + " fixture entries";
    return true;
}

bool check_homomorphism_fixtures(std::string& detail) {
    RGraph f1 = named_construction("F1");
    if (!is_homomorphism(f1, named_construction("K43"), {0, 1, 2, 3, 3, 2, 0}) ||
        !is_homomorphism(f1, named_construction("Jk:4"), {1, 2, 3, 4, 0, 0, 0}) ||
        !is_homomorphism(f1, named_construction("F32++1"), {1, 2, 3, 4, 0, 0, 2})) {
        detail = "an explicit map failed";
        return false;
    }
    if (exists_homomorphism(f1, named_construction("K43-"))) {
        detail = "F1 -> K4^3- should not exist";
        return false;
    }
    for (int l : {6, 9}) {
        if (classify_gamma_region(tight_cycle_minus(l)) != GammaRegion::Zero) {
            detail = "C" + std::to_string(l) + "- region";
            return false;
        }
    }
    for (int l : {5, 7, 8}) {
        if (classify_gamma_region(tight_cycle_minus(l)) != GammaRegion::OneOverR) {
            detail = "C" + std::to_string(l) + "- region";
            return false;
        }
    }
    if (classify_gamma_region(named_construction("F5")) != GammaRegion::OneOverR) {
        detail = "F5 region";
        return false;
    }
    detail = "f1, f2, f3 verified; cycle and F5 regions match";
    return true;
}

bool check_blowup_consistency(std::string& detail) {
    struct Fixture {
        std::string name;
        RGraph base;
        std::vector<Rat> weights;
        int n, expect;
    };
    std::vector<Fixture> fixtures = {
        {"FanoC@14", fano_complement(), std::vector<Rat>(7, Rat(1, 7)), 14, 8},
        {"T3@10", r_triangle(3), {Rat(1, 5), Rat(1, 5), Rat(1, 5), Rat(2, 5)}, 10, 4},
        {"J4@7", j_graph(4), {Rat(3, 7), Rat(1, 7), Rat(1, 7), Rat(1, 7), Rat(1, 7)}, 7, 3},
        {"K53@10", complete_3graph(5), std::vector<Rat>(5, Rat(1, 5)), 10, 6},
    };
    for (const auto& fx : fixtures) {
        std::vector<int> sizes(fx.base.vertex_count());
        for (int i = 0; i < fx.base.vertex_count(); ++i) {
            Rat s = Rat(fx.n) * fx.weights[i];
            sizes[i] = static_cast<int>(s.get_num().get_si());
        }
        WeightedBlowup wb(fx.base, fx.weights);
        if (min_pos_codegree(instantiate_blowup(fx.base, sizes)) != fx.expect ||
            Rat(fx.n) * blowup_mpcd_fraction(wb) != Rat(fx.expect)) {
            detail = fx.name;
            return false;
        }
    }
    detail = "8, 4, 3, 6 at n = 14, 10, 7, 10";
    return true;
}

bool check_oracle_equivalence(std::string& detail) {
    std::vector<std::pair<std::string, ForbiddenSpec>> specs;
    specs.emplace_back("none", forbid({}));
    specs.emplace_back("K43", forbid({"K43"}));
    specs.emplace_back("K43+F32+J4", forbid({"K43", "F32", "Jk:4"}));
    for (int n = 3; n <= 5; ++n) {
        for (const auto& [name, spec] : specs) {
            auto fast = co_plus_ex_exact(n, 3, spec);
            auto slow = naive_oracle(n, 3, spec);
            if (fast.value != slow.value || fast.witness_classes != slow.witness_classes ||
                fast.witnesses != slow.witnesses) {
                detail = "n=" + std::to_string(n) + " forbid " + name;
                return false;
            }
        }
    }
    for (int n = 3; n <= 5; ++n) {
        if (enumerate_up_to_iso(n, 3).size() != burnside_class_count(n, 3)) {
            detail = "class count n=" + std::to_string(n);
            return false;
        }
    }
    detail = "values, witnesses, and Burnside counts agree";
    return true;
}

bool check_flag_identities(std::string& detail) {
    // (a) basis-density normalization on 50 random hosts of 6..8 vertices
    Family basis6 = enumerate_up_to_iso(6, 3);
    std::mt19937 rng(20240809);
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<int> size(6, 8);
    for (int trial = 0; trial < 50; ++trial) {
        int n = size(rng);
        std::vector<Edge> edges;
        for (const auto& e : all_r_subsets(n, 3))
            if (coin(rng)) edges.push_back(e);
        RGraph host(3, n, edges);
        auto d = density_profile(host, basis6);
        Rat total(0);
        for (const auto& x : d) total += x;
        if (total != Rat(1)) {
            detail = "normalization at trial " + std::to_string(trial);
            return false;
        }
    }
    // (b) product expansion equals the direct label-averaged brute force on
    // every host with <= 5 vertices
    auto direct = [](const Flag& f1, const Flag& f2, const FlagType& type,
                     const RGraph& host) -> Rat {
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
    };
    ForbiddenSpec none;
    none.family = Family(3);
    {
        Family basis4 = enumerate_up_to_iso(4, 3);
        auto flags = generate_flags(pair_type(), 3, none);
        for (const Flag& f1 : flags)
            for (const Flag& f2 : flags) {
                auto coeffs = product_expansion(f1, f2, pair_type(), 4, basis4);
                for (int h = 0; h < basis4.size(); ++h)
                    if (coeffs[h] != direct(f1, f2, pair_type(), basis4.members()[h])) {
                        detail = "product expansion k=4";
                        return false;
                    }
            }
    }
    {
        Family basis5 = enumerate_up_to_iso(5, 3);
        FlagType point{RGraph(3, 1, {})};
        auto flags = generate_flags(point, 3, none);
        for (const Flag& f1 : flags)
            for (const Flag& f2 : flags) {
                auto coeffs = product_expansion(f1, f2, point, 5, basis5);
                for (int h = 0; h < basis5.size(); ++h)
                    if (coeffs[h] != direct(f1, f2, point, basis5.members()[h])) {
                        detail = "product expansion k=5";
                        return false;
                    }
            }
    }
    // (c) per-pair sign of the 4/7 constraint: the value depends only on the
    // pair co-degree d and on n, so checking every legal d covers every
    // qualifying 3-graph with n <= 7; enumerated hosts at n <= 6 re-check it
    // pair by pair.
    for (int n = 3; n <= 7; ++n) {
        int lo = (4 * (n - 2) + 6) / 7;
        for (int d = 0; d <= n - 2; ++d) {
            if (d != 0 && d < lo) continue;
            Rat density = frac(d, n - 2);
            if (density * (Rat(7) * density - Rat(4)) < 0) {
                detail = "per-pair sign n=" + std::to_string(n);
                return false;
            }
        }
    }
    for (int n = 5; n <= 6; ++n) {
        Family all = enumerate_up_to_iso(n, 3);
        int lo = (4 * (n - 2) + 6) / 7;
        for (const auto& host : all.members()) {
            if (host.edge_count() == 0 || min_pos_codegree(host) < lo) continue;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (per_pair_codegree_value(host, a, b, 4, 7) < 0) {
                        detail = "enumerated host violates the sign";
                        return false;
                    }
        }
    }
    // (d) the 14-vertex Fano complement blow-up gives exactly 4/9 per pair
    RGraph fano14 = instantiate_blowup(fano_complement(), std::vector<int>(7, 2));
    for (int a = 0; a < 14; ++a)
        for (int b = a + 1; b < 14; ++b) {
            Rat v = per_pair_codegree_value(fano14, a, b, 4, 7);
            Rat expect = codegree(fano14, {a, b}) == 0 ? Rat(0) : Rat(4, 9);
            if (v != expect) {
                detail = "Fano blow-up pair value";
                return false;
            }
        }
    detail = "normalization, products, signs, 4/9 on the blow-up";
    return true;
}

bool check_certificate_verifier(std::string& detail) {
    // trivial accept
    AssembledSDP trivial;
    trivial.basis_size = 2;
    trivial.objective = {Rat(1, 2), Rat(1, 2)};
    Certificate tcert;
    tcert.bound = Rat(1, 2);
    auto v0 = verify_certificate(trivial, tcert);
    if (!v0.accepted || v0.min_slack != Rat(0)) {
        detail = "trivial certificate";
        return false;
    }
    // toy accept with a multiplier
    AssembledSDP toy;
    toy.basis_size = 2;
    toy.objective = {Rat(1), Rat(0)};
    toy.linear = {{Rat(1), Rat(-1)}};
    Certificate ycert;
    ycert.bound = Rat(0);
    ycert.multipliers = {Rat(1)};
    if (!verify_certificate(toy, ycert).accepted) {
        detail = "toy certificate";
        return false;
    }
    // three corruption modes, each with its location
    AssembledSDP p = toy;
    p.block_dims = {2};
    p.m = {{{{Rat(1), Rat(0)}, {Rat(0), Rat(0)}}, {{Rat(0), Rat(0)}, {Rat(0), Rat(1)}}}};
    Certificate bad1;
    bad1.bound = Rat(0);
    bad1.psd_blocks = {{{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}}};
    bad1.multipliers = {Rat(0)};
    auto v1 = verify_certificate(p, bad1);
    if (v1.accepted || v1.fail_block != 0 || v1.reason.find("psd") == std::string::npos) {
        detail = "negative pivot mode";
        return false;
    }
    Certificate bad2;
    bad2.bound = Rat(0);
    bad2.psd_blocks = {{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}};
    bad2.multipliers = {Rat(-1)};
    auto v2 = verify_certificate(p, bad2);
    if (v2.accepted || v2.fail_index != 0 ||
        v2.reason.find("multiplier") == std::string::npos) {
        detail = "negative multiplier mode";
        return false;
    }
    Certificate bad3;
    bad3.bound = Rat(0);
    bad3.psd_blocks = {{{Rat(0), Rat(0)}, {Rat(0), Rat(2)}}};
    bad3.multipliers = {Rat(0)};
    auto v3 = verify_certificate(p, bad3);
    if (v3.accepted || v3.fail_index != 1 ||
        v3.reason.find("slack violation") == std::string::npos) {
        detail = "slack violation mode";
        return false;
    }
    detail = "accepts both fixtures, rejects all three corruptions with locations";
    return true;
}

bool check_sdp_exports(std::string& detail) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "copex-acceptance-sdp";
    fs::create_directories(dir);

    struct Job {
        std::string name;
        std::vector<std::string> forbid;
        std::string outside;  // penalize basis members outside this family
        bool turan;           // edge-density objective instead
        int num, den;         // co-degree threshold (0/1 = none)
        bool plain_codegree;  // minimum co-degree form instead of positive
    };
    std::vector<Job> jobs = {
        {"fa47-j4", {"Jk:4"}, "thirteen-family.json", false, 4, 7, false},
        {"f42-threefifths", {"F42"}, "seven-family.json", false, 3, 5, false},
        {"pi-f42", {"F42"}, "", true, 0, 1, false},
        {"gamma-f42", {"F42"}, "", true, 837, 2000, true},
        {"gammaplus-f33", {"F33"}, "", true, 77, 125, false},
    };
    for (const auto& job : jobs) {
        ForbiddenSpec spec = forbid(job.forbid);
        Family basis = enumerate_up_to_iso(6, 3, spec);
        SDPProblem p;
        p.basis = basis;
        p.objective.assign(basis.size(), Rat(0));
        if (job.turan) {
            for (int h = 0; h < basis.size(); ++h)
                p.objective[h] = frac(-basis.members()[h].edge_count(), 20);
        } else {
            Family good = load_family_file(g_fixtures + "/" + job.outside);
            for (int h = 0; h < basis.size(); ++h)
                if (good.find_canonical(basis.members()[h]) < 0)
                    p.objective[h] = Rat(-1);
        }
        p.blocks.push_back(build_type_block(pair_type(), 6, basis, spec));
        size_t expected_dim = generate_flags(pair_type(), 4, spec).size();
        if (p.blocks[0].flags.size() != expected_dim) {
            detail = job.name + " block dimension";
            return false;
        }
        if (job.num > 0) {
            auto c = job.plain_codegree
                         ? min_codegree_constraint(job.num, job.den, 6, basis)
                         : pos_codegree_constraint(job.num, job.den, 6, basis);
            p.linear.push_back({"codegree", std::move(c)});
        }
        std::string path = (dir / (job.name + ".sdpa")).string();
        export_sdpa_file(p, path);
        AssembledSDP parsed = parse_sdpa_file(path);
        if (!(parsed == to_assembled(p))) {
            detail = job.name + " round trip";
            return false;
        }
        // exact verification of a valid (trivial) rational certificate
        Certificate cert;
        cert.bound = Rat(0);
        for (int h = 0; h < basis.size(); ++h)
            if (p.objective[h] < cert.bound) cert.bound = p.objective[h];
        for (int d : parsed.block_dims)
            cert.psd_blocks.emplace_back(d, std::vector<Rat>(d, Rat(0)));
        cert.multipliers.assign(parsed.linear.size(), Rat(0));
        if (!verify_certificate(parsed, cert).accepted) {
            detail = job.name + " certificate";
            return false;
        }
    }
    detail = "5 problems exported to " + dir.string() + ", parsed back, verified";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_fixtures = argv[1];
    criterion(1, "optimal blow-up weightings", check_optimal_values);
    criterion(2, "six-vertex family extraction", check_family_extraction);
    criterion(3, "A/B five-vertex search", check_ab_search);
    criterion(4, "case-analysis suites", check_case_suites);
    criterion(5, "homomorphism and region fixtures", check_homomorphism_fixtures);
    criterion(6, "blow-up co-degree consistency", check_blowup_consistency);
    criterion(7, "oracle equivalence", check_oracle_equivalence);
    criterion(8, "flag identities", check_flag_identities);
    criterion(9, "certificate verifier", check_certificate_verifier);
    criterion(10, "paper-scale SDP assembly and export (solving is external)",
              check_sdp_exports);
    if (g_failures == 0)
        std::cout << "ACCEPTANCE PASS (10/10)" << std::endl;
    else
        std::cout << "ACCEPTANCE FAIL (" << (10 - g_failures) << "/10)" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
