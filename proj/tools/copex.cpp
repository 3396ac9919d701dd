// copex: exact computations around the minimum positive co-degree of small
// uniform hypergraphs. Subcommands cover constructions and blow-up
// optimization, enumeration under forbidden families, labeled pattern case
// checks, flag-algebra densities with SDP export, and exact certificate
// verification.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "copex/canonical.hpp"
#include "copex/certificate.hpp"
#include "copex/constructions.hpp"
#include "copex/extremal.hpp"
#include "copex/family.hpp"
#include "copex/flags.hpp"
#include "copex/io.hpp"
#include "copex/morphism.hpp"
#include "copex/pattern.hpp"
#include "copex/rgraph.hpp"
#include "copex/sdp.hpp"
#include "copex/simplex.hpp"

using namespace copex;
using nlohmann::json;

namespace {

struct Options {
    std::string format = "text";
    int jobs = 1;
};

json graph_json(const RGraph& g) {
    return json{{"r", g.uniformity()}, {"n", g.vertex_count()}, {"edges", g.edges()}};
}

void print_graph(const RGraph& g, const Options& opt) {
    if (opt.format == "json")
        std::cout << graph_json(g).dump() << '\n';
    else
        write_graph(std::cout, g);
}

void print_family(const Family& fam, const Options& opt) {
    if (opt.format == "json") {
        std::cout << family_to_json(fam).dump(1) << '\n';
        return;
    }
    for (int i = 0; i < fam.size(); ++i) {
        if (i) std::cout << '\n';
        if (!fam.names()[i].empty()) std::cout << "# " << fam.names()[i] << '\n';
        write_graph(std::cout, fam.members()[i]);
    }
}

void print_map(const std::optional<std::vector<int>>& map, const Options& opt) {
    if (opt.format == "json") {
        json j;
        j["found"] = map.has_value();
        if (map) j["map"] = *map;
        std::cout << j.dump() << '\n';
        return;
    }
    if (!map) {
        std::cout << "none\n";
        return;
    }
    for (size_t i = 0; i < map->size(); ++i)
        std::cout << i << " -> " << (*map)[i] << '\n';
}

ForbiddenSpec make_forbidden(const std::vector<std::string>& names,
                             const std::string& file, bool induced, int r) {
    ForbiddenSpec spec;
    spec.family = Family(r);
    spec.mode = induced ? ForbidMode::Induced : ForbidMode::Subgraph;
    for (const auto& n : names) spec.family.add(load_graph_arg(n));
    if (!file.empty()) {
        Family fromFile = load_family_file(file);
        for (const auto& m : fromFile.members()) spec.family.add(m);
    }
    return spec;
}

int run(int argc, char** argv) {
    CLI::App app{"exact minimum positive co-degree toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--jobs", opt.jobs, "worker cap for search verbs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    int exit_status = 0;

    // construct
    auto* construct = app.add_subcommand("construct", "emit a named construction");
    std::string cname;
    bool list_names = false;
    construct->add_option("name", cname, "construction name, e.g. Jk:4");
    construct->add_flag("--list", list_names, "list known names");
    construct->callback([&] {
        if (list_names) {
            for (const auto& n : named_construction_catalog()) std::cout << n << '\n';
            return;
        }
        if (cname.empty()) throw CLI::ValidationError("construct", "name required");
        print_graph(named_construction(cname), opt);
    });

    // mpcd
    auto* mpcd = app.add_subcommand("mpcd", "minimum positive co-degree");
    std::string mpcd_graph = "-";
    mpcd->add_option("graph", mpcd_graph, "graph (name, file, or - for stdin)");
    mpcd->callback([&] {
        int v = min_pos_codegree(load_graph_arg(mpcd_graph));
        if (opt.format == "json")
            std::cout << json{{"mpcd", v}}.dump() << '\n';
        else
            std::cout << v << '\n';
    });

    // link
    auto* link = app.add_subcommand("link", "link graph of a vertex");
    std::string link_graph_arg = "-";
    int link_vertex = 0;
    link->add_option("graph", link_graph_arg, "graph");
    link->add_option("-v,--vertex", link_vertex, "vertex")->required();
    link->callback([&] {
        print_graph(copex::link_graph(load_graph_arg(link_graph_arg), link_vertex), opt);
    });

    // iso
    auto* iso = app.add_subcommand("iso", "isomorphism test");
    std::string iso_g, iso_h;
    bool iso_canon = false;
    iso->add_option("g", iso_g, "first graph")->required();
    iso->add_option("other", iso_h, "second graph");
    iso->add_flag("--canonical", iso_canon, "print the canonical form of g");
    iso->callback([&] {
        RGraph g = load_graph_arg(iso_g);
        if (iso_canon) {
            print_graph(canonical_form(g), opt);
            return;
        }
        if (iso_h.empty()) throw CLI::ValidationError("iso", "second graph required");
        bool eq = is_isomorphic(g, load_graph_arg(iso_h));
        if (opt.format == "json")
            std::cout << json{{"isomorphic", eq}}.dump() << '\n';
        else
            std::cout << (eq ? "true" : "false") << '\n';
    });

    // hom / embed
    auto* hom = app.add_subcommand("hom", "homomorphism search");
    std::string hom_f, hom_h;
    hom->add_option("f", hom_f, "source graph")->required();
    hom->add_option("target", hom_h, "target graph")->required();
    hom->callback([&] {
        print_map(exists_homomorphism(load_graph_arg(hom_f), load_graph_arg(hom_h)), opt);
    });

    auto* embed = app.add_subcommand("embed", "injective embedding search");
    std::string emb_f, emb_h;
    bool emb_induced = false;
    embed->add_option("f", emb_f, "pattern graph")->required();
    embed->add_option("host", emb_h, "host graph")->required();
    embed->add_flag("--induced", emb_induced, "require an induced copy");
    embed->callback([&] {
        print_map(exists_embedding(load_graph_arg(emb_f), load_graph_arg(emb_h), emb_induced),
                  opt);
    });

    // classify
    auto* classify = app.add_subcommand("classify", "gamma+ region of a single graph");
    std::string cls_g = "-";
    classify->add_option("graph", cls_g, "graph");
    classify->callback([&] {
        auto region = classify_gamma_region(load_graph_arg(cls_g));
        if (opt.format == "json")
            std::cout << json{{"region", gamma_region_name(region)}}.dump() << '\n';
        else
            std::cout << gamma_region_name(region) << '\n';
    });

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "isomorphism classes on n vertices");
    int en_n = 0, en_r = 3;
    std::vector<std::string> en_forbid;
    std::string en_forbid_file;
    bool en_induced = false, en_count = false;
    enumerate->add_option("-n", en_n, "vertex count")->required();
    enumerate->add_option("-r", en_r, "uniformity")->capture_default_str();
    enumerate->add_option("--forbid", en_forbid, "forbidden graphs (names or files)");
    enumerate->add_option("--forbid-file", en_forbid_file, "forbidden family JSON");
    enumerate->add_flag("--induced", en_induced, "forbid induced copies");
    enumerate->add_flag("--count", en_count, "print only the class count");
    enumerate->callback([&] {
        auto spec = make_forbidden(en_forbid, en_forbid_file, en_induced, en_r);
        Family fam = enumerate_up_to_iso(en_n, en_r, spec);
        if (en_count)
            std::cout << fam.size() << '\n';
        else
            print_family(fam, opt);
    });

    // family-extract
    auto* extract = app.add_subcommand("family-extract",
                                       "k-vertex induced subgraph families");
    std::string ex_blowup, ex_from;
    int ex_k = 0;
    extract->add_option("--blowup", ex_blowup, "base graph of a blow-up");
    extract->add_option("--from", ex_from, "family JSON file");
    extract->add_option("-k", ex_k, "subgraph size")->required();
    extract->callback([&] {
        if (ex_blowup.empty() == ex_from.empty())
            throw CLI::ValidationError("family-extract", "use exactly one of --blowup/--from");
        Family fam = ex_blowup.empty()
                         ? induced_subgraph_family(load_family_file(ex_from), ex_k)
                         : induced_family_of_blowup(load_graph_arg(ex_blowup), ex_k);
        print_family(fam, opt);
    });

    // filter
    auto* filter = app.add_subcommand("filter", "family members containing a target");
    std::string fl_family, fl_target;
    bool fl_induced = false;
    filter->add_option("family", fl_family, "family JSON file")->required();
    filter->add_option("--target", fl_target, "target graph")->required();
    filter->add_flag("--induced", fl_induced, "induced containment");
    filter->callback([&] {
        print_family(filter_containing(load_family_file(fl_family),
                                       load_graph_arg(fl_target), fl_induced),
                     opt);
    });

    // pattern
    auto* pattern = app.add_subcommand("pattern", "labeled pattern embeddings");
    std::string pat_host = "-", pat_file;
    bool pat_count = false;
    pattern->add_option("host", pat_host, "host graph");
    pattern->add_option("--pattern", pat_file, "pattern JSON file")->required();
    pattern->add_flag("--count", pat_count, "print only the embedding count");
    pattern->callback([&] {
        std::ifstream in(pat_file);
        if (!in) throw std::runtime_error("cannot open pattern file: " + pat_file);
        json j;
        in >> j;
        Pattern p = pattern_from_json(j);
        auto maps = find_pattern_embeddings(load_graph_arg(pat_host), p);
        if (pat_count) {
            std::cout << maps.size() << '\n';
            return;
        }
        if (opt.format == "json") {
            std::cout << json(maps).dump() << '\n';
            return;
        }
        for (const auto& m : maps) {
            for (size_t i = 0; i < m.size(); ++i) std::cout << (i ? " " : "") << m[i];
            std::cout << '\n';
        }
    });

    // suite
    auto* suite = app.add_subcommand("suite", "run a case-analysis fixture suite");
    std::string suite_file;
    suite->add_option("file", suite_file, "suite JSON")->required();
    suite->callback([&] {
        Suite s = load_suite_file(suite_file);
        auto report = check_case_suite(s);
        if (opt.format == "json") {
            json j;
            j["name"] = s.name;
            j["failures"] = report.failures;
            j["results"] = json::array();
            for (const auto& r : report.results)
                j["results"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            std::cout << j.dump(1) << '\n';
        } else {
            for (const auto& r : report.results)
                std::cout << (r.pass ? "PASS" : "FAIL") << ' ' << r.name << " (" << r.detail
                          << ")\n";
            if (report.failures == 0)
                std::cout << "PASS 0 failures\n";
            else
                std::cout << "FAIL " << report.failures << " failures\n";
        }
        if (report.failures > 0) exit_status = 1;
    });

    // optimize-weights
    auto* optw = app.add_subcommand("optimize-weights", "optimal blow-up weighting");
    std::string ow_base = "-";
    optw->add_option("base", ow_base, "base graph");
    optw->callback([&] {
        auto res = optimize_blowup_weights(load_graph_arg(ow_base));
        if (opt.format == "json") {
            json j;
            j["value"] = rat_str(res.value);
            j["weights"] = json::array();
            for (const auto& w : res.weights) j["weights"].push_back(rat_str(w));
            j["optimal_face_dim"] = res.optimal_face_dim;
            std::cout << j.dump() << '\n';
            return;
        }
        std::cout << "value " << rat_str(res.value) << '\n';
        for (const auto& w : res.weights) std::cout << rat_str(w) << '\n';
        std::cout << "optimal-face-dim " << res.optimal_face_dim << '\n';
    });

    // blowup
    auto* blowup = app.add_subcommand("blowup", "instantiate a blow-up");
    std::string bu_base = "-", bu_sizes;
    int bu_n = 0;
    blowup->add_option("base", bu_base, "base graph");
    blowup->add_option("--sizes", bu_sizes, "comma-separated class sizes");
    blowup->add_option("-n", bu_n, "total size; sizes from the optimal weighting");
    blowup->callback([&] {
        RGraph base = load_graph_arg(bu_base);
        std::vector<int> sizes;
        if (!bu_sizes.empty()) {
            std::stringstream ss(bu_sizes);
            std::string tok;
            while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
        } else if (bu_n > 0) {
            auto res = optimize_blowup_weights(base);
            sizes = integer_class_sizes(WeightedBlowup(base, res.weights), bu_n);
        } else {
            throw CLI::ValidationError("blowup", "need --sizes or -n");
        }
        print_graph(instantiate_blowup(base, sizes), opt);
    });

    // coplusex
    auto* cpe = app.add_subcommand("coplusex", "exact co+ex(n, F)");
    int ce_n = 0, ce_r = 3;
    std::vector<std::string> ce_forbid;
    std::string ce_forbid_file;
    bool ce_naive = false;
    cpe->add_option("-n", ce_n, "vertex count")->required();
    cpe->add_option("-r", ce_r, "uniformity")->capture_default_str();
    cpe->add_option("--forbid", ce_forbid, "forbidden graphs");
    cpe->add_option("--forbid-file", ce_forbid_file, "forbidden family JSON");
    cpe->add_flag("--naive", ce_naive, "use the brute-force oracle (n <= 5)");
    cpe->callback([&] {
        auto spec = make_forbidden(ce_forbid, ce_forbid_file, false, ce_r);
        auto res = ce_naive ? naive_oracle(ce_n, ce_r, spec)
                            : co_plus_ex_exact(ce_n, ce_r, spec);
        if (opt.format == "json") {
            json j;
            j["n"] = res.n;
            j["value"] = res.value;
            j["witness_classes"] = res.witness_classes;
            j["witnesses"] = json::array();
            for (const auto& w : res.witnesses) j["witnesses"].push_back(graph_json(w));
            std::cout << j.dump(1) << '\n';
            return;
        }
        std::cout << "co+ex(" << res.n << ") = " << res.value << '\n';
        std::cout << "# " << res.witness_classes << " witness class(es)\n";
        for (const auto& w : res.witnesses) {
            std::cout << '\n';
            write_graph(std::cout, w);
        }
    });

    // flags
    auto* flags = app.add_subcommand("flags", "generate flags over a type");
    int fg_type_size = 2, fg_n = 0;
    std::vector<std::string> fg_forbid;
    bool fg_count = false;
    flags->add_option("--type-size", fg_type_size, "labeled vertex count")
        ->capture_default_str();
    flags->add_option("-n", fg_n, "total flag size")->required();
    flags->add_option("--forbid", fg_forbid, "forbidden graphs");
    flags->add_flag("--count", fg_count, "print only the flag count");
    flags->callback([&] {
        if (fg_type_size > 2)
            throw CLI::ValidationError("flags", "only edgeless types of size <= 2 are built in");
        FlagType type{RGraph(3, fg_type_size, {})};
        auto spec = make_forbidden(fg_forbid, "", false, 3);
        auto out = generate_flags(type, fg_n, spec);
        if (fg_count) {
            std::cout << out.size() << '\n';
            return;
        }
        for (size_t i = 0; i < out.size(); ++i) {
            std::cout << "# flag " << i << " (labeled 0.." << out[i].s - 1 << ")\n";
            write_graph(std::cout, out[i].graph);
            std::cout << '\n';
        }
    });

    // sdp-export
    auto* sdp = app.add_subcommand("sdp-export", "assemble and export a flag SDP");
    int sd_k = 6;
    std::vector<std::string> sd_forbid;
    std::string sd_threshold, sd_objective = "zero", sd_out, sd_bad_family;
    sdp->add_option("-k", sd_k, "basis vertex count")->capture_default_str();
    sdp->add_option("--forbid", sd_forbid, "forbidden graphs defining admissibility");
    sdp->add_option("--threshold", sd_threshold,
                    "positive co-degree threshold p/q (adds the constraint)");
    sdp->add_option("--objective", sd_objective,
                    "zero | edges | neg-edges | neg-outside")
        ->capture_default_str();
    sdp->add_option("--outside-family", sd_bad_family,
                    "family JSON for the neg-outside objective");
    sdp->add_option("-o,--output", sd_out, "output path (stdout when omitted)");
    sdp->callback([&] {
        auto spec = make_forbidden(sd_forbid, "", false, 3);
        Family basis = enumerate_up_to_iso(sd_k, 3, spec);
        SDPProblem p;
        p.basis = basis;
        p.objective.assign(basis.size(), Rat(0));
        if (sd_objective == "edges" || sd_objective == "neg-edges") {
            long denom = 1;
            for (int i = 0; i < 3; ++i) denom = denom * (sd_k - i) / (i + 1);
            for (int h = 0; h < basis.size(); ++h) {
                Rat rho = frac(basis.members()[h].edge_count(), denom);
                p.objective[h] = sd_objective == "edges" ? rho : -rho;
            }
        } else if (sd_objective == "neg-outside") {
            if (sd_bad_family.empty())
                throw CLI::ValidationError("sdp-export", "--outside-family required");
            Family good = load_family_file(sd_bad_family);
            for (int h = 0; h < basis.size(); ++h)
                if (good.find_canonical(basis.members()[h]) < 0) p.objective[h] = Rat(-1);
        } else if (sd_objective != "zero") {
            throw CLI::ValidationError("sdp-export", "unknown objective " + sd_objective);
        }
        p.blocks.push_back(build_type_block(pair_type(), sd_k, basis, spec));
        if (!sd_threshold.empty()) {
            auto slash = sd_threshold.find('/');
            int num = std::stoi(sd_threshold.substr(0, slash));
            int den = slash == std::string::npos ? 1 : std::stoi(sd_threshold.substr(slash + 1));
            p.linear.push_back(
                {"poscodegree", pos_codegree_constraint(num, den, sd_k, basis)});
        }
        if (sd_out.empty())
            export_sdpa(p, std::cout);
        else
            export_sdpa_file(p, sd_out);
        std::cerr << "basis " << basis.size() << ", block dims:";
        for (const auto& b : p.blocks) std::cerr << ' ' << b.flags.size();
        std::cerr << '\n';
    });

    // verify-cert
    auto* verify = app.add_subcommand("verify-cert", "exact certificate verification");
    std::string vc_problem, vc_cert;
    verify->add_option("--problem", vc_problem, "SDPA file from sdp-export")->required();
    verify->add_option("--cert", vc_cert, "certificate JSON")->required();
    verify->callback([&] {
        AssembledSDP p = parse_sdpa_file(vc_problem);
        Certificate cert = load_certificate_file(vc_cert);
        Verdict v = verify_certificate(p, cert);
        if (opt.format == "json") {
            json j;
            j["accepted"] = v.accepted;
            j["reason"] = v.reason;
            if (v.argmin >= 0) {
                j["min_slack"] = rat_str(v.min_slack);
                j["argmin"] = v.argmin;
            }
            std::cout << j.dump() << '\n';
        } else if (v.accepted) {
            std::cout << "ACCEPT min-slack " << rat_str(v.min_slack) << " at member "
                      << v.argmin << '\n';
        } else {
            std::cout << "REJECT " << v.reason << '\n';
        }
        if (!v.accepted) exit_status = 1;
    });

    // density
    auto* density = app.add_subcommand("density", "induced density of g in h");
    std::string de_g, de_h;
    bool de_noninduced = false;
    density->add_option("g", de_g, "pattern graph")->required();
    density->add_option("host", de_h, "host graph")->required();
    density->add_flag("--noninduced", de_noninduced, "count weak containment");
    density->callback([&] {
        RGraph g = load_graph_arg(de_g);
        RGraph h = load_graph_arg(de_h);
        Rat d = de_noninduced ? noninduced_density(g, h) : induced_density(g, h);
        if (opt.format == "json")
            std::cout << json{{"density", rat_str(d)}}.dump() << '\n';
        else
            std::cout << rat_str(d) << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            app.exit(e);
            return 0;
        }
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_status;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
