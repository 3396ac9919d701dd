#include "copex/pattern.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include "copex/canonical.hpp"
#include "copex/constructions.hpp"
#include "copex/io.hpp"

namespace copex {

Pattern::Pattern(int m_, int r_, std::vector<Edge> req, std::vector<Edge> forb)
    : m(m_), r(r_), required(std::move(req)), forbidden(std::move(forb)) {
    auto normalize = [&](std::vector<Edge>& es, const char* what) {
        for (auto& e : es) {
            std::sort(e.begin(), e.end());
            if (static_cast<int>(e.size()) != r)
                throw std::invalid_argument(std::string(what) + " tuple has wrong size");
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] < 0 || e[i] >= m)
                    throw std::invalid_argument(std::string(what) + " vertex out of range");
                if (i > 0 && e[i] == e[i - 1])
                    throw std::invalid_argument(std::string(what) + " tuple has repeats");
            }
        }
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
    };
    normalize(required, "required");
    normalize(forbidden, "forbidden");
    std::vector<Edge> overlap;
    std::set_intersection(required.begin(), required.end(), forbidden.begin(),
                          forbidden.end(), std::back_inserter(overlap));
    if (!overlap.empty())
        throw std::invalid_argument("pattern requires and forbids the same tuple");
}

Pattern pattern_from_json(const nlohmann::json& j) {
    std::vector<Edge> req, forb;
    for (const auto& e : j.at("required")) req.push_back(e.get<Edge>());
    for (const auto& e : j.value("forbidden", nlohmann::json::array()))
        forb.push_back(e.get<Edge>());
    int r = 3;
    if (j.contains("r")) r = j.at("r").get<int>();
    else if (!req.empty()) r = static_cast<int>(req.front().size());
    else if (!forb.empty()) r = static_cast<int>(forb.front().size());
    return Pattern(j.at("m").get<int>(), r, std::move(req), std::move(forb));
}

nlohmann::json pattern_to_json(const Pattern& p) {
    nlohmann::json j;
    j["m"] = p.m;
    j["required"] = p.required;
    j["forbidden"] = p.forbidden;
    return j;
}

namespace {

struct PatternSearch {
    const RGraph& h;
    const Pattern& p;
    std::vector<int> order;  // pattern vertices, descending required-degree
    std::vector<std::vector<Edge>> req_at, forb_at;
    std::vector<int> map;
    std::vector<bool> used;
    std::vector<std::vector<int>> found;

    PatternSearch(const RGraph& host, const Pattern& pat) : h(host), p(pat) {
        std::vector<int> deg(p.m, 0);
        for (const auto& e : p.required)
            for (int v : e) ++deg[v];
        order.resize(p.m);
        for (int i = 0; i < p.m; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return deg[a] > deg[b]; });
        std::vector<int> rank(p.m);
        for (int i = 0; i < p.m; ++i) rank[order[i]] = i;
        req_at.resize(p.m + 1);
        forb_at.resize(p.m + 1);
        for (const auto& e : p.required) {
            int last = 0;
            for (int v : e) last = std::max(last, rank[v]);
            req_at[last + 1].push_back(e);
        }
        for (const auto& e : p.forbidden) {
            int last = 0;
            for (int v : e) last = std::max(last, rank[v]);
            forb_at[last + 1].push_back(e);
        }
        map.assign(p.m, -1);
        used.assign(h.vertex_count(), false);
    }

    bool check(int step) {
        Edge img(p.r);
        for (const auto& e : req_at[step]) {
            for (int i = 0; i < p.r; ++i) img[i] = map[e[i]];
            std::sort(img.begin(), img.end());
            if (!h.has_edge(img)) return false;
        }
        for (const auto& e : forb_at[step]) {
            for (int i = 0; i < p.r; ++i) img[i] = map[e[i]];
            std::sort(img.begin(), img.end());
            if (h.has_edge(img)) return false;
        }
        return true;
    }

    void search(int step) {
        if (step == p.m) {
            found.push_back(map);
            return;
        }
        int v = order[step];
        for (int w = 0; w < h.vertex_count(); ++w) {
            if (used[w]) continue;
            map[v] = w;
            used[w] = true;
            if (check(step + 1)) search(step + 1);
            used[w] = false;
            map[v] = -1;
        }
    }
};

}  // namespace

std::vector<std::vector<int>> find_pattern_embeddings(const RGraph& h, const Pattern& p) {
    if (p.m > h.vertex_count()) return {};
    if (p.r != h.uniformity() && !(p.required.empty() && p.forbidden.empty()))
        throw std::invalid_argument("pattern uniformity mismatch");
    PatternSearch s(h, p);
    s.search(0);
    std::sort(s.found.begin(), s.found.end());
    return s.found;
}

ExclusionVerdict family_excludes_pattern(const Family& fam, const Pattern& p) {
    for (int i = 0; i < fam.size(); ++i) {
        auto maps = find_pattern_embeddings(fam.members()[i], p);
        if (!maps.empty()) return {false, i, maps.front()};
    }
    return {true, -1, {}};
}

const Family& Suite::family(const std::string& ref) const {
    for (const auto& [name, fam] : families)
        if (name == ref) return fam;
    throw std::runtime_error("suite references unknown family: " + ref);
}

Suite load_suite_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open suite file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw std::runtime_error("malformed suite JSON: " + std::string(ex.what()));
    }

    auto resolve = [&](const std::string& ref) -> std::string {
        namespace fs = std::filesystem;
        fs::path direct(ref);
        if (fs::exists(direct)) return direct.string();
        fs::path sibling = fs::path(path).parent_path() / ref;
        if (fs::exists(sibling)) return sibling.string();
        if (const char* env = std::getenv("COPEX_FIXTURES")) {
            fs::path fixture = fs::path(env) / ref;
            if (fs::exists(fixture)) return fixture.string();
        }
        throw std::runtime_error("cannot resolve family reference: " + ref);
    };

    Suite suite;
    suite.name = j.value("name", path);
    try {
        nlohmann::json fams = j.value("families", nlohmann::json::object());
        for (auto& [name, val] : fams.items()) {
            if (val.is_string())
                suite.families.emplace_back(name, load_family_file(resolve(val.get<std::string>())));
            else
                suite.families.emplace_back(name, family_from_json(val));
        }
        for (const auto& je : j.at("entries")) {
            SuiteEntry e;
            e.name = je.at("name").get<std::string>();
            e.kind = je.at("kind").get<std::string>();
            e.pattern = pattern_from_json(je.at("pattern"));
            if (e.kind == "exclusion") {
                e.family_ref = je.at("family").get<std::string>();
                e.expect_excluded = je.value("expect_excluded", true);
                suite.family(e.family_ref);  // validate the reference now
            } else if (e.kind == "structure") {
                for (const auto& t : je.at("located")) e.located.push_back(t.get<Edge>());
                e.isomorphic_to = je.at("isomorphic_to").get<std::string>();
            } else {
                throw std::runtime_error("unknown suite entry kind: " + e.kind);
            }
            suite.entries.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw std::runtime_error("malformed suite fixture: " + std::string(ex.what()));
    }
    return suite;
}

namespace {

SuiteResult check_structure_entry(const SuiteEntry& e) {
    std::set<Edge> req(e.pattern.required.begin(), e.pattern.required.end());
    for (auto t : e.located) {
        std::sort(t.begin(), t.end());
        if (!req.count(t))
            return {e.name, false, "located edge is not among the required edges"};
    }
    // Relabel the located structure onto its support.
    std::set<int> support;
    for (const auto& t : e.located)
        for (int v : t) support.insert(v);
    std::vector<int> verts(support.begin(), support.end());
    std::vector<int> rel(e.pattern.m, -1);
    for (size_t i = 0; i < verts.size(); ++i) rel[verts[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& t : e.located) {
        Edge f;
        for (int v : t) f.push_back(rel[v]);
        edges.push_back(std::move(f));
    }
    RGraph located(e.pattern.r, static_cast<int>(verts.size()), std::move(edges));
    RGraph target = named_construction(e.isomorphic_to);
    if (located.vertex_count() != target.vertex_count())
        return {e.name, false, "located structure has wrong vertex count for " + e.isomorphic_to};
    if (!is_isomorphic(located, target))
        return {e.name, false, "located structure is not isomorphic to " + e.isomorphic_to};
    return {e.name, true, "structure isomorphic to " + e.isomorphic_to};
}

}  // namespace

SuiteReport check_case_suite(const Suite& suite) {
    SuiteReport report;
    for (const auto& e : suite.entries) {
        SuiteResult res;
        if (e.kind == "exclusion") {
            auto verdict = family_excludes_pattern(suite.family(e.family_ref), e.pattern);
            bool pass = verdict.excluded == e.expect_excluded;
            std::string detail = verdict.excluded ? "excluded" : "embedded in member " +
                std::to_string(verdict.witness_member);
            res = {e.name, pass, detail};
        } else {
            res = check_structure_entry(e);
        }
        if (!res.pass) ++report.failures;
        report.results.push_back(std::move(res));
    }
    return report;
}

}  // namespace copex
