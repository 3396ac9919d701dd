#include "copex/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "copex/constructions.hpp"

namespace copex {

void write_graph(std::ostream& os, const RGraph& g) {
    os << g.uniformity() << ' ' << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) {
        for (size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
        os << '\n';
    }
}

std::string graph_to_text(const RGraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

namespace {

bool next_content_line(std::istream& is, std::string& line) {
    while (std::getline(is, line)) {
        size_t at = line.find_first_not_of(" \t\r");
        if (at == std::string::npos) continue;
        if (line[at] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

std::optional<RGraph> read_graph(std::istream& is) {
    std::string line;
    if (!next_content_line(is, line)) return std::nullopt;
    std::istringstream header(line);
    int r, n, m;
    if (!(header >> r >> n >> m))
        throw std::runtime_error("bad graph header: " + line);
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        if (!next_content_line(is, line))
            throw std::runtime_error("unexpected end of graph data");
        std::istringstream es(line);
        Edge e(r);
        for (int j = 0; j < r; ++j)
            if (!(es >> e[j])) throw std::runtime_error("bad edge line: " + line);
        edges.push_back(std::move(e));
    }
    try {
        return RGraph(r, n, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw std::runtime_error(std::string("invalid graph: ") + ex.what());
    }
}

RGraph graph_from_text(const std::string& text) {
    std::istringstream is(text);
    auto g = read_graph(is);
    if (!g) throw std::runtime_error("empty graph text");
    return *g;
}

nlohmann::json family_to_json(const Family& fam) {
    nlohmann::json j;
    j["r"] = fam.uniformity();
    j["members"] = nlohmann::json::array();
    for (int i = 0; i < fam.size(); ++i) {
        const auto& g = fam.members()[i];
        nlohmann::json m;
        if (!fam.names()[i].empty()) m["name"] = fam.names()[i];
        m["n"] = g.vertex_count();
        m["edges"] = g.edges();
        j["members"].push_back(std::move(m));
    }
    return j;
}

Family family_from_json(const nlohmann::json& j) {
    Family fam(j.at("r").get<int>());
    for (const auto& m : j.at("members")) {
        std::vector<Edge> edges;
        for (const auto& e : m.at("edges")) edges.push_back(e.get<Edge>());
        RGraph g(fam.uniformity(), m.at("n").get<int>(), std::move(edges));
        fam.add(g, m.value("name", ""));
    }
    return fam;
}

Family load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open family file: " + path);
    nlohmann::json j;
    in >> j;
    return family_from_json(j);
}

void save_family_file(const std::string& path, const Family& fam) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write family file: " + path);
    out << family_to_json(fam).dump(1) << '\n';
}

RGraph load_graph_arg(const std::string& arg) {
    if (arg == "-" || arg.empty()) {
        auto g = read_graph(std::cin);
        if (!g) throw std::runtime_error("no graph on stdin");
        return *g;
    }
    try {
        return named_construction(arg);
    } catch (const std::invalid_argument&) {
        // fall through to file lookup
    }
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("not a construction or readable file: " + arg);
    auto g = read_graph(in);
    if (!g) throw std::runtime_error("no graph in file: " + arg);
    return *g;
}

}  // namespace copex
