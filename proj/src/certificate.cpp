#include "copex/certificate.hpp"

#include <fstream>
#include <stdexcept>

namespace copex {

namespace {

std::vector<std::vector<Rat>> matrix_from_json(const nlohmann::json& jm) {
    std::vector<std::vector<Rat>> m;
    for (const auto& row : jm) {
        std::vector<Rat> r;
        for (const auto& v : row) r.push_back(rat_parse(v.get<std::string>()));
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace

Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate c;
    try {
        c.bound = rat_parse(j.at("bound").get<std::string>());
        for (const auto& jb : j.value("blocks", nlohmann::json::array()))
            c.psd_blocks.push_back(matrix_from_json(jb));
        for (const auto& v : j.value("multipliers", nlohmann::json::array()))
            c.multipliers.push_back(rat_parse(v.get<std::string>()));
    } catch (const nlohmann::json::exception& ex) {
        throw std::runtime_error("malformed certificate JSON: " + std::string(ex.what()));
    }
    return c;
}

nlohmann::json certificate_to_json(const Certificate& c) {
    nlohmann::json j;
    j["bound"] = rat_str(c.bound);
    j["blocks"] = nlohmann::json::array();
    for (const auto& b : c.psd_blocks) {
        nlohmann::json jb = nlohmann::json::array();
        for (const auto& row : b) {
            nlohmann::json jr = nlohmann::json::array();
            for (const auto& v : row) jr.push_back(rat_str(v));
            jb.push_back(std::move(jr));
        }
        j["blocks"].push_back(std::move(jb));
    }
    j["multipliers"] = nlohmann::json::array();
    for (const auto& v : c.multipliers) j["multipliers"].push_back(rat_str(v));
    return j;
}

// Certificates from other toolchains can be adapted here: dispatch on a
// "format" key before the default layout is assumed.
Certificate load_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open certificate file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw std::runtime_error("malformed certificate JSON: " + std::string(ex.what()));
    }
    if (j.contains("format") && j.at("format") != "copex-v1")
        throw std::runtime_error("unsupported certificate format: " +
                                 j.at("format").get<std::string>());
    return certificate_from_json(j);
}

PsdCheck ldlt_psd(std::vector<std::vector<Rat>> a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int k = 0; k < n; ++k) {
        // symmetric pivoting: bring a positive diagonal entry to position k
        int pivot = -1;
        for (int i = k; i < n; ++i) {
            if (a[i][i] < 0) return {false, order[i]};
            if (pivot < 0 && a[i][i] > 0) pivot = i;
        }
        if (pivot < 0) {
            // remaining diagonal all zero: PSD iff remainder vanishes
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j)
                    if (a[i][j] != 0) return {false, order[i]};
            return {true, -1};
        }
        if (pivot != k) {
            std::swap(order[pivot], order[k]);
            a[pivot].swap(a[k]);
            for (int i = 0; i < n; ++i) std::swap(a[i][pivot], a[i][k]);
        }
        for (int i = k + 1; i < n; ++i) {
            Rat f = a[i][k] / a[k][k];
            if (f == 0) continue;
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        for (int j = k + 1; j < n; ++j) a[k][j] = 0;
        for (int i = k + 1; i < n; ++i) a[i][k] = 0;
    }
    return {true, -1};
}

Verdict verify_certificate(const AssembledSDP& p, const Certificate& cert) {
    Verdict v;
    if (static_cast<int>(cert.psd_blocks.size()) != static_cast<int>(p.block_dims.size()))
        throw std::invalid_argument("certificate block count mismatch");
    if (cert.multipliers.size() != p.linear.size())
        throw std::invalid_argument("certificate multiplier count mismatch");
    for (size_t t = 0; t < cert.psd_blocks.size(); ++t) {
        const auto& b = cert.psd_blocks[t];
        if (static_cast<int>(b.size()) != p.block_dims[t])
            throw std::invalid_argument("certificate block " + std::to_string(t) +
                                        " has wrong dimension");
        for (size_t i = 0; i < b.size(); ++i) {
            if (b[i].size() != b.size())
                throw std::invalid_argument("certificate block " + std::to_string(t) +
                                            " is not square");
            for (size_t j = 0; j < i; ++j)
                if (b[i][j] != b[j][i])
                    throw std::runtime_error("malformed certificate: block " +
                                             std::to_string(t) + " not symmetric");
        }
    }
    for (size_t j = 0; j < cert.multipliers.size(); ++j) {
        if (cert.multipliers[j] < 0) {
            v.reason = "negative multiplier " + std::to_string(j);
            v.fail_index = static_cast<int>(j);
            return v;
        }
    }
    for (size_t t = 0; t < cert.psd_blocks.size(); ++t) {
        auto check = ldlt_psd(cert.psd_blocks[t]);
        if (!check.psd) {
            v.reason = "psd failure in block " + std::to_string(t) + " at row " +
                       std::to_string(check.fail_index);
            v.fail_block = static_cast<int>(t);
            v.fail_index = check.fail_index;
            return v;
        }
    }
    v.slack.resize(p.basis_size);
    for (int h = 0; h < p.basis_size; ++h) {
        Rat lhs = p.objective[h];
        for (size_t t = 0; t < cert.psd_blocks.size(); ++t) {
            const auto& q = cert.psd_blocks[t];
            const auto& m = p.m[t][h];
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < q.size(); ++j) lhs -= q[i][j] * m[i][j];
        }
        for (size_t j = 0; j < cert.multipliers.size(); ++j)
            lhs -= cert.multipliers[j] * p.linear[j][h];
        v.slack[h] = lhs - cert.bound;
        if (v.argmin < 0 || v.slack[h] < v.min_slack) {
            v.min_slack = v.slack[h];
            v.argmin = h;
        }
    }
    if (v.min_slack < 0) {
        v.reason = "slack violation at basis member " + std::to_string(v.argmin);
        v.fail_index = v.argmin;
        return v;
    }
    v.accepted = true;
    return v;
}

HostEvaluation evaluate_certificate_on_host(const SDPProblem& problem,
                                            const Certificate& cert,
                                            const RGraph& host) {
    problem.validate();
    auto d = density_profile(host, problem.basis);
    HostEvaluation ev;
    ev.bound = cert.bound;
    ev.objective_value = Rat(0);
    for (int h = 0; h < problem.basis.size(); ++h)
        ev.objective_value += problem.objective[h] * d[h];
    ev.psd_term = Rat(0);
    for (size_t t = 0; t < problem.blocks.size(); ++t) {
        const auto& q = cert.psd_blocks.at(t);
        for (int h = 0; h < problem.basis.size(); ++h) {
            const auto& m = problem.blocks[t].m[h];
            Rat dot(0);
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < q.size(); ++j) dot += q[i][j] * m[i][j];
            ev.psd_term += d[h] * dot;
        }
    }
    ev.correction = Rat(0);
    Rat extra = ev.psd_term;
    for (size_t j = 0; j < problem.linear.size(); ++j) {
        Rat term(0);
        for (int h = 0; h < problem.basis.size(); ++h)
            term += problem.linear[j].coeffs[h] * d[h];
        ev.linear_terms.push_back(term);
        extra += cert.multipliers.at(j) * term;
    }
    if (extra < 0) ev.correction = -extra;
    return ev;
}

}  // namespace copex
