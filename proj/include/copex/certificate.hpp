#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "copex/rational.hpp"
#include "copex/sdp.hpp"

namespace copex {

// Rational PSD matrices and multipliers asserting that the relaxation value
// is at least `bound`.
struct Certificate {
    Rat bound;
    std::vector<std::vector<std::vector<Rat>>> psd_blocks;
    std::vector<Rat> multipliers;
};

Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json certificate_to_json(const Certificate& c);
Certificate load_certificate_file(const std::string& path);

// Exact PSD test via LDL^T with symmetric pivoting: accepted iff every pivot
// is nonnegative and any zero-pivot row has a zero remainder.
struct PsdCheck {
    bool psd;
    int fail_index;  // row of the offending pivot when !psd
};
PsdCheck ldlt_psd(std::vector<std::vector<Rat>> a);

struct Verdict {
    bool accepted = false;
    std::string reason;  // human-readable reject reason with location
    int fail_block = -1;
    int fail_index = -1;
    std::vector<Rat> slack;  // per basis member (filled when reached)
    Rat min_slack;
    int argmin = -1;
};

// Accepts iff every psd block passes the exact PSD test, every multiplier is
// nonnegative, and for every basis member H
//   objective(H) - sum_t <Q_t, M_t(H)> - sum_j mu_j c_j(H) >= bound.
// Throws std::invalid_argument on dimension mismatch and std::runtime_error
// on a non-symmetric block.
Verdict verify_certificate(const AssembledSDP& problem, const Certificate& cert);

// Evaluates an accepted certificate against a concrete host: the objective
// density sum is at least bound + psd_term + sum_j mu_j linear_term_j, so
// objective >= bound - correction with correction the negative part of the
// trailing terms (zero for hosts satisfying the encoded constraints).
struct HostEvaluation {
    Rat objective_value;
    Rat bound;
    Rat psd_term;
    std::vector<Rat> linear_terms;
    Rat correction;
};
HostEvaluation evaluate_certificate_on_host(const SDPProblem& problem,
                                            const Certificate& cert,
                                            const RGraph& host);

}  // namespace copex
