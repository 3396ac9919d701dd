#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "copex/family.hpp"
#include "copex/flags.hpp"
#include "copex/rational.hpp"

namespace copex {

// One flag type with its flag list and, per basis member H, the symmetric
// matrix M(H) of label-averaged flag-product densities inside H.
struct TypeBlock {
    FlagType type;
    std::vector<Flag> flags;
    // m[h][i][j] = avg over type placements theta in basis member h of
    // flag_density(flags[i]) * flag_density(flags[j]).
    std::vector<std::vector<std::vector<Rat>>> m;
};

struct LinearConstraint {
    std::string name;
    std::vector<Rat> coeffs;  // over the basis; asserted >= O(1/n) on hosts
};

// The relaxation: maximize lambda subject to, for every basis member H,
//   objective(H) - sum_t <Q_t, M_t(H)> - sum_j mu_j c_j(H) >= lambda,
// over PSD Q_t and mu >= 0.
struct SDPProblem {
    Family basis;
    std::vector<Rat> objective;
    std::vector<TypeBlock> blocks;
    std::vector<LinearConstraint> linear;

    void validate() const;  // throws std::invalid_argument on shape errors
};

// Builds the type block for the given type over a k-vertex basis; flags live
// on (k + |type|)/2 vertices (k and |type| must have equal parity).
TypeBlock build_type_block(const FlagType& type, int k, const Family& basis,
                           const ForbiddenSpec& admissible);

// Sparse SDPA encoding. Scalar variables x = (lambda, upper triangles of
// each Q_t, multipliers mu_j) and the constraint
//   X = sum_i x_i F_i - F_0 >= 0
// with block 1 a diagonal block carrying the per-basis-member slacks,
// then one block per flag type (X there equals Q_t), then a diagonal block
// for the multipliers. Minimizing c.x with c = -e_lambda maximizes lambda.
//
// Every coefficient is rendered as an exact decimal when its denominator is
// of the form 2^a 5^b; otherwise the whole problem is scaled by the LCM of
// all denominators (recorded in a "*scale N" comment), making every entry
// an integer.
void export_sdpa(const SDPProblem& problem, std::ostream& os);
void export_sdpa_file(const SDPProblem& problem, const std::string& path);

// Structure-only view of an exported problem: enough to verify certificates
// and to compare round-trips. The basis members themselves travel as
// comment lines in the SDPA file, so verdicts can name the offending graph.
struct AssembledSDP {
    int basis_size = 0;
    std::vector<Rat> objective;
    std::vector<int> block_dims;
    // m[t][h] is the symmetric block_dims[t]-square matrix M_t(H).
    std::vector<std::vector<std::vector<std::vector<Rat>>>> m;
    std::vector<std::vector<Rat>> linear;  // [j][h]
    std::vector<RGraph> basis_graphs;      // may be empty for foreign files

    bool operator==(const AssembledSDP& o) const;
};

AssembledSDP to_assembled(const SDPProblem& problem);

// Parses an SDPA file written by export_sdpa back into the structural view,
// undoing the scale factor, so round-trips reproduce all rationals exactly.
AssembledSDP parse_sdpa(std::istream& is);
AssembledSDP parse_sdpa_file(const std::string& path);

}  // namespace copex
