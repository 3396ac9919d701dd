#pragma once

#include <vector>

#include "copex/rational.hpp"

namespace copex {

// Small dense exact-rational LP solver (two-phase primal simplex, Bland's
// rule). Minimizes c.x subject to row constraints and x >= 0. Problem sizes
// here are tiny (tens of rows), so no effort is spent on sparsity.
class LinearProgram {
public:
    enum class Sense { LE, GE, EQ };
    enum class Status { Optimal, Infeasible, Unbounded };

    struct Result {
        Status status;
        Rat value;
        std::vector<Rat> x;
    };

    explicit LinearProgram(int num_vars) : nvars_(num_vars) {}

    void add_row(std::vector<Rat> coeffs, Sense sense, Rat rhs);
    void set_objective(std::vector<Rat> c);  // minimized

    Result solve() const;

private:
    int nvars_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<Sense> senses_;
    std::vector<Rat> rhs_;
    std::vector<Rat> c_;
};

}  // namespace copex
