#include "copex/simplex.hpp"

#include <stdexcept>

namespace copex {

void LinearProgram::add_row(std::vector<Rat> coeffs, Sense sense, Rat rhs) {
    if (static_cast<int>(coeffs.size()) != nvars_)
        throw std::invalid_argument("LP row has wrong width");
    rows_.push_back(std::move(coeffs));
    senses_.push_back(sense);
    rhs_.push_back(std::move(rhs));
}

void LinearProgram::set_objective(std::vector<Rat> c) {
    if (static_cast<int>(c.size()) != nvars_)
        throw std::invalid_argument("LP objective has wrong width");
    c_ = std::move(c);
}

namespace {

// Tableau rows: m constraint rows + 1 objective row; columns: all variables
// + rhs. Basis holds the variable index of each constraint row.
struct Tableau {
    int m, ncols;  // ncols excludes the rhs column
    std::vector<std::vector<Rat>> t;  // (m+1) x (ncols+1)
    std::vector<int> basis;

    void pivot(int row, int col) {
        Rat p = t[row][col];
        for (auto& x : t[row]) x /= p;
        for (int i = 0; i <= m; ++i) {
            if (i == row) continue;
            Rat f = t[i][col];
            if (f == 0) continue;
            for (int j = 0; j <= ncols; ++j) t[i][j] -= f * t[row][j];
        }
        basis[row] = col;
    }

    // Bland's rule; returns false when optimal, throws on unbounded.
    bool step() {
        int enter = -1;
        for (int j = 0; j < ncols; ++j) {
            if (t[m][j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return false;
        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][ncols] / t[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave < 0) throw std::runtime_error("LP unbounded");
        pivot(leave, enter);
        return true;
    }
};

}  // namespace

LinearProgram::Result LinearProgram::solve() const {
    const int m = static_cast<int>(rows_.size());
    // Standard form: original vars, one slack/surplus per inequality, one
    // artificial per row needing it.
    int nslack = 0;
    for (auto s : senses_)
        if (s != Sense::EQ) ++nslack;

    Tableau tab;
    tab.m = m;
    int slack0 = nvars_;
    int art0 = nvars_ + nslack;
    tab.ncols = art0 + m;  // conservatively one artificial per row
    tab.t.assign(m + 1, std::vector<Rat>(tab.ncols + 1, Rat(0)));
    tab.basis.assign(m, -1);

    int si = 0;
    std::vector<int> artificial(m, -1);
    for (int i = 0; i < m; ++i) {
        Rat sign = rhs_[i] < 0 ? Rat(-1) : Rat(1);
        for (int j = 0; j < nvars_; ++j) tab.t[i][j] = sign * rows_[i][j];
        tab.t[i][tab.ncols] = sign * rhs_[i];
        if (senses_[i] != Sense::EQ) {
            Rat sl = senses_[i] == Sense::LE ? Rat(1) : Rat(-1);
            tab.t[i][slack0 + si] = sign * sl;
            if (sign * sl == 1) tab.basis[i] = slack0 + si;
            ++si;
        }
        if (tab.basis[i] < 0) {
            artificial[i] = art0 + i;
            tab.t[i][art0 + i] = 1;
            tab.basis[i] = art0 + i;
        }
    }

    // Phase 1: minimize sum of artificials.
    bool any_artificial = false;
    for (int i = 0; i < m; ++i)
        if (artificial[i] >= 0) any_artificial = true;
    if (any_artificial) {
        for (int i = 0; i < m; ++i) {
            if (artificial[i] < 0) continue;
            for (int j = 0; j <= tab.ncols; ++j) tab.t[m][j] -= tab.t[i][j];
        }
        while (tab.step()) {
        }
        if (tab.t[m][tab.ncols] != 0)
            return {Status::Infeasible, Rat(0), {}};
        // Drive remaining artificials out of the basis.
        for (int i = 0; i < m; ++i) {
            if (tab.basis[i] < art0) continue;
            int col = -1;
            for (int j = 0; j < art0; ++j) {
                if (tab.t[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col >= 0) tab.pivot(i, col);
            // A fully zero row is redundant; its artificial stays basic at 0.
        }
    }

    // Phase 2: original objective; artificial columns are frozen out.
    for (int j = 0; j <= tab.ncols; ++j) tab.t[m][j] = 0;
    for (int j = 0; j < nvars_ && !c_.empty(); ++j) tab.t[m][j] = c_[j];
    for (int i = 0; i < m; ++i) {
        Rat f = tab.t[m][tab.basis[i]];
        if (f == 0) continue;
        for (int j = 0; j <= tab.ncols; ++j) tab.t[m][j] -= f * tab.t[i][j];
    }
    for (int i = 0; i < m; ++i)
        if (artificial[i] >= 0) tab.t[m][artificial[i]] = 0;
    // Forbid artificials from re-entering by never making them attractive:
    // their reduced costs are zeroed above and their columns only change via
    // pivots, which keep basic columns unit. Guard anyway:
    Result res;
    try {
        while (true) {
            int enter = -1;
            for (int j = 0; j < art0; ++j) {
                if (tab.t[m][j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) break;
            int leave = -1;
            Rat best;
            for (int i = 0; i < m; ++i) {
                if (tab.t[i][enter] <= 0) continue;
                Rat ratio = tab.t[i][tab.ncols] / tab.t[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && tab.basis[i] < tab.basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) {
                res.status = Status::Unbounded;
                return res;
            }
            tab.pivot(leave, enter);
        }
    } catch (const std::runtime_error&) {
        res.status = Status::Unbounded;
        return res;
    }

    res.status = Status::Optimal;
    res.x.assign(nvars_, Rat(0));
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < nvars_) res.x[tab.basis[i]] = tab.t[i][tab.ncols];
    res.value = Rat(0);
    for (int j = 0; j < nvars_ && !c_.empty(); ++j) res.value += c_[j] * res.x[j];
    return res;
}

}  // namespace copex
