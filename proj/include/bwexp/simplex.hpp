#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bwexp {

enum class LpStatus { optimal, unbounded, infeasible, iteration_limit };

const char* to_string(LpStatus s);

/// Dense simplex for
///
///     maximize  c . x   subject to  A x <= b,   x free.
///
/// The tableau is kept in compact form over the nonbasic variables only, so
/// its width is the number of structural variables regardless of how many
/// rows are added. Rows may be appended after a solve; the next solve then
/// restores primal feasibility with dual simplex pivots, which makes the class
/// suitable for cutting-plane loops over large implicit constraint sets.
///
/// The first solve needs b >= 0 (x = 0 feasible).
class DenseSimplex {
public:
    struct Options {
        double feasibility_tol = 1e-10;
        double optimality_tol = 1e-10;
        double pivot_tol = 1e-11;
        int max_iterations = 100000;
    };

    explicit DenseSimplex(std::vector<double> objective);
    DenseSimplex(std::vector<double> objective, Options opts);

    void add_constraint(std::span<const double> coeffs, double rhs);

    LpStatus solve();

    std::size_t num_vars() const { return nvars_; }
    std::size_t num_constraints() const { return basic_.size(); }
    double objective_value() const { return z_; }
    std::vector<double> solution() const;
    int iterations() const { return iterations_; }

private:
    double& at(std::size_t row, std::size_t col) { return tab_[row * nvars_ + col]; }
    double at(std::size_t row, std::size_t col) const { return tab_[row * nvars_ + col]; }
    bool is_structural(int var) const { return var < static_cast<int>(nvars_); }

    void pivot(std::size_t row, std::size_t col);
    void flip_column(std::size_t col);
    LpStatus primal();
    LpStatus dual();

    std::size_t nvars_;
    Options opts_;
    std::vector<double> objective_;
    // Row r: basic_[r] = value_[r] - sum_c tab_(r, c) * nonbasic_[c].
    std::vector<double> tab_;
    std::vector<double> value_;
    std::vector<int> basic_;
    std::vector<int> nonbasic_;
    // Objective z = z_ + sum_c reduced_[c] * nonbasic_[c].
    std::vector<double> reduced_;
    double z_ = 0.0;
    // Structural variables may be carried as their negation (+1 / -1).
    std::vector<double> sign_;
    // Row of each basic variable, or -1 (then column_of_ holds the column).
    std::vector<int> row_of_;
    std::vector<int> column_of_;
    int iterations_ = 0;
    bool solved_once_ = false;
};

}  // namespace bwexp
