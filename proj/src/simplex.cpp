#include "bwexp/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bwexp {

const char* to_string(LpStatus s)
{
    switch (s) {
    case LpStatus::optimal:
        return "optimal";
    case LpStatus::unbounded:
        return "unbounded";
    case LpStatus::infeasible:
        return "infeasible";
    case LpStatus::iteration_limit:
        return "iteration_limit";
    }
    return "unknown";
}

DenseSimplex::DenseSimplex(std::vector<double> objective) : DenseSimplex(std::move(objective), Options{}) {}

DenseSimplex::DenseSimplex(std::vector<double> objective, Options opts)
    : nvars_(objective.size()), opts_(opts), objective_(std::move(objective))
{
    if (nvars_ == 0)
        throw std::invalid_argument("linear program needs at least one variable");
    reduced_ = objective_;
    sign_.assign(nvars_, 1.0);
    for (std::size_t c = 0; c < nvars_; ++c) {
        nonbasic_.push_back(static_cast<int>(c));
        row_of_.push_back(-1);
        column_of_.push_back(static_cast<int>(c));
    }
}

void DenseSimplex::add_constraint(std::span<const double> coeffs, double rhs)
{
    if (coeffs.size() != nvars_)
        throw std::invalid_argument("constraint width does not match the number of variables");
    if (!solved_once_ && rhs < 0.0)
        throw std::invalid_argument("initial constraints need a nonnegative right-hand side");

    const std::size_t row = basic_.size();
    tab_.resize(tab_.size() + nvars_, 0.0);
    double value = rhs;
    for (std::size_t j = 0; j < nvars_; ++j) {
        const double a = coeffs[j] * sign_[j];
        if (a == 0.0)
            continue;
        if (row_of_[j] >= 0) {
            const auto r = static_cast<std::size_t>(row_of_[j]);
            value -= a * value_[r];
            for (std::size_t c = 0; c < nvars_; ++c)
                at(row, c) -= a * at(r, c);
        } else {
            at(row, static_cast<std::size_t>(column_of_[j])) += a;
        }
    }
    const int slack = static_cast<int>(nvars_ + row);
    value_.push_back(value);
    basic_.push_back(slack);
    row_of_.push_back(static_cast<int>(row));
    column_of_.push_back(-1);
}

void DenseSimplex::flip_column(std::size_t col)
{
    for (std::size_t r = 0; r < basic_.size(); ++r)
        at(r, col) = -at(r, col);
    reduced_[col] = -reduced_[col];
    const auto var = static_cast<std::size_t>(nonbasic_[col]);
    sign_[var] = -sign_[var];
}

void DenseSimplex::pivot(std::size_t row, std::size_t col)
{
    const double p = at(row, col);
    const double inv = 1.0 / p;

    value_[row] *= inv;
    for (std::size_t c = 0; c < nvars_; ++c)
        at(row, c) *= inv;
    at(row, col) = inv;

    for (std::size_t r = 0; r < basic_.size(); ++r) {
        if (r == row)
            continue;
        const double f = at(r, col);
        if (f == 0.0)
            continue;
        value_[r] -= f * value_[row];
        for (std::size_t c = 0; c < nvars_; ++c)
            at(r, c) -= f * at(row, c);
        at(r, col) = -f * inv;
    }

    const double d = reduced_[col];
    z_ += d * value_[row];
    for (std::size_t c = 0; c < nvars_; ++c)
        reduced_[c] -= d * at(row, c);
    reduced_[col] = -d * inv;

    const int entering = nonbasic_[col];
    const int leaving = basic_[row];
    basic_[row] = entering;
    nonbasic_[col] = leaving;
    row_of_[static_cast<std::size_t>(entering)] = static_cast<int>(row);
    column_of_[static_cast<std::size_t>(entering)] = -1;
    row_of_[static_cast<std::size_t>(leaving)] = -1;
    column_of_[static_cast<std::size_t>(leaving)] = static_cast<int>(col);
    ++iterations_;
}

LpStatus DenseSimplex::primal()
{
    int degenerate_run = 0;
    while (iterations_ < opts_.max_iterations) {
        // Dantzig pricing; Bland's rule after a long run of degenerate pivots.
        const bool bland = degenerate_run > 50;
        std::size_t col = nvars_;
        double best = opts_.optimality_tol;
        for (std::size_t c = 0; c < nvars_; ++c) {
            const double d = reduced_[c];
            const double score = is_structural(nonbasic_[c]) ? std::abs(d) : d;
            if (score <= opts_.optimality_tol)
                continue;
            if (bland) {
                if (col == nvars_ || nonbasic_[c] < nonbasic_[col])
                    col = c;
            } else if (score > best) {
                best = score;
                col = c;
            }
        }
        if (col == nvars_)
            return LpStatus::optimal;
        if (reduced_[col] < 0.0)
            flip_column(col);

        std::size_t row = basic_.size();
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < basic_.size(); ++r) {
            if (is_structural(basic_[r]))
                continue;
            const double t = at(r, col);
            if (t <= opts_.pivot_tol)
                continue;
            const double ratio = std::max(value_[r], 0.0) / t;
            const bool better = ratio < best_ratio ||
                                (ratio == best_ratio && (bland ? basic_[r] < basic_[row] : t > at(row, col)));
            if (better) {
                best_ratio = ratio;
                row = r;
            }
        }
        if (row == basic_.size())
            return LpStatus::unbounded;
        degenerate_run = best_ratio == 0.0 ? degenerate_run + 1 : 0;
        pivot(row, col);
    }
    return LpStatus::iteration_limit;
}

LpStatus DenseSimplex::dual()
{
    while (iterations_ < opts_.max_iterations) {
        std::size_t row = basic_.size();
        double worst = -opts_.feasibility_tol;
        for (std::size_t r = 0; r < basic_.size(); ++r) {
            if (is_structural(basic_[r]))
                continue;
            if (value_[r] < worst) {
                worst = value_[r];
                row = r;
            }
        }
        if (row == basic_.size())
            return LpStatus::optimal;

        // Entering column keeps every reduced cost nonpositive.
        std::size_t col = nvars_;
        double best_ratio = std::numeric_limits<double>::infinity();
        double best_mag = 0.0;
        for (std::size_t c = 0; c < nvars_; ++c) {
            const double t = at(row, c);
            double ratio;
            if (is_structural(nonbasic_[c])) {
                if (std::abs(t) <= opts_.pivot_tol)
                    continue;
                ratio = std::abs(reduced_[c]) / std::abs(t);
            } else {
                if (t >= -opts_.pivot_tol)
                    continue;
                ratio = std::max(-reduced_[c], 0.0) / -t;
            }
            if (ratio < best_ratio || (ratio == best_ratio && std::abs(t) > best_mag)) {
                best_ratio = ratio;
                best_mag = std::abs(t);
                col = c;
            }
        }
        if (col == nvars_)
            return LpStatus::infeasible;
        if (at(row, col) > 0.0)
            flip_column(col);
        pivot(row, col);
    }
    return LpStatus::iteration_limit;
}

LpStatus DenseSimplex::solve()
{
    if (!solved_once_) {
        solved_once_ = true;
        return primal();
    }
    const LpStatus s = dual();
    if (s != LpStatus::optimal)
        return s;
    return primal();
}

std::vector<double> DenseSimplex::solution() const
{
    std::vector<double> x(nvars_, 0.0);
    for (std::size_t j = 0; j < nvars_; ++j)
        if (row_of_[j] >= 0)
            x[j] = sign_[j] * value_[static_cast<std::size_t>(row_of_[j])];
    return x;
}

}  // namespace bwexp
