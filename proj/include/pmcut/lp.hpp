#pragma once

#include <optional>
#include <vector>

#include "pmcut/metric.hpp"

namespace pmcut {

// One covering row: an s_i→t_i path whose vertices must accumulate x ≥ 1.
struct PathConstraint {
    int pair_index = -1;
    std::vector<VertexId> path;  // s_i ... t_i in order
    double length = 0.0;         // under the assignment that produced it
};

struct LpResult {
    LengthAssignment assignment;
    double value = 0.0;
    int constraints_generated = 0;
    int iterations = 0;
    std::vector<PathConstraint> constraints;  // every generated row, for audits
};

// Most-violated path constraint under x, or nullopt when every pair is at
// distance ≥ 1 - tol. Minimum length wins, ties by pair index.
inline std::optional<PathConstraint>
separation_oracle(const Instance& g, const std::vector<double>& x, double tol = kTol) {
    std::optional<PathConstraint> best;
    for (int i = 0; i < static_cast<int>(g.pairs().size()); ++i) {
        auto [s, t] = g.pairs()[i];
        if (!g.is_alive(s) || !g.is_alive(t)) continue;
        auto tree = dijkstra(g, x, s, Direction::out);
        if (tree.dist[t] >= 1.0 - tol) continue;
        if (!best || tree.dist[t] < best->length - kTol) {
            PathConstraint pc;
            pc.pair_index = i;
            pc.path = tree_path(tree, t);
            pc.length = tree.dist[t];
            best = std::move(pc);
        }
    }
    return best;
}

namespace detail {

// Dense primal simplex on  max 1·y  s.t.  A y ≤ c, y ≥ 0, where column p of
// A is the indicator of path p over the finite-cost vertex rows. The slack
// basis is feasible from the start and columns arrive one at a time; Bland's
// rule keeps every pivot sequence finite and deterministic. The multicut
// lengths are the shadow prices of the vertex rows.
//
// Basis entries encode path column p as p >= 0 and the slack of row r as
// -1 - r, so appending columns never invalidates the basis. The slack block
// of the tableau is an explicit B^-1, which also prices new columns.
class CoveringSimplex {
public:
    explicit CoveringSimplex(std::vector<double> rhs) : m_(static_cast<int>(rhs.size())) {
        tab_.assign(m_, {});
        for (int i = 0; i < m_; ++i) {
            tab_[i].assign(m_, 0.0);
            tab_[i][i] = 1.0;
            basis_.push_back(-1 - i);
            rhs_.push_back(rhs[i]);
        }
        dual_.assign(m_, 0.0);
    }

    // rows: indices of the vertex rows the new path touches.
    void add_column(std::vector<int> rows) {
        columns_.push_back(std::move(rows));
        pivot_to_optimal();
    }

    double objective() const {
        double z = 0.0;
        for (int i = 0; i < m_; ++i)
            if (basis_[i] >= 0) z += rhs_[i];
        return z;
    }

    double dual(int row) const { return std::max(0.0, dual_[row]); }

    int pivots() const { return pivots_; }

private:
    bool is_path(int var) const { return var >= 0; }
    // Bland order: path columns by id, then slacks by row.
    int rank(int var) const {
        return is_path(var) ? var : static_cast<int>(columns_.size()) - 1 - var;
    }

    // B^-1 a_j for path column j.
    std::vector<double> materialize(int j) const {
        std::vector<double> col(m_, 0.0);
        for (int r : columns_[j])
            for (int i = 0; i < m_; ++i) col[i] += tab_[i][r];
        return col;
    }

    double path_reduced_cost(int j) const {
        double z = 0.0;
        for (int r : columns_[j]) z += dual_[r];
        return 1.0 - z;
    }

    void refresh_duals() {
        for (int j = 0; j < m_; ++j) {
            double z = 0.0;
            for (int i = 0; i < m_; ++i)
                if (basis_[i] >= 0) z += tab_[i][j];
            dual_[j] = z;
        }
    }

    void pivot_to_optimal() {
        const double tol = 1e-9;
        for (;;) {
            int enter = std::numeric_limits<int>::min();  // encoded var
            for (int j = 0; j < static_cast<int>(columns_.size()); ++j)
                if (path_reduced_cost(j) > tol) { enter = j; break; }
            if (enter == std::numeric_limits<int>::min()) {
                for (int r = 0; r < m_; ++r)
                    if (-dual_[r] > tol) { enter = -1 - r; break; }
            }
            if (enter == std::numeric_limits<int>::min()) return;

            std::vector<double> col;
            if (is_path(enter)) {
                col = materialize(enter);
            } else {
                int r = -1 - enter;
                col.resize(m_);
                for (int i = 0; i < m_; ++i) col[i] = tab_[i][r];
            }

            int leave = -1;
            double best_ratio = 0.0;
            for (int i = 0; i < m_; ++i) {
                if (col[i] <= tol) continue;
                double ratio = rhs_[i] / col[i];
                if (leave < 0 || ratio < best_ratio - tol ||
                    (ratio < best_ratio + tol && rank(basis_[i]) < rank(basis_[leave]))) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0)
                throw Infeasible("covering dual unbounded: a pair admits no finite-cost cut");

            pivot(leave, col);
            basis_[leave] = enter;
            refresh_duals();
            if (++pivots_ > 500000)
                throw IterationLimit("simplex pivot limit exceeded");
        }
    }

    void pivot(int row, const std::vector<double>& col) {
        double inv = 1.0 / col[row];
        for (double& v : tab_[row]) v *= inv;
        rhs_[row] *= inv;
        for (int i = 0; i < m_; ++i) {
            if (i == row || col[i] == 0.0) continue;
            double f = col[i];
            for (int j = 0; j < m_; ++j) tab_[i][j] -= f * tab_[row][j];
            rhs_[i] -= f * rhs_[row];
            if (rhs_[i] < 0.0 && rhs_[i] > -1e-11) rhs_[i] = 0.0;
        }
    }

    int m_;
    int pivots_ = 0;
    std::vector<std::vector<double>> tab_;   // slack block = B^-1
    std::vector<double> rhs_;
    std::vector<double> dual_;               // y = c_B B^-1
    std::vector<int> basis_;                 // encoded variable per row
    std::vector<std::vector<int>> columns_;  // path columns by touched rows
};

} // namespace detail

// Lazy constraint generation: solve the restricted covering LP over the rows
// produced so far, ask the oracle for a violated path, repeat. The final
// rescale by 1/(1 - tol) turns "≥ 1 - tol" into "≥ 1" exactly, which the
// rounding stage assumes.
inline LpResult solve_lp(const Instance& g, long iteration_cap = -1) {
    const double tol = 1e-9;
    for (auto [s, t] : g.pairs())
        if (s == t) throw InvalidInstance("pair with s == t");

    std::vector<int> row_of(g.n(), -1);
    std::vector<double> rhs;
    for (VertexId v : g.alive_vertices()) {
        if (g.cost(v).infinite) continue;
        row_of[v] = static_cast<int>(rhs.size());
        rhs.push_back(g.cost(v).value);
    }
    detail::CoveringSimplex simplex(rhs);

    if (iteration_cap < 0)
        iteration_cap = 50L * std::max(1, g.n()) * std::max<long>(1, g.pairs().size());

    LpResult result;
    result.assignment.x.assign(g.n(), 0.0);
    for (;;) {
        auto violated = separation_oracle(g, result.assignment.x, tol);
        if (!violated) break;
        ++result.iterations;
        if (result.iterations > iteration_cap)
            throw IterationLimit("constraint generation exceeded its row cap");

        std::vector<int> rows;
        for (VertexId v : violated->path)
            if (row_of[v] >= 0) rows.push_back(row_of[v]);
        if (rows.empty())
            throw Infeasible("pair " + std::to_string(violated->pair_index) +
                             " is joined by a path of infinite-cost vertices");
        simplex.add_column(std::move(rows));
        ++result.constraints_generated;
        result.constraints.push_back(std::move(*violated));

        for (VertexId v = 0; v < g.n(); ++v)
            result.assignment.x[v] = (row_of[v] >= 0) ? simplex.dual(row_of[v]) : 0.0;
    }

    double scale = 1.0 / (1.0 - tol);
    for (double& xv : result.assignment.x) xv *= scale;
    result.assignment.value = assignment_value(g, result.assignment.x);
    result.value = result.assignment.value;
    return result;
}

} // namespace pmcut
