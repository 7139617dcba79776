#include "gwbox/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gwbox/errors.hpp"
#include "gwbox/risk.hpp"

namespace gwbox {

namespace {

struct SquareSolution {
    std::vector<std::size_t> row_of_col;  // size n
    std::vector<double> u;                // row potentials
    std::vector<double> v;                // column potentials
};

// Classic O(n^3) shortest-augmenting-path assignment on a square matrix.
// Returns the matching together with the dual potentials; optimal edges have
// zero reduced cost c[i][j] - u[i] - v[j].
SquareSolution solve_square(const std::vector<std::vector<double>>& cost) {
    const std::size_t n = cost.size();
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    SquareSolution sol;
    sol.row_of_col.assign(n, 0);
    sol.u.assign(n, 0.0);
    sol.v.assign(n, 0.0);
    for (std::size_t j = 1; j <= n; ++j) sol.row_of_col[j - 1] = p[j] - 1;
    for (std::size_t i = 1; i <= n; ++i) sol.u[i - 1] = u[i];
    for (std::size_t j = 1; j <= n; ++j) sol.v[j - 1] = v[j];
    return sol;
}

// Kuhn augmenting search on the zero-reduced-cost graph. Rows pinned by the
// canonicalization pass are never displaced.
bool try_augment(std::size_t row, const std::vector<std::vector<std::size_t>>& adj,
                 std::vector<char>& visited, std::vector<std::ptrdiff_t>& match_col,
                 const std::vector<std::ptrdiff_t>& fixed_col) {
    for (std::size_t col : adj[row]) {
        if (visited[col]) continue;
        visited[col] = 1;
        const std::ptrdiff_t holder = match_col[col];
        if (holder < 0) {
            match_col[col] = static_cast<std::ptrdiff_t>(row);
            return true;
        }
        if (fixed_col[static_cast<std::size_t>(holder)] >= 0) continue;
        if (try_augment(static_cast<std::size_t>(holder), adj, visited, match_col,
                        fixed_col)) {
            match_col[col] = static_cast<std::ptrdiff_t>(row);
            return true;
        }
    }
    return false;
}

// Does the zero-cost graph still admit a perfect matching with the currently
// pinned (row, col) pairs?
bool perfect_matching_exists(std::size_t n,
                             const std::vector<std::vector<std::size_t>>& adj,
                             const std::vector<std::ptrdiff_t>& fixed_col) {
    std::vector<std::ptrdiff_t> match_col(n, -1);
    for (std::size_t r = 0; r < n; ++r) {
        const std::ptrdiff_t j = fixed_col[r];
        if (j < 0) continue;
        if (match_col[static_cast<std::size_t>(j)] >= 0) return false;
        match_col[static_cast<std::size_t>(j)] = static_cast<std::ptrdiff_t>(r);
    }
    for (std::size_t r = 0; r < n; ++r) {
        if (fixed_col[r] >= 0) continue;
        std::vector<char> visited(n, 0);
        if (!try_augment(r, adj, visited, match_col, fixed_col)) return false;
    }
    return true;
}

}  // namespace

CostMatrix build_cost_matrix(const std::vector<DetectionInput>& dets,
                             const std::vector<Box>& gts) {
    if (dets.empty()) throw EmptyInput("build_cost_matrix: no detections");
    if (gts.empty()) throw EmptyInput("build_cost_matrix: no ground truths");
    CostMatrix c;
    c.rows = dets.size();
    c.cols = gts.size();
    c.entries.resize(c.rows * c.cols);
    for (std::size_t i = 0; i < c.rows; ++i) {
        const double risk = bayes_risk(dets[i].gauss);
        for (std::size_t j = 0; j < c.cols; ++j) {
            c.at(i, j) =
                -br_match_quality(dets[i].score, iou(dets[i].box, gts[j]), risk);
        }
    }
    return c;
}

MatchResult hungarian(const CostMatrix& c) {
    if (c.rows == 0 || c.cols == 0) throw EmptyInput("hungarian: empty cost matrix");
    if (c.entries.size() != c.rows * c.cols) {
        throw ShapeMismatch("hungarian: entry storage does not match rows x cols");
    }
    double abs_sum = 0.0;
    double abs_max = 0.0;
    for (double v : c.entries) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("hungarian: non-finite cost entry");
        }
        abs_sum += std::abs(v);
        abs_max = std::max(abs_max, std::abs(v));
    }

    const std::size_t n = std::max(c.rows, c.cols);
    const double pad = abs_sum + 1.0;  // larger than any real assignment total
    std::vector<std::vector<double>> cost(n, std::vector<double>(n, pad));
    for (std::size_t i = 0; i < c.rows; ++i)
        for (std::size_t j = 0; j < c.cols; ++j) cost[i][j] = c.at(i, j);

    const SquareSolution sol = solve_square(cost);

    auto collect = [&](const std::vector<std::ptrdiff_t>& col_of_row) {
        MatchResult r;
        for (std::size_t i = 0; i < c.rows; ++i) {
            const std::ptrdiff_t j = col_of_row[i];
            if (j >= 0 && static_cast<std::size_t>(j) < c.cols) {
                r.pairs.emplace_back(i, static_cast<std::size_t>(j));
                r.total_cost += c.at(i, static_cast<std::size_t>(j));
            }
        }
        return r;
    };

    std::vector<std::ptrdiff_t> solver_col(n, -1);
    for (std::size_t j = 0; j < n; ++j)
        solver_col[sol.row_of_col[j]] = static_cast<std::ptrdiff_t>(j);
    MatchResult base = collect(solver_col);

    // Canonicalization: every optimal assignment lives on edges with zero
    // reduced cost, and any perfect matching over those edges attains the
    // optimal total. Greedily pin the smallest feasible column per row in row
    // order, which yields the lexicographically smallest pair list, then
    // re-verify the total against the solver's optimum.
    const double eps = 1e-9 * (1.0 + abs_max);
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(cost[i][j] - sol.u[i] - sol.v[j]) <= eps) {
                adj[i].push_back(j);
            }
        }
    }

    std::vector<std::ptrdiff_t> fixed(n, -1);
    std::vector<char> col_taken(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : adj[i]) {
            if (col_taken[j]) continue;
            fixed[i] = static_cast<std::ptrdiff_t>(j);
            col_taken[j] = 1;
            if (perfect_matching_exists(n, adj, fixed)) break;
            fixed[i] = -1;
            col_taken[j] = 0;
        }
        if (fixed[i] < 0) return base;  // degenerate duals; keep solver result
    }

    MatchResult canonical = collect(fixed);
    const double tol = 1e-6 * (1.0 + std::abs(base.total_cost));
    if (canonical.pairs.size() != base.pairs.size() ||
        std::abs(canonical.total_cost - base.total_cost) > tol) {
        return base;
    }
    return canonical;
}

}  // namespace gwbox
