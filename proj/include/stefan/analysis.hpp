#pragma once

// Error metrics and experiment drivers: free-boundary relative errors against
// the exact solution, absolute temperature-error tables on a position grid,
// Bi sweeps, and Bi -> inf convergence gaps. No I/O here; the CLI layer
// formats the results.

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stefan/exact.hpp"
#include "stefan/hbim.hpp"
#include "stefan/model.hpp"

namespace stefan::analysis {

/// E_rel = |xi_method - xi_exact| / xi_exact at one parameter point.
struct RelErrorPoint {
    model::MethodId method;
    double ste = 0.0;
    std::optional<double> bi;  // empty for the Dirichlet limit
    double e_rel = 0.0;
};

/// Finite-Bi variant: compares against the convective exact solution.
[[nodiscard]] inline RelErrorPoint free_boundary_rel_error(model::MethodId method,
                                                           model::DimensionlessParams params,
                                                           numerics::SolveSettings settings = {}) {
    if (method.boundary != model::Boundary::Convective)
        throw std::invalid_argument(
            "free_boundary_rel_error: use the (method, ste) overload for Dirichlet-limit methods");
    params.validate();
    const double xi_exact = exact::solve_exact(params, settings).xi;
    const double xi_method = method.scheme == model::Scheme::Exact
                                 ? xi_exact
                                 : hbim::solve_approx(method, params, settings).xi;
    return {method, params.ste, params.bi, std::abs(xi_method - xi_exact) / xi_exact};
}

/// Dirichlet-limit variant: compares against the Bi -> inf exact solution.
[[nodiscard]] inline RelErrorPoint free_boundary_rel_error(model::MethodId method, double ste,
                                                           numerics::SolveSettings settings = {}) {
    if (method.boundary != model::Boundary::DirichletLimit)
        throw std::invalid_argument(
            "free_boundary_rel_error: use the (method, params) overload for convective methods");
    const double xi_exact = exact::solve_exact_dirichlet(ste, settings).xi;
    const double xi_method = method.scheme == model::Scheme::Exact
                                 ? xi_exact
                                 : hbim::solve_approx_limit(method, ste).xi;
    return {method, ste, std::nullopt, std::abs(xi_method - xi_exact) / xi_exact};
}

/// Grid of positions with per-method absolute temperature errors
/// E_abs(T_i) = |T(x, t) - T_i(x, t)|, both temperatures extended by 0 beyond
/// their free boundaries. abs_err[i] is the column for P(i+1).
struct ErrorTable {
    double t_probe = 0.0;
    std::vector<double> positions;
    std::array<std::vector<double>, 4> abs_err;
    model::PhysicalParams params;
};

[[nodiscard]] inline ErrorTable temperature_error_table(double t_probe,
                                                        std::vector<double> positions,
                                                        const model::PhysicalParams& physical,
                                                        numerics::SolveSettings settings = {}) {
    if (!(t_probe > 0.0)) throw std::invalid_argument("temperature_error_table: t_probe must be > 0");
    if (positions.empty())
        throw std::invalid_argument("temperature_error_table: positions must be non-empty");
    if (!(positions.front() >= 0.0))
        throw std::invalid_argument("temperature_error_table: positions must be >= 0");
    for (std::size_t i = 1; i < positions.size(); ++i)
        if (!(positions[i - 1] < positions[i]))
            throw std::invalid_argument("temperature_error_table: positions must be strictly increasing");

    const auto [params, diffusivity] = model::dimensionless_from_physical(physical);
    const exact::TemperatureField field{exact::solve_exact(params, settings), diffusivity.alpha,
                                        physical.theta_inf};
    const std::array<model::SimilaritySolution, 4> approx = {
        hbim::solve_approx({model::Scheme::P1, model::Boundary::Convective}, params, settings),
        hbim::solve_approx({model::Scheme::P2, model::Boundary::Convective}, params, settings),
        hbim::solve_approx({model::Scheme::P3, model::Boundary::Convective}, params, settings),
        hbim::solve_approx({model::Scheme::P4, model::Boundary::Convective}, params, settings)};

    ErrorTable table;
    table.t_probe = t_probe;
    table.positions = std::move(positions);
    table.params = physical;
    for (auto& column : table.abs_err) column.reserve(table.positions.size());
    for (const double x : table.positions) {
        const double t_exact = exact::temperature(field, x, t_probe);
        for (std::size_t i = 0; i < 4; ++i) {
            const double t_i = hbim::approx_temperature(approx[i], physical.theta_inf,
                                                        diffusivity.alpha, x, t_probe);
            table.abs_err[i].push_back(std::abs(t_exact - t_i));
        }
    }
    return table;
}

/// One method's E_rel along a Bi grid, with the Dirichlet-limit error the
/// series converges to.
struct SweepSeries {
    model::MethodId method;
    double ste = 0.0;
    std::vector<double> bi_grid;
    std::vector<double> e_rel_values;
    double e_rel_limit = 0.0;
};

[[nodiscard]] inline SweepSeries bi_sweep(model::MethodId method, double ste,
                                          std::vector<double> bi_grid,
                                          numerics::SolveSettings settings = {}) {
    if (method.boundary != model::Boundary::Convective)
        throw std::invalid_argument("bi_sweep: method must have the convective boundary");
    if (bi_grid.empty()) throw std::invalid_argument("bi_sweep: bi_grid must be non-empty");
    if (!(bi_grid.front() > 0.0)) throw std::invalid_argument("bi_sweep: bi_grid must be positive");
    for (std::size_t i = 1; i < bi_grid.size(); ++i)
        if (!(bi_grid[i - 1] < bi_grid[i]))
            throw std::invalid_argument("bi_sweep: bi_grid must be strictly increasing");

    SweepSeries series;
    series.method = method;
    series.ste = ste;
    series.bi_grid = std::move(bi_grid);
    series.e_rel_values.reserve(series.bi_grid.size());
    for (const double bi : series.bi_grid)
        series.e_rel_values.push_back(
            free_boundary_rel_error(method, model::DimensionlessParams{ste, bi}, settings).e_rel);
    series.e_rel_limit =
        free_boundary_rel_error({method.scheme, model::Boundary::DirichletLimit}, ste, settings)
            .e_rel;
    return series;
}

/// |xi(Bi) - xi_limit| for each Bi in the list; accepts the exact scheme too.
[[nodiscard]] inline std::vector<std::pair<double, double>> convergence_gap(
    model::MethodId method, double ste, const std::vector<double>& bi_list,
    numerics::SolveSettings settings = {}) {
    if (bi_list.empty()) throw std::invalid_argument("convergence_gap: bi_list must be non-empty");
    if (!(bi_list.front() > 0.0))
        throw std::invalid_argument("convergence_gap: bi_list must be positive");
    for (std::size_t i = 1; i < bi_list.size(); ++i)
        if (!(bi_list[i - 1] < bi_list[i]))
            throw std::invalid_argument("convergence_gap: bi_list must be strictly increasing");

    const double xi_limit =
        method.scheme == model::Scheme::Exact
            ? exact::solve_exact_dirichlet(ste, settings).xi
            : hbim::solve_approx_limit({method.scheme, model::Boundary::DirichletLimit}, ste).xi;
    std::vector<std::pair<double, double>> gaps;
    gaps.reserve(bi_list.size());
    for (const double bi : bi_list) {
        const model::DimensionlessParams params{ste, bi};
        const double xi =
            method.scheme == model::Scheme::Exact
                ? exact::solve_exact(params, settings).xi
                : hbim::solve_approx({method.scheme, model::Boundary::Convective}, params, settings)
                      .xi;
        gaps.emplace_back(bi, std::abs(xi - xi_limit));
    }
    return gaps;
}

/// Default sweep grid: 60 log-spaced points on [1e-1, 1e3] plus the
/// convergence tail {1e4, 1e5, 1e6}.
[[nodiscard]] inline std::vector<double> default_bi_grid() {
    std::vector<double> grid;
    grid.reserve(63);
    for (int j = 0; j < 60; ++j) grid.push_back(std::pow(10.0, -1.0 + 4.0 * j / 59.0));
    grid.push_back(1e4);
    grid.push_back(1e5);
    grid.push_back(1e6);
    return grid;
}

/// Position grids of the two built-in error tables (t = 10 s, ice data):
/// 0 .. 1e-3 step 1e-4, and the fine grid 8.20e-4 .. 8.30e-4 step 1e-6.
[[nodiscard]] inline std::vector<double> table1_positions() {
    std::vector<double> xs;
    xs.reserve(11);
    for (int k = 0; k <= 10; ++k) xs.push_back(k * 1e-4);
    return xs;
}

[[nodiscard]] inline std::vector<double> table2_positions() {
    std::vector<double> xs;
    xs.reserve(11);
    for (int k = 0; k <= 10; ++k) xs.push_back(8.2e-4 + k * 1e-6);
    return xs;
}

}  // namespace stefan::analysis
