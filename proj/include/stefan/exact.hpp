#pragma once

// Exact similarity solution of the one-phase solidification problem with a
// convective (Robin) condition at the fixed face, and its Dirichlet limit.
//
//   T(x,t) = -A Theta + B Theta erf(x / (2 sqrt(alpha t))),  s(t) = 2 xi sqrt(alpha t)
//   A = erf(xi) / (1/(Bi sqrt(pi)) + erf(xi)),  B = 1 / (1/(Bi sqrt(pi)) + erf(xi))
//
// where xi is the unique positive root of
//
//   z exp(z^2) (erf(z) + 1/(Bi sqrt(pi))) - Ste/sqrt(pi) = 0,
//
// and the Bi -> inf limit drops the 1/(Bi sqrt(pi)) term (A = 1, B = 1/erf(xi)).

#include <cmath>
#include <stdexcept>

#include "stefan/model.hpp"
#include "stefan/numerics.hpp"

namespace stefan::exact {

namespace detail {

// l.h.s. of the free-boundary equation; q = 1/(Bi sqrt(pi)), q = 0 in the limit.
inline double xi_equation(double z, double ste, double q) {
    return z * std::exp(z * z) * (numerics::erf(z) + q) - ste / numerics::sqrt_pi;
}

// Negative at 0+, increasing to +inf: start from max(1, sqrt(Ste)) and double
// the upper endpoint until the sign flips.
inline double solve_xi(double ste, double q, const numerics::SolveSettings& settings) {
    const double lo = 1e-12;
    double hi = std::max(1.0, std::sqrt(ste));
    for (int i = 0; xi_equation(hi, ste, q) < 0.0; ++i) {
        if (i > 60 || !std::isfinite(hi))
            throw numerics::BracketError(lo, hi, xi_equation(lo, ste, q), xi_equation(hi, ste, q),
                                         "bracket expansion failed");
        hi *= 2.0;
    }
    return numerics::solve_bracketed([ste, q](double z) { return xi_equation(z, ste, q); },
                                     {lo, hi}, settings);
}

}  // namespace detail

[[nodiscard]] inline model::SimilaritySolution solve_exact(model::DimensionlessParams params,
                                                           numerics::SolveSettings settings = {}) {
    params.validate();
    const double q = 1.0 / (params.bi * numerics::sqrt_pi);
    const double xi = detail::solve_xi(params.ste, q, settings);
    const double erf_xi = numerics::erf(xi);
    const double b = 1.0 / (q + erf_xi);
    return {{model::Scheme::Exact, model::Boundary::Convective}, xi, erf_xi * b, b, params.ste,
            params.bi};
}

/// Dirichlet-limit problem (T(0,t) = -Theta_inf): xi solves
/// z exp(z^2) erf(z) = Ste/sqrt(pi); A = 1 and B = 1/erf(xi).
[[nodiscard]] inline model::SimilaritySolution solve_exact_dirichlet(
    double ste, numerics::SolveSettings settings = {}) {
    if (!(ste > 0.0) || !std::isfinite(ste))
        throw std::invalid_argument("solve_exact_dirichlet: ste must be positive and finite");
    const double xi = detail::solve_xi(ste, 0.0, settings);
    return {{model::Scheme::Exact, model::Boundary::DirichletLimit}, xi, 1.0,
            1.0 / numerics::erf(xi), ste, std::nullopt};
}

/// An exact-scheme solution together with the dimensional data needed to
/// evaluate it at (x, t).
struct TemperatureField {
    model::SimilaritySolution solution;
    double alpha = 0.0;      // m^2/s
    double theta_inf = 0.0;  // degC
};

/// s(t) = 2 xi sqrt(alpha t); zero at t = 0.
[[nodiscard]] inline double free_boundary_position(const model::SimilaritySolution& sol,
                                                   double alpha, double t) {
    if (!(t >= 0.0)) throw std::domain_error("free_boundary_position: t must be >= 0");
    return 2.0 * sol.xi * std::sqrt(alpha * t);
}

/// Temperature of the solid at (x, t); the region beyond the free boundary is
/// held at the phase-change temperature 0.
[[nodiscard]] inline double temperature(const TemperatureField& field, double x, double t) {
    if (field.solution.method.scheme != model::Scheme::Exact)
        throw std::invalid_argument("temperature: field must hold an exact-scheme solution");
    if (!(t > 0.0)) throw std::domain_error("temperature: t must be > 0");
    if (!(x >= 0.0)) throw std::domain_error("temperature: x must be >= 0");
    const double s = free_boundary_position(field.solution, field.alpha, t);
    if (x > s) return 0.0;
    const double eta = x / (2.0 * std::sqrt(field.alpha * t));
    return field.theta_inf * (field.solution.coeff_b * numerics::erf(eta) - field.solution.coeff_a);
}

}  // namespace stefan::exact
