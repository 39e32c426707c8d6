#pragma once

// Heat-balance-integral approximations of the convective solidification
// problem, all built on the quadratic profile
//
//   T~(x,t) = -A Theta (1 - x/s(t)) - B Theta (1 - x/s(t))^2,  s(t) = 2 xi sqrt(alpha t).
//
// Four variants, differing in which two of the defining conditions replace the
// heat equation and the Stefan condition:
//
//   P1  integral balance      + pseudo-Stefan condition
//   P2  integral balance      + Stefan condition
//   P3  doubly-integrated balance + Stefan condition
//   P4  doubly-integrated balance + pseudo-Stefan condition
//
// Each reduces to a polynomial equation for xi with a proved root bracket:
// (xi_min, xi_max) for P1/P2 and (0, sqrt(3)) for P3/P4. The Bi -> inf
// (Dirichlet) limits of all four have closed forms and need no iteration.

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "stefan/model.hpp"
#include "stefan/numerics.hpp"

namespace stefan::hbim {

/// Thrown when a paper-proved endpoint sign fails numerically. This is
/// reported for investigation, never silently repaired.
class InvariantViolation : public std::runtime_error {
public:
    InvariantViolation(model::MethodId method, double ste, double bi, double p_lo, double p_hi)
        : std::runtime_error(std::string("endpoint sign assertion failed for ") +
                             std::string(model::scheme_name(method.scheme)) +
                             " at ste=" + std::to_string(ste) + " bi=" + std::to_string(bi) +
                             ": p(lo)=" + std::to_string(p_lo) + " p(hi)=" + std::to_string(p_hi)),
          method_(method),
          ste_(ste),
          bi_(bi),
          p_lo_(p_lo),
          p_hi_(p_hi) {}

    [[nodiscard]] model::MethodId method() const noexcept { return method_; }
    [[nodiscard]] double ste() const noexcept { return ste_; }
    [[nodiscard]] double bi() const noexcept { return bi_; }
    [[nodiscard]] double p_lo() const noexcept { return p_lo_; }
    [[nodiscard]] double p_hi() const noexcept { return p_hi_; }

private:
    model::MethodId method_;
    double ste_;
    double bi_;
    double p_lo_;
    double p_hi_;
};

/// Positivity interval (xi_min, xi_max) for the P1/P2 roots, with the
/// discriminants it is built from.
struct XiBounds {
    double xi_min = 0.0;
    double xi_max = 0.0;
    double delta_min = 0.0;
    double delta_max = 0.0;
};

[[nodiscard]] inline XiBounds xi_bounds(model::DimensionlessParams params) {
    params.validate();
    const double ste = params.ste;
    const double ib = 1.0 / params.bi;
    XiBounds b;
    b.delta_min = 4.0 * ste * ste + 8.0 * ste + ib * ib;
    b.delta_max = 12.0 * ste * ste + 36.0 * ste + 9.0 * ib * ib;
    // Equal to (sqrt(delta_min) - 1/Bi)/(2(2+Ste)) and
    // (sqrt(delta_max) - 3/Bi)/(2(3+Ste)); these forms stay exact when the
    // 1/Bi term dominates (small Ste*Bi), where the differences cancel.
    b.xi_min = 2.0 * ste / (std::sqrt(b.delta_min) + ib);
    b.xi_max = 6.0 * ste / (std::sqrt(b.delta_max) + 3.0 * ib);
    return b;
}

/// xi-polynomial of one method in Horner-ready form (coeffs[k] multiplies
/// z^k), together with its proved root bracket and endpoint signs.
struct XiPolynomial {
    std::array<double, 5> coeffs{};
    double lo = 0.0;
    double hi = 0.0;
    int sign_lo = 0;  // proved sign of p(lo), +1 or -1
    int sign_hi = 0;  // proved sign of p(hi)

    [[nodiscard]] double operator()(double z) const noexcept {
        return (((coeffs[4] * z + coeffs[3]) * z + coeffs[2]) * z + coeffs[1]) * z + coeffs[0];
    }

    /// Magnitude used to normalize residuals (dominant coefficient).
    [[nodiscard]] double scale() const noexcept {
        double m = 0.0;
        for (const double c : coeffs) m = std::max(m, std::abs(c));
        return m;
    }
};

namespace detail {

inline void reject_degenerate(double v, const char* name) {
    if (!std::isfinite(v) || v < 1e-12)
        throw std::invalid_argument(std::string(name) +
                                    " below 1e-12 is numerically degenerate (got " +
                                    std::to_string(v) + ")");
}

inline void require_approx_scheme(model::Scheme scheme, const char* where) {
    if (scheme == model::Scheme::Exact)
        throw std::invalid_argument(std::string(where) + ": scheme must be one of P1..P4");
}

// A_i, B_i from the two conditions shared by each pair of methods.
inline std::pair<double, double> profile_coefficients(model::Scheme scheme, double xi, double ste,
                                                      double ib) {
    if (scheme == model::Scheme::P1 || scheme == model::Scheme::P2) {
        const double den = ste * (xi * xi + 2.0 * ib * xi + 3.0);
        return {(6.0 * ste - (6.0 + 2.0 * ste) * xi * xi - 6.0 * ib * xi) / den,
                ((3.0 * ste + 6.0) * xi * xi + 3.0 * ib * xi - 3.0 * ste) / den};
    }
    const double den = ib * xi * xi + 6.0 * xi + 3.0 * ib;
    return {2.0 * xi * (3.0 - xi * xi) / den, 2.0 * xi * xi * xi / den};
}

}  // namespace detail

/// Finite-Bi xi-polynomial of a method, with its proved bracket.
[[nodiscard]] inline XiPolynomial xi_polynomial(model::Scheme scheme,
                                                model::DimensionlessParams params) {
    detail::require_approx_scheme(scheme, "xi_polynomial");
    params.validate();
    const double ste = params.ste;
    const double ib = 1.0 / params.bi;
    XiPolynomial p;
    switch (scheme) {
        case model::Scheme::P1:
            p.coeffs = {9.0 * ste * (1.0 + 2.0 * ste), -(30.0 * ste + 9.0) * ib,
                        12.0 * ib * ib - 42.0 * ste - 12.0 * ste * ste - 18.0,
                        (21.0 + 6.0 * ste) * ib, 12.0 + 9.0 * ste + 2.0 * ste * ste};
            p.sign_lo = +1;
            p.sign_hi = -1;
            break;
        case model::Scheme::P2:
            p.coeffs = {-3.0 * ste, 3.0 * ib, 6.0 + ste, 2.0 * ib, 1.0};
            p.sign_lo = -1;
            p.sign_hi = +1;
            break;
        case model::Scheme::P3:
            p.coeffs = {-3.0 * ste, 3.0 * ib, 6.0 + ste, ib, 0.0};
            p.sign_lo = -1;
            p.sign_hi = +1;
            break;
        case model::Scheme::P4:
            p.coeffs = {9.0 * ste, -3.0 * ib, -6.0 * (1.0 + ste), -ib, ste};
            p.sign_lo = +1;
            p.sign_hi = -1;
            break;
        default:
            break;
    }
    if (scheme == model::Scheme::P1 || scheme == model::Scheme::P2) {
        const XiBounds b = xi_bounds(params);
        p.lo = b.xi_min;
        p.hi = b.xi_max;
    } else {
        p.lo = 0.0;
        p.hi = numerics::sqrt_three;
    }
    return p;
}

/// Bi -> inf xi-polynomial of a method, with the limit bracket
/// (sqrt(Ste/(2+Ste)), sqrt(3 Ste/(3+Ste))) for P1/P2 and (0, sqrt(3)) for P3/P4.
[[nodiscard]] inline XiPolynomial xi_polynomial_limit(model::Scheme scheme, double ste) {
    detail::require_approx_scheme(scheme, "xi_polynomial_limit");
    detail::reject_degenerate(ste, "xi_polynomial_limit: ste");
    XiPolynomial p;
    switch (scheme) {
        case model::Scheme::P1:
            p.coeffs = {9.0 * ste * (1.0 + 2.0 * ste), 0.0,
                        -(42.0 * ste + 12.0 * ste * ste + 18.0), 0.0,
                        12.0 + 9.0 * ste + 2.0 * ste * ste};
            p.sign_lo = +1;
            p.sign_hi = -1;
            break;
        case model::Scheme::P2:
            p.coeffs = {-3.0 * ste, 0.0, 6.0 + ste, 0.0, 1.0};
            p.sign_lo = -1;
            p.sign_hi = +1;
            break;
        case model::Scheme::P3:
            p.coeffs = {-3.0 * ste, 0.0, 6.0 + ste, 0.0, 0.0};
            p.sign_lo = -1;
            p.sign_hi = +1;
            break;
        case model::Scheme::P4:
            p.coeffs = {9.0 * ste, 0.0, -6.0 * (1.0 + ste), 0.0, ste};
            p.sign_lo = +1;
            p.sign_hi = -1;
            break;
        default:
            break;
    }
    if (scheme == model::Scheme::P1 || scheme == model::Scheme::P2) {
        p.lo = std::sqrt(ste / (2.0 + ste));
        p.hi = std::sqrt(3.0 * ste / (3.0 + ste));
    } else {
        p.lo = 0.0;
        p.hi = numerics::sqrt_three;
    }
    return p;
}

/// Solve one of P1..P4 at finite Bi. The root is taken inside the proved
/// bracket only (Descartes' rule allows a second positive root outside it for
/// P1 and P4).
[[nodiscard]] inline model::SimilaritySolution solve_approx(model::MethodId method,
                                                            model::DimensionlessParams params,
                                                            numerics::SolveSettings settings = {}) {
    detail::require_approx_scheme(method.scheme, "solve_approx");
    if (method.boundary != model::Boundary::Convective)
        throw std::invalid_argument("solve_approx: method must have the convective boundary");
    params.validate();
    detail::reject_degenerate(params.ste, "solve_approx: ste");
    detail::reject_degenerate(params.bi, "solve_approx: bi");

    const XiPolynomial p = xi_polynomial(method.scheme, params);
    const double p_lo = p(p.lo);
    const double p_hi = p(p.hi);
    if (!(p_lo * p.sign_lo > 0.0) || !(p_hi * p.sign_hi > 0.0))
        throw InvariantViolation(method, params.ste, params.bi, p_lo, p_hi);

    const double xi = numerics::solve_bracketed(p, {p.lo, p.hi}, settings);
    const auto [a, b] = detail::profile_coefficients(method.scheme, xi, params.ste, 1.0 / params.bi);
    return {method, xi, a, b, params.ste, params.bi};
}

/// Closed-form Bi -> inf solutions; no iteration. Expressions are the
/// rationalized equivalents of the explicit roots, exact for all Ste > 0:
///   P1: xi^2 = 3 u Ste ((2Ste+3)u + 2Ste+9) / ((u+1)(u+2)(12+9Ste+2Ste^2))
///   P2: xi^2 = 6 Ste / (sqrt(Ste^2+24Ste+36) + 6 + Ste)
///   P3: xi^2 = 3 Ste / (6 + Ste)
///   P4: xi^2 = 3 Ste / (1 + Ste + u),            u = sqrt(2 Ste + 1).
[[nodiscard]] inline model::SimilaritySolution solve_approx_limit(model::MethodId method,
                                                                  double ste) {
    detail::require_approx_scheme(method.scheme, "solve_approx_limit");
    if (method.boundary != model::Boundary::DirichletLimit)
        throw std::invalid_argument("solve_approx_limit: method must have the Dirichlet-limit boundary");
    detail::reject_degenerate(ste, "solve_approx_limit: ste");

    const double u = std::sqrt(2.0 * ste + 1.0);
    double xi = 0.0;
    double a = 0.0;
    double b = 0.0;
    switch (method.scheme) {
        case model::Scheme::P1:
            xi = std::sqrt(3.0 * u * ste * ((2.0 * ste + 3.0) * u + 2.0 * ste + 9.0) /
                           ((u + 1.0) * (u + 2.0) * (12.0 + 9.0 * ste + 2.0 * ste * ste)));
            a = 2.0 / (u + 1.0);        // = (sqrt(2Ste+1) - 1)/Ste
            b = (u - 1.0) / (u + 1.0);  // = 1 - a
            break;
        case model::Scheme::P2: {
            const double d = std::sqrt(ste * ste + 24.0 * ste + 36.0);
            const double w = 6.0 * ste / (d + 6.0 + ste);  // = xi^2
            xi = std::sqrt(w);
            a = 36.0 * (2.0 * ste + 3.0) /
                ((ste * ste + 15.0 * ste + 18.0 + (3.0 + ste) * d) * (w + 3.0));
            b = 6.0 * ste * (2.0 * ste + 3.0) /
                (((ste + 2.0) * d + ste * ste + 10.0 * ste + 12.0) * (w + 3.0));
            break;
        }
        case model::Scheme::P3:
            xi = std::sqrt(3.0 * ste / (6.0 + ste));
            a = 6.0 / (6.0 + ste);
            b = ste / (6.0 + ste);
            break;
        case model::Scheme::P4:
            xi = std::sqrt(3.0 * ste / (1.0 + ste + u));
            a = 2.0 / (u + 1.0);            // same A as P1's limit
            b = ste / (1.0 + ste + u);      // = xi^2 / 3
            break;
        default:
            break;
    }
    return {method, xi, a, b, ste, std::nullopt};
}

/// Quadratic-profile temperature; the region beyond the method's free
/// boundary is held at the phase-change temperature 0.
[[nodiscard]] inline double approx_temperature(const model::SimilaritySolution& sol,
                                               double theta_inf, double alpha, double x, double t) {
    detail::require_approx_scheme(sol.method.scheme, "approx_temperature");
    if (!(t > 0.0)) throw std::domain_error("approx_temperature: t must be > 0");
    if (!(x >= 0.0)) throw std::domain_error("approx_temperature: x must be >= 0");
    const double s = 2.0 * sol.xi * std::sqrt(alpha * t);
    if (x > s) return 0.0;
    const double u = 1.0 - x / s;
    return -theta_inf * u * (sol.coeff_a + sol.coeff_b * u);
}

/// Relative residual magnitudes of the conditions defining one method's
/// problem; entries not applicable to the method are left empty.
struct ResidualReport {
    std::optional<double> heat_balance;     // d/dt int_0^s T dx balance (P1, P2)
    std::optional<double> refined_balance;  // doubly-integrated balance (P3, P4)
    std::optional<double> convective;
    std::optional<double> stefan;           // P2, P3
    std::optional<double> pseudo_stefan;    // P1, P4
    std::optional<double> interface_temp;

    [[nodiscard]] double max_residual() const noexcept {
        double m = 0.0;
        for (const auto& v : {heat_balance, refined_balance, convective, stefan, pseudo_stefan,
                              interface_temp})
            if (v) m = std::max(m, *v);
        return m;
    }
};

namespace detail {

inline double rel_residual(double lhs, double rhs) {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

}  // namespace detail

/// Evaluate, by quadrature and finite differences, exactly the conditions
/// that define the method's problem:
///   P1: {balance, convective, interface temperature, pseudo-Stefan}
///   P2: {balance, convective, interface temperature, Stefan}
///   P3: {refined balance, convective, interface temperature, Stefan}
///   P4: {refined balance, convective, interface temperature, pseudo-Stefan}
/// The x-stencils are exact for the quadratic profile, so all residuals sit
/// at rounding level for a correctly solved method.
[[nodiscard]] inline ResidualReport residual_suite(model::MethodId method,
                                                   const model::SimilaritySolution& sol,
                                                   double theta_inf, double alpha, double t_probe) {
    if (!(sol.method == method))
        throw std::invalid_argument("residual_suite: method does not match the solution");
    detail::require_approx_scheme(method.scheme, "residual_suite");
    if (method.boundary != model::Boundary::Convective || !sol.bi)
        throw std::invalid_argument("residual_suite: defined for the finite-Bi problems only");
    if (!(t_probe > 0.0)) throw std::invalid_argument("residual_suite: t_probe must be > 0");
    if (!(theta_inf > 0.0) || !(alpha > 0.0))
        throw std::invalid_argument("residual_suite: theta_inf and alpha must be > 0");

    const double ste = sol.ste;
    const double bi = *sol.bi;
    const double xi = sol.xi;
    const double a = sol.coeff_a;
    const double b = sol.coeff_b;
    const double t = t_probe;

    const auto s_of = [&](double tt) { return 2.0 * xi * std::sqrt(alpha * tt); };
    const double s = s_of(t);
    const double s_dot = xi * std::sqrt(alpha / t);
    // un-truncated profile: polynomial in x, smooth in t
    const auto profile = [&](double xx, double tt) {
        const double u = 1.0 - xx / s_of(tt);
        return -theta_inf * u * (a + b * u);
    };
    const auto at_t = [&](double xx) { return profile(xx, t); };
    const double hx = 0.25 * s;
    const auto t_x = [&](double xx) { return numerics::central_diff(at_t, xx, hx); };

    ResidualReport r;
    r.interface_temp = std::abs(profile(s, t)) / theta_inf;
    // k T_x(0,t) = (h/sqrt(t)) (T(0,t) + Theta), with h/k = Bi/sqrt(alpha)
    r.convective = detail::rel_residual(t_x(0.0),
                                        bi / std::sqrt(alpha * t) * (profile(0.0, t) + theta_inf));

    const bool keeps_stefan =
        method.scheme == model::Scheme::P2 || method.scheme == model::Scheme::P3;
    if (keeps_stefan) {
        // k T_x(s,t) = rho lambda s'(t), divided through by rho lambda:
        // (alpha Ste / Theta) T_x(s,t) = s'(t)
        r.stefan = detail::rel_residual(alpha * ste / theta_inf * t_x(s), s_dot);
    } else {
        // (T_x)^2(s,t) = -(lambda/c) T_xx(s,t), lambda/c = Theta/Ste
        const double tx = t_x(s);
        const double txx = numerics::second_central_diff(at_t, s, hx);
        r.pseudo_stefan = detail::rel_residual(tx * tx, -theta_inf / ste * txx);
    }

    const bool integral_balance =
        method.scheme == model::Scheme::P1 || method.scheme == model::Scheme::P2;
    if (integral_balance) {
        // d/dt int_0^s T dx = (lambda/c) s'(t) - alpha T_x(0,t); the integral
        // is proportional to sqrt(t), so d/dt reduces to I/(2t)
        const double integral = numerics::integrate(at_t, 0.0, s, 64);
        r.heat_balance = detail::rel_residual(integral / (2.0 * t),
                                              theta_inf / ste * s_dot - alpha * t_x(0.0));
    } else {
        // int_0^s int_0^x T_t dxi dx = -alpha (T(0,t) + T_x(0,t) s)
        const double dt = 1e-5 * t;
        const auto t_t = [&](double xx) {
            return numerics::central_diff([&](double tt) { return profile(xx, tt); }, t, dt);
        };
        const auto inner = [&](double xx) { return numerics::integrate(t_t, 0.0, xx, 32); };
        const double lhs = numerics::integrate(inner, 0.0, s, 64);
        r.refined_balance =
            detail::rel_residual(lhs, -alpha * (profile(0.0, t) + t_x(0.0) * s));
    }
    return r;
}

}  // namespace stefan::hbim
