#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "stefan/exact.hpp"
#include "stefan/model.hpp"
#include "support/oracle.hpp"

using namespace stefan;

namespace {

// frozen with a 40-digit bisection oracle on the free-boundary equations
constexpr double kXiInfSte1 = 0.6200626333135955;
constexpr double kXiSte1Bi1 = 0.44620090925930898;
constexpr double kIceXi = 0.12175984869888731;
constexpr double kIceFrontAt10s = 0.0008258154725712596;

model::DimensionlessParams ice_params() {
    return model::dimensionless_from_physical(model::ice_preset()).first;
}

}  // namespace

TEST_CASE("solve_exact_dirichlet: frozen root at ste = 1") {
    const auto sol = exact::solve_exact_dirichlet(1.0);
    CHECK_THAT(sol.xi, Catch::Matchers::WithinAbs(kXiInfSte1, 1e-11));
    CHECK(sol.coeff_a == 1.0);
    CHECK_THAT(sol.coeff_b, Catch::Matchers::WithinRel(1.0 / numerics::erf(sol.xi), 1e-14));
    CHECK_FALSE(sol.bi.has_value());
}

TEST_CASE("solve_exact_dirichlet: root increases with ste") {
    const double a = exact::solve_exact_dirichlet(1e-6).xi;
    const double b = exact::solve_exact_dirichlet(1e-3).xi;
    const double c = exact::solve_exact_dirichlet(1.0).xi;
    CHECK(a < b);
    CHECK(b < c);
}

TEST_CASE("solve_exact: frozen root at ste = bi = 1") {
    const auto sol = exact::solve_exact({1.0, 1.0});
    CHECK_THAT(sol.xi, Catch::Matchers::WithinAbs(kXiSte1Bi1, 1e-11));
}

TEST_CASE("solve_exact: matches the grid-scan oracle") {
    for (const auto [ste, bi] : {std::pair{0.1, 0.5}, {1.0, 10.0}, {10.0, 2.0}}) {
        const double q = 1.0 / (bi * numerics::sqrt_pi);
        const auto eq = [ste = ste, q](double z) {
            return z * std::exp(z * z) * (numerics::erf(z) + q) - ste / numerics::sqrt_pi;
        };
        const double ref = oracle::grid_scan_root(eq, 1e-12, 4.0, 4'000'000);
        CHECK_THAT(exact::solve_exact({ste, bi}).xi, Catch::Matchers::WithinAbs(ref, 1e-9));
    }
}

TEST_CASE("solve_exact: approaches the Dirichlet limit as bi grows") {
    const double xi_big = exact::solve_exact({1.0, 1e6}).xi;
    CHECK_THAT(xi_big, Catch::Matchers::WithinAbs(kXiInfSte1, 1e-5));
    // and at the ice Stefan number the limit root exceeds the bi = 80 root
    const double ste = ice_params().ste;
    CHECK(exact::solve_exact_dirichlet(ste).xi > exact::solve_exact({ste, 80.0}).xi);
}

TEST_CASE("solve_exact: coefficient identities hold across a parameter grid") {
    for (const double ste : {1e-3, 1e-1, 1.0, 10.0, 100.0}) {
        for (const double bi : {0.1, 1.0, 10.0, 1e3, 1e6}) {
            const auto sol = exact::solve_exact({ste, bi});
            CHECK(sol.coeff_a < 1.0);
            CHECK(sol.coeff_b - sol.coeff_a > 0.0);
            // A = B erf(xi) by construction
            CHECK_THAT(sol.coeff_a, Catch::Matchers::WithinRel(
                                        sol.coeff_b * numerics::erf(sol.xi), 1e-13));
            // residual of the defining equation
            const double q = 1.0 / (bi * numerics::sqrt_pi);
            const double res = sol.xi * std::exp(sol.xi * sol.xi) * (numerics::erf(sol.xi) + q) -
                               ste / numerics::sqrt_pi;
            CHECK(std::abs(res) <= 1e-10);
        }
    }
}

TEST_CASE("solve_exact: ice preset values") {
    const auto sol = exact::solve_exact(ice_params());
    CHECK_THAT(sol.xi, Catch::Matchers::WithinAbs(kIceXi, 1e-11));
    const double alpha = model::dimensionless_from_physical(model::ice_preset()).second.alpha;
    CHECK_THAT(exact::free_boundary_position(sol, alpha, 10.0),
               Catch::Matchers::WithinRel(kIceFrontAt10s, 1e-10));
}

TEST_CASE("temperature: boundary and interface values") {
    const auto preset = model::ice_preset();
    const auto [params, diffusivity] = model::dimensionless_from_physical(preset);
    const exact::TemperatureField field{exact::solve_exact(params), diffusivity.alpha,
                                        preset.theta_inf};
    const double s = exact::free_boundary_position(field.solution, field.alpha, 10.0);
    CHECK_THAT(exact::temperature(field, s, 10.0), Catch::Matchers::WithinAbs(0.0, 1e-12));
    CHECK_THAT(exact::temperature(field, 0.0, 10.0),
               Catch::Matchers::WithinRel(-field.solution.coeff_a * preset.theta_inf, 1e-14));
    CHECK(exact::temperature(field, 2.0 * s, 10.0) == 0.0);
    // continuity across the front
    CHECK_THAT(exact::temperature(field, std::nextafter(s, 0.0), 10.0),
               Catch::Matchers::WithinAbs(0.0, 1e-9));

    const exact::TemperatureField dirichlet{exact::solve_exact_dirichlet(1.0), 1.0, 3.5};
    CHECK(exact::temperature(dirichlet, 0.0, 1.0) == -3.5);
}

TEST_CASE("temperature and free_boundary_position: domain errors") {
    const exact::TemperatureField field{exact::solve_exact({1.0, 1.0}), 1.0, 1.0};
    CHECK_THROWS_AS(exact::temperature(field, 0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(exact::temperature(field, -0.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(exact::free_boundary_position(field.solution, 1.0, -1.0), std::domain_error);
    exact::TemperatureField wrong = field;
    wrong.solution.method.scheme = model::Scheme::P1;
    CHECK_THROWS_AS(exact::temperature(wrong, 0.1, 1.0), std::invalid_argument);
}

TEST_CASE("free_boundary_position: scaling") {
    const auto sol = exact::solve_exact({1.0, 1.0});
    CHECK(exact::free_boundary_position(sol, 2.0, 0.0) == 0.0);
    const double s1 = exact::free_boundary_position(sol, 1.3e-6, 2.5);
    const double s4 = exact::free_boundary_position(sol, 1.3e-6, 10.0);
    CHECK_THAT(s4, Catch::Matchers::WithinRel(2.0 * s1, 1e-15));
}

namespace {

struct ExactProfile {
    // un-truncated erf profile and the dimensional constants of the problem
    double a, b, theta, alpha, xi;
    double k, rho, c, lambda, h;

    double operator()(double x, double t) const {
        return theta * (b * std::erf(x / (2.0 * std::sqrt(alpha * t))) - a);
    }
    double front(double t) const { return 2.0 * xi * std::sqrt(alpha * t); }
};

ExactProfile make_profile(const model::PhysicalParams& p) {
    const auto [params, diffusivity] = model::dimensionless_from_physical(p);
    const auto sol = exact::solve_exact(params);
    return {sol.coeff_a, sol.coeff_b, p.theta_inf,  diffusivity.alpha, sol.xi,
            p.conductivity_k, p.density_rho, p.specific_heat_c, p.latent_heat_lambda, p.transfer_h};
}

}  // namespace

TEST_CASE("exact solution satisfies the defining conditions") {
    model::PhysicalParams ones;
    ones.conductivity_k = ones.density_rho = ones.specific_heat_c = 1.0;
    ones.latent_heat_lambda = ones.transfer_h = ones.theta_inf = 1.0;

    for (const auto& physical : {model::ice_preset(), ones}) {
        const ExactProfile profile = make_profile(physical);
        for (const double t : {1.0, 10.0, 100.0}) {
            const double length = 2.0 * std::sqrt(profile.alpha * t);
            const double h1 = 1e-4 * length;  // first-derivative stencil
            const double h2 = 1e-3 * length;  // second-derivative stencil
            const double s = profile.front(t);
            const auto at_t = [&](double x) { return profile(x, t); };

            // convective condition at x = 0, relative to k T_x(0,t)
            const double flux0 = profile.k * numerics::central_diff(at_t, 0.0, h1);
            const double conv = profile.h / std::sqrt(t) * (profile(0.0, t) + profile.theta);
            CHECK(std::abs(flux0 - conv) / std::abs(flux0) <= 1e-8);

            // Stefan condition at x = s(t); s'(t) analytic from s = 2 xi sqrt(alpha t)
            const double flux_s = profile.k * numerics::central_diff(at_t, s, h1);
            const double s_dot = profile.xi * std::sqrt(profile.alpha / t);
            const double melt = profile.rho * profile.lambda * s_dot;
            CHECK(std::abs(flux_s - melt) / std::abs(flux_s) <= 1e-8);

            // heat equation at interior points
            for (const double frac : {0.2, 0.5, 0.8}) {
                const double x = frac * s;
                const double t_t =
                    numerics::central_diff([&](double tt) { return profile(x, tt); }, t, 1e-4 * t);
                const double t_xx = numerics::second_central_diff(at_t, x, h2);
                const double lhs = t_t;
                const double rhs = profile.alpha * t_xx;
                CHECK(std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs)) <= 1e-5);
            }

            // sign, monotonicity, concavity in space on (0, s)
            double prev = profile(0.0, t);
            for (int i = 1; i <= 20; ++i) {
                const double x = s * i / 20.0;
                const double value = profile(x, t);
                CHECK(prev < value);
                if (i < 20) {
                    CHECK(value < 0.0);
                    CHECK(numerics::second_central_diff(at_t, x, h2) < 0.0);
                }
                prev = value;
            }
        }
    }
}
