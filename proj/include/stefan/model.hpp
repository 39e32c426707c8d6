#pragma once

// Parameter types and the dimensional -> dimensionless conversion
// (alpha = k/(rho c), Ste = c*Theta_inf/lambda, Bi = h*sqrt(alpha)/k).
// All value types here are immutable once built and freely shareable.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace stefan::model {

enum class Scheme { Exact, P1, P2, P3, P4 };
enum class Boundary { Convective, DirichletLimit };

/// One of the ten solution variants: {exact, P1..P4} x {finite Bi, Bi->inf}.
struct MethodId {
    Scheme scheme = Scheme::Exact;
    Boundary boundary = Boundary::Convective;

    friend bool operator==(const MethodId&, const MethodId&) = default;
};

[[nodiscard]] constexpr std::string_view scheme_name(Scheme s) noexcept {
    switch (s) {
        case Scheme::Exact: return "exact";
        case Scheme::P1: return "p1";
        case Scheme::P2: return "p2";
        case Scheme::P3: return "p3";
        case Scheme::P4: return "p4";
    }
    return "?";
}

[[nodiscard]] inline std::optional<Scheme> parse_scheme(std::string_view name) noexcept {
    if (name == "exact") return Scheme::Exact;
    if (name == "p1") return Scheme::P1;
    if (name == "p2") return Scheme::P2;
    if (name == "p3") return Scheme::P3;
    if (name == "p4") return Scheme::P4;
    return std::nullopt;
}

struct Diffusivity {
    double alpha = 0.0;  // m^2/s
};

/// Dimensional material and boundary data. theta_inf is the magnitude of the
/// (negative) ambient temperature at the fixed face; transfer_h carries the
/// W*sqrt(s)/(m^2 degC) units of the h/sqrt(t) convective coefficient.
struct PhysicalParams {
    double conductivity_k = 0.0;      // W/(m degC)
    double density_rho = 0.0;         // kg/m^3
    double specific_heat_c = 0.0;     // J/(kg K)
    double latent_heat_lambda = 0.0;  // J/kg
    double transfer_h = 0.0;          // W sqrt(s)/(m^2 degC)
    double theta_inf = 0.0;           // degC

    void validate() const {
        const auto check = [](double v, const char* name) {
            if (!(v > 0.0) || !std::isfinite(v))
                throw std::invalid_argument(std::string("PhysicalParams: ") + name +
                                            " must be a positive finite number (got " +
                                            std::to_string(v) + ")");
        };
        check(conductivity_k, "conductivity_k");
        check(density_rho, "density_rho");
        check(specific_heat_c, "specific_heat_c");
        check(latent_heat_lambda, "latent_heat_lambda");
        check(transfer_h, "transfer_h");
        check(theta_inf, "theta_inf");
    }
};

/// Stefan number and generalized Biot number, the sole inputs to every
/// xi-equation. Bi = +inf is never stored here; the Dirichlet-limit method
/// variants represent that case.
struct DimensionlessParams {
    double ste = 0.0;
    double bi = 0.0;

    void validate() const {
        if (!(ste > 0.0) || !std::isfinite(ste))
            throw std::invalid_argument("DimensionlessParams: ste must be positive and finite (got " +
                                        std::to_string(ste) + ")");
        if (!(bi > 0.0) || !std::isfinite(bi))
            throw std::invalid_argument("DimensionlessParams: bi must be positive and finite (got " +
                                        std::to_string(bi) + ")");
    }
};

/// The triple (xi, A, B) plus provenance; fully determines a temperature
/// profile and free boundary via s(t) = 2 xi sqrt(alpha t).
struct SimilaritySolution {
    MethodId method;
    double xi = 0.0;
    double coeff_a = 0.0;
    double coeff_b = 0.0;
    double ste = 0.0;
    std::optional<double> bi;  // empty for Dirichlet-limit solutions
};

[[nodiscard]] inline std::pair<DimensionlessParams, Diffusivity> dimensionless_from_physical(
    const PhysicalParams& p) {
    p.validate();
    const double alpha = p.conductivity_k / (p.density_rho * p.specific_heat_c);
    DimensionlessParams d;
    d.ste = p.specific_heat_c * p.theta_inf / p.latent_heat_lambda;
    d.bi = p.transfer_h * std::sqrt(alpha) / p.conductivity_k;
    return {d, Diffusivity{alpha}};
}

/// Solidification-of-ice data set (k = 2.219 W/(m degC), c = 2097.6 J/(kg K),
/// alpha = 1.15e-6 m^2/s, lambda = 3.33e5 J/kg, Theta_inf = 5 degC,
/// h = 1.65e5 W sqrt(s)/(m^2 degC)). The density is recovered from
/// rho = k/(c alpha) so the tabulated constants stay mutually consistent.
[[nodiscard]] inline PhysicalParams ice_preset() {
    PhysicalParams p;
    p.conductivity_k = 2.219;
    p.specific_heat_c = 2097.6;
    p.latent_heat_lambda = 3.33e5;
    p.transfer_h = 1.65e5;
    p.theta_inf = 5.0;
    p.density_rho = p.conductivity_k / (p.specific_heat_c * 1.15e-6);
    return p;
}

}  // namespace stefan::model
