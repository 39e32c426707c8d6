#pragma once

// Scalar numerics used by the solver library: error function, a guaranteed-
// bracket root solver, and the quadrature / finite-difference helpers used by
// the residual verification suites. Everything here is a pure function of its
// arguments and safe to call concurrently.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace stefan::numerics {

inline constexpr double sqrt_pi = 1.7724538509055160273;
inline constexpr double sqrt_three = 1.7320508075688772935;

/// Root bracket; endpoints must be finite with lo < hi.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

/// Tolerances for solve_bracketed. The returned root r satisfies
/// |r - r*| <= abs_tol + rel_tol*|r| for the true root r* in the bracket.
struct SolveSettings {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_iter = 200;
};

/// Thrown when a bracket does not straddle a sign change (carries both
/// endpoint values so the caller can see what the function looked like).
class BracketError : public std::runtime_error {
public:
    BracketError(double lo, double hi, double f_lo, double f_hi, const std::string& what_arg)
        : std::runtime_error("bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                             "]: " + what_arg + " (f(lo)=" + std::to_string(f_lo) +
                             ", f(hi)=" + std::to_string(f_hi) + ")"),
          f_lo_(f_lo),
          f_hi_(f_hi) {}

    [[nodiscard]] double f_lo() const noexcept { return f_lo_; }
    [[nodiscard]] double f_hi() const noexcept { return f_hi_; }

private:
    double f_lo_;
    double f_hi_;
};

/// Thrown when an iteration budget is exhausted.
class ConvergenceError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// erf(x) = 2x/sqrt(pi) * exp(-x^2) * sum_{n>=0} (2x^2)^n / (2n+1)!!
// All terms positive, so there is no cancellation; used for x in [0, 2].
inline double erf_series(double x) {
    const double x2 = x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < 200; ++n) {
        term *= 2.0 * x2 / (2.0 * n + 3.0);
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return 2.0 * x / sqrt_pi * std::exp(-x2) * sum;
}

// sqrt(pi) exp(x^2) erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
// evaluated with the modified Lentz scheme; used for x in (2, 6].
inline double erfc_cf(double x) {
    constexpr double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int n = 1; n < 200; ++n) {
        const double a = 0.5 * n;
        d = x + a * d;
        if (std::abs(d) < tiny) d = tiny;
        c = x + a / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-17) break;
    }
    return std::exp(-x * x) / (sqrt_pi * f);
}

}  // namespace detail

/// Error function, |error| <= 1e-14 on |x| <= 6; clamps to +-1 beyond.
/// Odd symmetry is exact: the sign is applied after evaluating at |x|.
inline double erf(double x) {
    if (!std::isfinite(x)) throw std::domain_error("erf: argument must be finite");
    const double ax = std::abs(x);
    double r;
    if (ax <= 2.0) {
        r = detail::erf_series(ax);
    } else if (ax <= 6.0) {
        r = 1.0 - detail::erfc_cf(ax);
    } else {
        r = 1.0;
    }
    return std::signbit(x) ? -r : r;
}

/// Brent-style solve of f(r) = 0 inside a sign-change bracket: inverse
/// quadratic / secant steps safeguarded by bisection, so the iterate never
/// leaves the bracket. Deterministic for fixed inputs.
template <class F>
double solve_bracketed(F&& f, Bracket bracket, SolveSettings settings = {}) {
    if (!std::isfinite(bracket.lo) || !std::isfinite(bracket.hi) || !(bracket.lo < bracket.hi))
        throw std::invalid_argument("solve_bracketed: bracket requires finite lo < hi");
    if (!(settings.abs_tol > 0.0) || !(settings.rel_tol > 0.0) || settings.max_iter < 1)
        throw std::invalid_argument("solve_bracketed: abs_tol, rel_tol must be > 0 and max_iter >= 1");

    double a = bracket.lo;
    double b = bracket.hi;
    double fa = f(a);
    double fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fb))
        throw BracketError(a, b, fa, fb, "non-finite endpoint value");
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw BracketError(a, b, fa, fb, "endpoints have the same sign");

    double c = a;
    double fc = fa;
    double d = b - a;
    double e = d;
    for (int iter = 0; iter < settings.max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 0.5 * (settings.abs_tol + settings.rel_tol * std::abs(b)) +
                            2.0 * std::numeric_limits<double>::epsilon() * std::abs(b);
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            const double s = fb / fa;
            double p;
            double q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if (!std::isfinite(fb))
            throw ConvergenceError("solve_bracketed: non-finite value at z=" + std::to_string(b));
    }
    throw ConvergenceError("solve_bracketed: max_iter=" + std::to_string(settings.max_iter) +
                           " exceeded");
}

/// Composite Simpson rule on [a, b] with n subintervals (n even, >= 2).
template <class F>
double integrate(F&& f, double a, double b, int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("integrate: n must be even and >= 2");
    if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 != 0 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

/// Symmetric difference quotient (f(x+h) - f(x-h)) / 2h.
template <class F>
double central_diff(F&& f, double x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("central_diff: h must be > 0");
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Second difference quotient (f(x+h) - 2 f(x) + f(x-h)) / h^2.
template <class F>
double second_central_diff(F&& f, double x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("second_central_diff: h must be > 0");
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace stefan::numerics
