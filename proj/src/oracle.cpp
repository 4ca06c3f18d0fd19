#include "cuqoe/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "cuqoe/errors.hpp"
#include "cuqoe/units.hpp"
#include "detail/gsl_quadrature.hpp"

namespace cuqoe {

namespace {

using detail::IntegrationWorkspace;

// The truncated interval is split at these points so that the sharp
// structure at m = 0 and the two pole scales sit on panel boundaries.
std::vector<double> breakpoints(double half_range, double duration, double pole_scale, double eta) {
    std::vector<double> pts{-half_range, 0.0, half_range};
    for (double s : {duration, pole_scale, 20.0 * eta}) {
        if (s < half_range) {
            pts.push_back(s);
            pts.push_back(-s);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

void QuadratureSpec::validate() const {
    if (eta_schedule.empty()) {
        throw ConfigError("QuadratureSpec: eta schedule is empty");
    }
    for (std::size_t i = 0; i < eta_schedule.size(); ++i) {
        if (!(eta_schedule[i] > 0.0)) {
            throw ConfigError("QuadratureSpec: eta values must be positive");
        }
        if (i > 0 && !(eta_schedule[i] < eta_schedule[i - 1])) {
            throw ConfigError("QuadratureSpec: eta schedule must be strictly decreasing");
        }
    }
    if (half_range && !(*half_range > 0.0)) {
        throw ConfigError("QuadratureSpec: half range must be positive");
    }
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(extrapolation_tol > 0.0)) {
        throw ConfigError("QuadratureSpec: tolerances must be positive");
    }
    if (max_subdivisions < 1) {
        throw ConfigError("QuadratureSpec: max_subdivisions must be at least 1");
    }
}

QuadratureSpec QuadratureSpec::for_scale(double scale) {
    if (!(scale > 0.0)) {
        throw ConfigError("QuadratureSpec::for_scale: scale must be positive");
    }
    QuadratureSpec spec;
    for (double& eta : spec.eta_schedule) {
        eta *= scale;
    }
    return spec;
}

QuadratureSpec QuadratureSpec::for_query(const ResponseQuery& query) {
    return for_scale(std::min({1.0, query.duration, query.pole_scale()}));
}

QuadratureEstimate response_quadrature(const ResponseQuery& query, double eta, const QuadratureSpec& spec) {
    spec.validate();
    if (!(eta > 0.0)) {
        throw DomainError("response_quadrature: eta must be positive");
    }
    if (!(query.duration > 0.0) || !(query.acceleration > 0.0)) {
        throw DomainError("response_quadrature: duration and acceleration must be positive");
    }
    const double t = query.duration;
    const double b = query.pole_scale();
    const double energy = query.energy;
    const double widest = std::max(t, b);
    const double half_range = spec.half_range.value_or(50.0 * widest);
    if (!(half_range > 10.0 * widest)) {
        throw ConfigError("response_quadrature: half range must exceed 10 * max(T, sqrt(12)/a)");
    }

    // -(T^3 / 16 pi)(12 / a^2) = -T^3 b^2 / (16 pi)
    const double prefactor = -t * t * t * b * b / (16.0 * units::pi);
    const auto integrand = [=](double m) {
        const std::complex<double> shifted(m, -eta);
        const std::complex<double> phase(std::cos(energy * m), -std::sin(energy * m));
        return prefactor * phase / ((m * m + t * t) * shifted * shifted * (m * m + b * b));
    };
    const auto re_part = [&](double m) { return integrand(m).real(); };
    const auto im_part = [&](double m) { return integrand(m).imag(); };

    IntegrationWorkspace ws(spec.max_subdivisions);
    const auto pts = breakpoints(half_range, t, b, eta);
    const double panel_abs_tol = spec.abs_tol / static_cast<double>(pts.size() - 1);
    double re = 0.0;
    double im = 0.0;
    double err = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto r = detail::integrate_qag(re_part, pts[i], pts[i + 1], panel_abs_tol, spec.rel_tol, ws);
        const auto j = detail::integrate_qag(im_part, pts[i], pts[i + 1], panel_abs_tol, spec.rel_tol, ws);
        re += r.value;
        im += j.value;
        err += r.error + j.error;
    }
    // |integrand| <= |prefactor| / m^6, so each tail is below |prefactor| / (5 M^5).
    const double tail = 2.0 * std::abs(prefactor) / (5.0 * std::pow(half_range, 5));
    return {{re, im}, err + tail};
}

ExtrapolatedResponse response_extrapolated(const ResponseQuery& query, const QuadratureSpec& spec) {
    spec.validate();
    const std::size_t n = spec.eta_schedule.size();
    if (n < 3) {
        throw ConfigError("response_extrapolated: need at least three eta values");
    }

    ExtrapolatedResponse out{};
    out.etas = spec.eta_schedule;
    out.samples.reserve(n);
    std::vector<double> quad_err;
    quad_err.reserve(n);
    for (double eta : spec.eta_schedule) {
        const auto q = response_quadrature(query, eta, spec);
        out.samples.push_back(q.value);
        quad_err.push_back(q.error);
    }

    const int degree = static_cast<int>(std::min<std::size_t>(2, n - 1));
    const double eta_max = spec.eta_schedule.front();
    Eigen::MatrixXd vandermonde(n, degree + 1);
    Eigen::VectorXd re(n);
    Eigen::VectorXd im(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = spec.eta_schedule[i] / eta_max;
        double xp = 1.0;
        for (int k = 0; k <= degree; ++k) {
            vandermonde(static_cast<Eigen::Index>(i), k) = xp;
            xp *= x;
        }
        re(static_cast<Eigen::Index>(i)) = out.samples[i].real();
        im(static_cast<Eigen::Index>(i)) = out.samples[i].imag();
    }
    const Eigen::MatrixXd pinv = vandermonde.completeOrthogonalDecomposition().pseudoInverse();
    // Value at eta = 0 is the constant coefficient: a fixed linear
    // combination of the samples.
    const Eigen::VectorXd weights = pinv.row(0).transpose();
    const Eigen::VectorXd residual = re - vandermonde * (pinv * re);

    out.value = weights.dot(re);
    out.imag = weights.dot(im);
    const double weight_norm = weights.cwiseAbs().sum();
    double propagated = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        propagated += std::abs(weights(static_cast<Eigen::Index>(i))) * quad_err[i];
    }
    const double max_residual = residual.cwiseAbs().maxCoeff();
    out.error = propagated + weight_norm * max_residual;
    if (n > 3) {
        // Spread against the interpolant through the three smallest regulators
        // tracks the unresolved higher-order eta dependence.
        const auto& e = spec.eta_schedule;
        const std::size_t k = n - 3;
        double lagrange_at_zero = 0.0;
        for (std::size_t i = k; i < n; ++i) {
            double w = 1.0;
            for (std::size_t j = k; j < n; ++j) {
                if (j != i) {
                    w *= e[j] / (e[j] - e[i]);
                }
            }
            lagrange_at_zero += w * out.samples[i].real();
        }
        out.error += std::abs(lagrange_at_zero - out.value);
    }

    const double fit_tol = spec.extrapolation_tol * std::abs(out.value) + spec.abs_tol;
    if (max_residual > 10.0 * fit_tol) {
        throw ExtrapolationError("response_extrapolated: eta fit residual " + std::to_string(max_residual) +
                                 " exceeds 10x tolerance at E=" + std::to_string(query.energy) +
                                 " T=" + std::to_string(query.duration) + " a=" + std::to_string(query.acceleration));
    }
    if (std::abs(out.imag) > std::max(out.error, 1e-4 * std::abs(out.value) + 1e-8)) {
        throw ExtrapolationError("response_extrapolated: imaginary part " + std::to_string(out.imag) +
                                 " does not vanish in the eta -> 0 limit");
    }
    return out;
}

ReductionCheck lorentzian_reduction_check(const std::function<double(double)>& kernel, double duration) {
    if (!(duration > 0.0)) {
        throw DomainError("lorentzian_reduction_check: duration must be positive");
    }
    const double half_sq = 0.25 * duration * duration;
    const auto window = [half_sq](double tau) { return half_sq / (tau * tau + half_sq); };

    // The inner integrand has structure both at tau' = 0 (window) and at
    // tau' = tau (kernel); a single infinite-range transform misses the second
    // bump once |tau| is large, so both locations become breakpoints.
    const double width = std::max(1.0, duration);
    IntegrationWorkspace outer_ws(2000);
    IntegrationWorkspace inner_ws(2000);
    const auto inner = [&](double tau) {
        const auto f = [&](double tau_p) { return window(tau_p) * kernel(tau - tau_p); };
        std::vector<double> pts{std::min(0.0, tau) - width, 0.0, tau, std::max(0.0, tau) + width};
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        return detail::integrate_real_line(f, pts, 1e-15, 1e-12, inner_ws).value;
    };
    const auto outer = [&](double tau) { return window(tau) * inner(tau); };
    const double lhs = detail::integrate_real_line(outer, {-width, 0.0, width}, 1e-14, 1e-11, outer_ws).value;

    IntegrationWorkspace single_ws(2000);
    const double t2 = duration * duration;
    const auto single = [&](double m) { return kernel(m) / (m * m + t2); };
    const double integral = detail::integrate_real_line(single, {-width, 0.0, width}, 1e-15, 1e-12, single_ws).value;
    const double rhs = units::pi * duration * duration * duration / 4.0 * integral;
    return {lhs, rhs};
}

}  // namespace cuqoe
