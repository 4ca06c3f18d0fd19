#pragma once

// Thin RAII layer over the GSL adaptive integrators used by the oracle.

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <type_traits>
#include <vector>

#include "cuqoe/errors.hpp"

namespace cuqoe::detail {

struct QuadratureValue {
    double value = 0.0;
    double error = 0.0;
};

inline void disable_gsl_abort() {
    static std::once_flag once;
    std::call_once(once, [] { gsl_set_error_handler_off(); });
}

class IntegrationWorkspace {
public:
    explicit IntegrationWorkspace(std::size_t limit)
        : limit_(limit), ws_(gsl_integration_workspace_alloc(limit)) {
        if (!ws_) {
            throw std::bad_alloc();
        }
    }

    gsl_integration_workspace* get() const noexcept { return ws_.get(); }
    std::size_t limit() const noexcept { return limit_; }

private:
    struct Free {
        void operator()(gsl_integration_workspace* w) const noexcept { gsl_integration_workspace_free(w); }
    };
    std::size_t limit_;
    std::unique_ptr<gsl_integration_workspace, Free> ws_;
};

template <class F>
double trampoline(double x, void* params) {
    return (*static_cast<F*>(params))(x);
}

inline void check_status(int status, const char* what) {
    if (status != GSL_SUCCESS) {
        throw ConvergenceError(std::string(what) + ": " + gsl_strerror(status));
    }
}

/// Adaptive Gauss-Kronrod (61 point rule) on a finite interval.
template <class F>
QuadratureValue integrate_qag(F&& f, double lo, double hi, double abs_tol, double rel_tol,
                              IntegrationWorkspace& ws) {
    disable_gsl_abort();
    using Fn = std::remove_reference_t<F>;
    gsl_function gf{&trampoline<Fn>, const_cast<void*>(static_cast<const void*>(&f))};
    QuadratureValue out;
    const int status = gsl_integration_qag(&gf, lo, hi, abs_tol, rel_tol, ws.limit(), GSL_INTEG_GAUSS61, ws.get(),
                                           &out.value, &out.error);
    check_status(status, "gsl_integration_qag");
    return out;
}

/// Adaptive integration over the whole real line.
template <class F>
QuadratureValue integrate_qagi(F&& f, double abs_tol, double rel_tol, IntegrationWorkspace& ws) {
    disable_gsl_abort();
    using Fn = std::remove_reference_t<F>;
    gsl_function gf{&trampoline<Fn>, const_cast<void*>(static_cast<const void*>(&f))};
    QuadratureValue out;
    const int status = gsl_integration_qagi(&gf, abs_tol, rel_tol, ws.limit(), ws.get(), &out.value, &out.error);
    check_status(status, "gsl_integration_qagi");
    return out;
}

/// Adaptive integration over [lo, +inf).
template <class F>
QuadratureValue integrate_qagiu(F&& f, double lo, double abs_tol, double rel_tol, IntegrationWorkspace& ws) {
    disable_gsl_abort();
    using Fn = std::remove_reference_t<F>;
    gsl_function gf{&trampoline<Fn>, const_cast<void*>(static_cast<const void*>(&f))};
    QuadratureValue out;
    const int status =
        gsl_integration_qagiu(&gf, lo, abs_tol, rel_tol, ws.limit(), ws.get(), &out.value, &out.error);
    check_status(status, "gsl_integration_qagiu");
    return out;
}

/// Adaptive integration over (-inf, hi].
template <class F>
QuadratureValue integrate_qagil(F&& f, double hi, double abs_tol, double rel_tol, IntegrationWorkspace& ws) {
    disable_gsl_abort();
    using Fn = std::remove_reference_t<F>;
    gsl_function gf{&trampoline<Fn>, const_cast<void*>(static_cast<const void*>(&f))};
    QuadratureValue out;
    const int status =
        gsl_integration_qagil(&gf, hi, abs_tol, rel_tol, ws.limit(), ws.get(), &out.value, &out.error);
    check_status(status, "gsl_integration_qagil");
    return out;
}

/// Real line split at the given ascending breakpoints: semi-infinite tails
/// outside, Gauss-Kronrod panels between consecutive points.
template <class F>
QuadratureValue integrate_real_line(F&& f, const std::vector<double>& pts, double abs_tol, double rel_tol,
                                    IntegrationWorkspace& ws) {
    QuadratureValue total = integrate_qagil(f, pts.front(), abs_tol, rel_tol, ws);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto panel = integrate_qag(f, pts[i], pts[i + 1], abs_tol, rel_tol, ws);
        total.value += panel.value;
        total.error += panel.error;
    }
    const auto upper = integrate_qagiu(f, pts.back(), abs_tol, rel_tol, ws);
    total.value += upper.value;
    total.error += upper.error;
    return total;
}

}  // namespace cuqoe::detail
