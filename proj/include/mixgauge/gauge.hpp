#pragma once

/**
 * Mixed gauge h_lambda(r) = r^n + lambda * r^(n-1) and its algebraic
 * identities.  All arithmetic is double precision; the factored form
 * r^(n-1) * (r + lambda) is used throughout so both sides of the scaling
 * identity round the same way.
 */

#include <cmath>
#include <limits>

#include "mixgauge/errors.hpp"

namespace mixgauge {

struct GaugeParams {
    int n = 2;           // ambient dimension, >= 1
    double lambda = 0.0; // surface penalty weight, >= 0, units of length
};

inline void validate_gauge(const GaugeParams& p) {
    if (p.n < 1)
        throw domain_error("GaugeParams: dimension n must be >= 1");
    if (!(p.lambda >= 0.0) || !std::isfinite(p.lambda))
        throw domain_error("GaugeParams: lambda must be finite and >= 0");
}

namespace detail {

// r^k by repeated multiplication; k is tiny (<= n), std::pow would add noise.
inline double ipow(double r, int k) {
    double acc = 1.0;
    for (int i = 0; i < k; ++i) acc *= r;
    return acc;
}

} // namespace detail

/// h_lambda(r).  Gauge convention: h(0) = 0, even at n = 1 where the map is
/// discontinuous at the origin (r + lambda for r > 0, 0 at r = 0).
inline double evaluate(const GaugeParams& p, double r) {
    validate_gauge(p);
    if (!std::isfinite(r) || r < 0.0)
        throw domain_error("gauge::evaluate: r must be finite and >= 0");
    if (r == 0.0) return 0.0;
    return detail::ipow(r, p.n - 1) * (r + p.lambda);
}

/// h_lambda(t*r) - t^n * h_{lambda/t}(r).  Zero in exact arithmetic; the
/// contract is |residual| <= 8 * eps * h_lambda(t*r).
inline double scale_identity_residual(const GaugeParams& p, double t, double r) {
    validate_gauge(p);
    if (!(t > 0.0) || !std::isfinite(t))
        throw domain_error("gauge::scale_identity_residual: t must be finite and > 0");
    if (!std::isfinite(r) || r < 0.0)
        throw domain_error("gauge::scale_identity_residual: r must be finite and >= 0");
    const double lhs = evaluate(p, t * r);
    const GaugeParams scaled{p.n, p.lambda / t};
    const double rhs = detail::ipow(t, p.n) * evaluate(scaled, r);
    return lhs - rhs;
}

} // namespace mixgauge
