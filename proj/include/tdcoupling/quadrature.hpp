// quadrature.hpp: adaptive integration of real and complex integrands

#pragma once

#include <cmath>
#include <complex>
#include <functional>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "tdcoupling/error.hpp"

namespace tdc::quad {

// Integral over [a, b] split into `pieces` equal panels, each integrated by
// tanh-sinh refinement until successive levels agree to `tol`. The rule never
// samples a panel endpoint and converges quickly for endpoint singularities
// such as sqrt(t) behaviour at t = 0.
template <class F>
double integrate(F&& f, double a, double b, int pieces = 1, double tol = 1e-12) {
    detail::require(b >= a, "integrate: reversed interval");
    if (a == b) return 0.0;
    pieces = std::max(pieces, 1);
    const double width = (b - a) / pieces;
    boost::math::quadrature::tanh_sinh<double> rule;
    double total = 0.0;
    for (int i = 0; i < pieces; ++i) {
        const double lo = a + i * width;
        const double hi = (i + 1 == pieces) ? b : lo + width;
        total += rule.integrate(f, lo, hi, tol);
    }
    return total;
}

template <class F>
std::complex<double> integrate_complex(F&& f, double a, double b, int pieces = 1, double tol = 1e-12) {
    const double re = integrate([&](double x) { return f(x).real(); }, a, b, pieces, tol);
    const double im = integrate([&](double x) { return f(x).imag(); }, a, b, pieces, tol);
    return {re, im};
}

} // namespace tdc::quad
