// twobath.hpp: one oscillator coupled symmetrically to two thermal bath oscillators
//
// H = w (a^+a + b^+b + c^+c) + g(t)(a b^+ + a^+ b + a c^+ + a^+ c).
// a(t) = c_a a + c_b b + c_c c with c_a = e^{-i w t} cos(sqrt2 G),
// c_b = c_c = -(i/sqrt2) e^{-i w t} sin(sqrt2 G).

#pragma once

#include <cmath>

#include "tdcoupling/bath.hpp"
#include "tdcoupling/coupling.hpp"
#include "tdcoupling/numerics.hpp"

namespace tdc::twobath {

struct Scenario {
    double omega = 1.0;
    CouplingProfile profile;
    BathSpec bath1 = BathSpec::zero_temperature();
    BathSpec bath2 = BathSpec::zero_temperature();
    double initial_occupation = 0.0;  // <a^+ a> at t = 0
};

struct ModeCoefficients {
    Complex a;
    Complex b;
    Complex c;
};

namespace detail {

inline void validate(const Scenario& s, double t) {
    tdc::detail::require(s.omega > 0.0 && std::isfinite(s.omega), "twobath: omega must be positive");
    tdc::detail::require(s.initial_occupation >= 0.0, "twobath: initial occupation must be nonnegative");
    tdc::detail::require(t >= 0.0 && std::isfinite(t), "twobath: time must be finite and >= 0");
}

inline double rotation_angle(const Scenario& s, double t) { return std::sqrt(2.0) * s.profile.integral(t); }

} // namespace detail

inline ModeCoefficients mode_coefficients(const Scenario& s, double t) {
    detail::validate(s, t);
    const double angle = detail::rotation_angle(s, t);
    const Complex phase = std::polar(1.0, -s.omega * t);
    const Complex side = -kI * (std::sqrt(2.0) / 2.0) * phase * std::sin(angle);
    return {phase * std::cos(angle), side, side};
}

// <a^+ a>(t) = cos^2(sqrt2 G) <a^+a>_0 + sin^2(sqrt2 G) (nbar_1 + nbar_2) / 2.
inline double occupation(const Scenario& s, double t) {
    detail::validate(s, t);
    const double angle = detail::rotation_angle(s, t);
    const double c2 = std::cos(angle) * std::cos(angle);
    const double s2 = std::sin(angle) * std::sin(angle);
    return c2 * s.initial_occupation + 0.5 * s2 * (s.bath1.nbar() + s.bath2.nbar());
}

// w cos^2(sqrt2 G) <a^+a>_0 + (w/4) sin^2(sqrt2 G) (coth(b1 w/2) + coth(b2 w/2)).
// This carries no zero-point term at t = 0 and the full w/2 once sin^2 = 1,
// so it equals w * occupation(t) + (w/2) sin^2(sqrt2 G).
inline double energy(const Scenario& s, double t) {
    detail::validate(s, t);
    const double angle = detail::rotation_angle(s, t);
    const double c2 = std::cos(angle) * std::cos(angle);
    const double s2 = std::sin(angle) * std::sin(angle);
    return s.omega * c2 * s.initial_occupation +
           0.25 * s.omega * s2 * (s.bath1.coth_half() + s.bath2.coth_half());
}

// (w/4)(coth(b1 w/2) + coth(b2 w/2)).
inline double steady_state_energy(const Scenario& s) {
    return 0.25 * s.omega * (s.bath1.coth_half() + s.bath2.coth_half());
}

} // namespace tdc::twobath
