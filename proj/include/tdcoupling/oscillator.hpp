// oscillator.hpp: one oscillator exchanging quanta with a single bath oscillator
//
// H = w0 a^+a + w0 b^+b + g(t)(a b^+ + a^+ b). In the Heisenberg picture
// a(t) = f(t) a + h(t) b with f = e^{-i w0 t} cos G(t), h = -i e^{-i w0 t} sin G(t);
// all results below follow from these two coefficients.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "tdcoupling/bath.hpp"
#include "tdcoupling/coupling.hpp"
#include "tdcoupling/error.hpp"
#include "tdcoupling/numerics.hpp"

namespace tdc::oscillator {

struct ThermalInitial {
    BathSpec state;  // occupation of the main oscillator at t = 0
};

struct CoherentInitial {
    Complex alpha0;
};

struct Scenario {
    double omega0 = 1.0;
    CouplingProfile profile;
    BathSpec bath = BathSpec::zero_temperature();
    std::variant<ThermalInitial, CoherentInitial> initial = CoherentInitial{Complex{0.0, 0.0}};
    double mass = 1.0;  // only position() uses it
};

struct MixingCoefficients {
    Complex f;
    Complex h;
};

struct HeatDistribution {
    double omega0;
    int kmax;
    std::vector<double> probs;  // probs[i] is the weight of Q = (i - kmax) * omega0
    double raw_total = 0.0;     // sum of the inverted weights before clipping and renormalising
    double raw_min = 0.0;       // smallest inverted weight before clipping

    int k_at(std::size_t i) const { return static_cast<int>(i) - kmax; }
    double probability(int k) const {
        return (k < -kmax || k > kmax) ? 0.0 : probs[static_cast<std::size_t>(k + kmax)];
    }
    double mean() const {
        double m = 0.0;
        for (std::size_t i = 0; i < probs.size(); ++i) m += k_at(i) * omega0 * probs[i];
        return m;
    }
};

namespace detail {

inline void validate(const Scenario& s, double t) {
    tdc::detail::require(s.omega0 > 0.0 && std::isfinite(s.omega0), "oscillator: omega0 must be positive");
    tdc::detail::require(s.mass > 0.0, "oscillator: mass must be positive");
    tdc::detail::require(t >= 0.0 && std::isfinite(t), "oscillator: time must be finite and >= 0");
}

inline const BathSpec& thermal_initial(const Scenario& s, const char* who) {
    const auto* th = std::get_if<ThermalInitial>(&s.initial);
    if (!th) throw DomainError(std::string(who) + ": requires a thermal initial state");
    return th->state;
}

inline Complex coherent_initial(const Scenario& s, const char* who) {
    const auto* co = std::get_if<CoherentInitial>(&s.initial);
    if (!co) throw DomainError(std::string(who) + ": requires a coherent initial state");
    return co->alpha0;
}

// (cos^2 G, sin^2 G) at time t.
inline std::pair<double, double> weights(const Scenario& s, double t) {
    const double G = s.profile.integral(t);
    const double c = std::cos(G), sn = std::sin(G);
    return {c * c, sn * sn};
}

} // namespace detail

inline MixingCoefficients mixing_coefficients(const Scenario& s, double t) {
    detail::validate(s, t);
    const double G = s.profile.integral(t);
    const Complex phase = std::polar(1.0, -s.omega0 * t);
    return {phase * std::cos(G), -kI * phase * std::sin(G)};
}

// |f|^2 nbar_a + |h|^2 nbar_b: the mean occupation of the main oscillator.
inline double mean_occupation(const Scenario& s, double t) {
    detail::validate(s, t);
    const BathSpec& a = detail::thermal_initial(s, "mean_occupation");
    const auto [f2, h2] = detail::weights(s, t);
    return f2 * a.nbar() + h2 * s.bath.nbar();
}

// P_n(t) = lambda^n / (lambda + 1)^(n + 1), lambda = mean_occupation.
inline double population(const Scenario& s, int n, double t) {
    tdc::detail::require(n >= 0, "population: level index must be nonnegative");
    const double lambda = mean_occupation(s, t);
    if (n == 0) return 1.0 / (lambda + 1.0);
    if (lambda == 0.0) return 0.0;
    return std::exp(n * std::log(lambda / (lambda + 1.0)) - std::log1p(lambda));
}

// Husimi Q(alpha, t) of the reduced state for a coherent initial state.
inline double husimi(const Scenario& s, Complex alpha, double t) {
    detail::validate(s, t);
    const Complex alpha0 = detail::coherent_initial(s, "husimi");
    const MixingCoefficients c = mixing_coefficients(s, t);
    const double width = 1.0 + std::norm(c.h) * s.bath.nbar();
    return std::exp(-std::norm(alpha - c.f * alpha0) / width) / (kPi * width);
}

// Location of the Husimi maximum, alpha0 e^{-i w0 t} cos G(t).
inline Complex husimi_peak(const Scenario& s, double t) {
    detail::validate(s, t);
    return mixing_coefficients(s, t).f * detail::coherent_initial(s, "husimi_peak");
}

// <x>(t) = sqrt(2/(m w0)) |alpha0| cos G cos(w0 t - arg alpha0).
inline double position(const Scenario& s, double t) {
    detail::validate(s, t);
    const Complex alpha0 = detail::coherent_initial(s, "position");
    const double x0 = std::sqrt(2.0 / (s.mass * s.omega0));
    return x0 * std::abs(alpha0) * std::cos(s.profile.integral(t)) * std::cos(s.omega0 * t - std::arg(alpha0));
}

// E(t) = w0/2 + w0 (|alpha0|^2 cos^2 G + nbar_b sin^2 G).
inline double energy(const Scenario& s, double t) {
    detail::validate(s, t);
    const Complex alpha0 = detail::coherent_initial(s, "energy");
    const auto [f2, h2] = detail::weights(s, t);
    return 0.5 * s.omega0 + s.omega0 * (std::norm(alpha0) * f2 + s.bath.nbar() * h2);
}

// Characteristic function of the two-point-measurement heat distribution,
// both oscillators initially thermal. The prefactor exp(-beta_1 w0) is
// carried as nbar_a/(nbar_a + 1) so that beta_1 = inf is exact.
inline Complex heat_characteristic(const Scenario& s, double mu, double t) {
    detail::validate(s, t);
    tdc::detail::require(std::isfinite(mu), "heat_characteristic: mu must be finite");
    const BathSpec& a = detail::thermal_initial(s, "heat_characteristic");
    const double h2 = detail::weights(s, t).second;
    const double nb = s.bath.nbar();
    const double q = a.boltzmann_ratio();
    const Complex x = std::polar(1.0, mu * s.omega0);
    const Complex denom = x * ((1.0 + h2 * nb) - h2 * nb * x + (h2 * (nb + 1.0) - 1.0) * q) - h2 * (nb + 1.0) * q;
    return (1.0 - q) * x / denom;
}

// Heat distribution on the ladder Q = k w0, |k| <= kmax, by inverting the
// 2 pi / w0 periodic characteristic function with a (2 kmax + 1)-point DFT.
inline HeatDistribution heat_distribution(const Scenario& s, double t, int kmax, double boundary_tol = 1e-12) {
    tdc::detail::require(kmax >= 1, "heat_distribution: kmax must be positive");
    detail::thermal_initial(s, "heat_distribution");
    const int m = 2 * kmax + 1;
    std::vector<Complex> samples(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) samples[j] = heat_characteristic(s, 2.0 * kPi * j / (m * s.omega0), t);

    std::vector<Complex> twiddle(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) twiddle[r] = std::polar(1.0, -2.0 * kPi * r / m);

    HeatDistribution out{s.omega0, kmax, std::vector<double>(static_cast<std::size_t>(m))};
    for (int k = -kmax; k <= kmax; ++k) {
        Complex acc{0.0, 0.0};
        const int kk = ((k % m) + m) % m;
        for (int j = 0; j < m; ++j) acc += twiddle[static_cast<std::size_t>((j * kk) % m)] * samples[j];
        out.probs[static_cast<std::size_t>(k + kmax)] = acc.real() / m;
    }

    const double edge = std::max(std::abs(out.probs.front()), std::abs(out.probs.back()));
    if (edge > boundary_tol)
        throw TruncationError("heat_distribution: boundary probability " + tdc::detail::show(edge) +
                              " exceeds tolerance; increase kmax");
    out.raw_min = *std::min_element(out.probs.begin(), out.probs.end());
    double total = 0.0;
    for (double p : out.probs) out.raw_total += p;
    for (double& p : out.probs) {
        if (p < -1e-10) throw NumericalError("heat_distribution: negative probability " + tdc::detail::show(p));
        p = std::max(p, 0.0);
        total += p;
    }
    for (double& p : out.probs) p /= total;
    return out;
}

} // namespace tdc::oscillator
