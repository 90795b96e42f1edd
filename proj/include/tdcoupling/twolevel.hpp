// twolevel.hpp: dissipative and dephasing two-level systems, trace-distance dynamics
//
// Basis ordering is (excited, ground) for one qubit and |++>, |+->, |-+>, |-->
// for the system (first factor) and twin bath qubit (second factor). A qubit
// state is [[a, conj(c)], [c, b]]: `coherence` is the lower-left entry.

#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "tdcoupling/bath.hpp"
#include "tdcoupling/coupling.hpp"
#include "tdcoupling/error.hpp"
#include "tdcoupling/numerics.hpp"
#include "tdcoupling/quadrature.hpp"

namespace tdc::twolevel {

struct TwoLevelState {
    double excited;    // a
    double ground;     // b
    Complex coherence; // c, lower-left entry

    static constexpr double kTol = 1e-12;

    static TwoLevelState make(double excited, Complex coherence) {
        TwoLevelState s{excited, 1.0 - excited, coherence};
        s.validate();
        return s;
    }

    void validate() const {
        if (!(excited >= -kTol && excited <= 1.0 + kTol) || !(ground >= -kTol && ground <= 1.0 + kTol))
            throw DomainError("TwoLevelState: populations must lie in [0, 1]");
        if (std::abs(excited + ground - 1.0) > kTol) throw DomainError("TwoLevelState: populations must sum to 1");
        const double bloch = (excited - ground) * (excited - ground) + 4.0 * std::norm(coherence);
        if (bloch > 1.0 + 1e-10) throw DomainError("TwoLevelState: outside the Bloch ball");
    }

    ComplexMatrix matrix() const {
        ComplexMatrix m(2, 2);
        m << excited, std::conj(coherence), coherence, ground;
        return m;
    }

    static TwoLevelState from_matrix(const ComplexMatrix& m) {
        detail::require(m.rows() == 2 && m.cols() == 2, "TwoLevelState::from_matrix: expected 2x2");
        TwoLevelState s{m(0, 0).real(), m(1, 1).real(), m(1, 0)};
        s.validate();
        return s;
    }
};

struct QubitBathSpec {
    double p_e;
    double p_g;

    static QubitBathSpec make(double p_e) {
        detail::require(p_e >= 0.0 && p_e <= 1.0, "QubitBathSpec: p_e must lie in [0, 1]");
        return {p_e, 1.0 - p_e};
    }
    static QubitBathSpec ground_state() { return make(0.0); }
};

struct DephasingScenario {
    double omega0 = 1.0;  // qubit splitting
    double omega = 1.0;   // bosonic mode frequency
    CouplingProfile profile;
    BathSpec bath = BathSpec::zero_temperature();  // beta * omega of the mode
};

namespace detail {

inline void check_time(double t) {
    tdc::detail::require(t >= 0.0 && std::isfinite(t), "twolevel: time must be finite and >= 0");
}

// g(t) sin 2G(t), finite at t = 0 even when g(t) diverges there.
inline double strength_times_sin2g(const CouplingProfile& profile, double t) {
    if (const auto* lm = std::get_if<LindbladMatchedCoupling>(&profile.kind())) {
        return lm->gamma * std::exp(-lm->gamma * t);
    }
    return profile.strength(t) * std::sin(2.0 * profile.integral(t));
}

} // namespace detail

// 4x4 propagator of the twin-qubit exchange Hamiltonian.
inline ComplexMatrix evolution_matrix(double omega0, const CouplingProfile& profile, double t) {
    detail::check_time(t);
    const double G = profile.integral(t);
    ComplexMatrix w = ComplexMatrix::Zero(4, 4);
    w(0, 0) = std::polar(1.0, -omega0 * t);
    w(1, 1) = std::cos(G);
    w(1, 2) = -kI * std::sin(G);
    w(2, 1) = -kI * std::sin(G);
    w(2, 2) = std::cos(G);
    w(3, 3) = std::polar(1.0, omega0 * t);
    return w;
}

// Reduced system state after exchanging with a diagonal twin-qubit bath.
inline TwoLevelState reduced_qubit(const TwoLevelState& initial, const QubitBathSpec& bath, double omega0,
                                   const CouplingProfile& profile, double t) {
    detail::check_time(t);
    const double G = profile.integral(t);
    const double c = std::cos(G), s = std::sin(G);
    return TwoLevelState{initial.excited * c * c + bath.p_e * s * s, initial.ground * c * c + bath.p_g * s * s,
                         initial.coherence * std::polar(1.0, omega0 * t) * c};
}

// xi(t) = -i * integral_0^t g(t') e^{-i w t'} dt'. Closed form for the
// exponential profile; otherwise integrated by parts against G so that a
// divergent g(0) never has to be evaluated:
//   integral g e^{-iwt'} = G(t) e^{-iwt} + i w integral G(t') e^{-iwt'}.
inline Complex dephasing_xi(const DephasingScenario& s, double t) {
    detail::check_time(t);
    tdc::detail::require(s.omega > 0.0, "dephasing: mode frequency must be positive");
    if (t == 0.0) return {0.0, 0.0};
    if (const auto* ex = std::get_if<ExponentialCoupling>(&s.profile.kind())) {
        const Complex z{ex->gamma, s.omega};
        return -kI * ex->g0 * (1.0 - std::exp(-z * t)) / z;
    }
    const int panels = 1 + static_cast<int>(std::ceil(s.omega * t / kPi));
    const Complex tail = quad::integrate_complex(
        [&](double u) { return s.profile.integral(u) * std::polar(1.0, -s.omega * u); }, 0.0, t, panels);
    const Complex integral = s.profile.integral(t) * std::polar(1.0, -s.omega * t) + kI * s.omega * tail;
    return -kI * integral;
}

// exp(-2 |xi|^2 coth(beta w / 2)): multiplies the coherence.
inline double dephasing_factor(const DephasingScenario& s, double t) {
    return std::exp(-2.0 * std::norm(dephasing_xi(s, t)) * s.bath.coth_half());
}

// |rho_12(t) / rho_12(0)|^2.
inline double coherence_ratio_squared(const DephasingScenario& s, double t) {
    const double f = dephasing_factor(s, t);
    return f * f;
}

inline TwoLevelState dephasing_reduced(const TwoLevelState& initial, const DephasingScenario& s, double t) {
    const double factor = dephasing_factor(s, t);
    return TwoLevelState{initial.excited, initial.ground,
                         initial.coherence * factor * std::polar(1.0, s.omega0 * t)};
}

// 2x2 closed form of the trace distance: sqrt(da^2 + |dc|^2).
inline double trace_distance(const TwoLevelState& r1, const TwoLevelState& r2) {
    const double da = r1.excited - r2.excited;
    return std::sqrt(da * da + std::norm(r1.coherence - r2.coherence));
}

inline double evolved_trace_distance(const TwoLevelState& r1, const TwoLevelState& r2, const QubitBathSpec&,
                                     double, const CouplingProfile& profile, double t) {
    detail::check_time(t);
    const double c = std::cos(profile.integral(t));
    const double da2 = (r1.excited - r2.excited) * (r1.excited - r2.excited);
    const double dc2 = std::norm(r1.coherence - r2.coherence);
    return std::sqrt(da2 * c * c * c * c + dc2 * c * c);
}

// d/dt of evolved_trace_distance:
//   -g sin(2G) (2 da^2 cos^2 G + |dc|^2) / (2 D).
// Zero where D vanishes (identical trajectories, or the removable point G = pi/2).
inline double markov_rate(const TwoLevelState& r1, const TwoLevelState& r2, const QubitBathSpec& bath, double omega0,
                          const CouplingProfile& profile, double t) {
    const double distance = evolved_trace_distance(r1, r2, bath, omega0, profile, t);
    if (distance == 0.0) return 0.0;
    const double c = std::cos(profile.integral(t));
    const double da2 = (r1.excited - r2.excited) * (r1.excited - r2.excited);
    const double dc2 = std::norm(r1.coherence - r2.coherence);
    return -detail::strength_times_sin2g(profile, t) * (2.0 * da2 * c * c + dc2) / (2.0 * distance);
}

} // namespace tdc::twolevel
