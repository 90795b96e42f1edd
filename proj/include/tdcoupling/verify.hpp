// verify.hpp: differential verification suite
//
// Each group evolves a truncated model with one of the oracle backends and
// compares it, quantity by quantity, with the closed forms. The output is a
// flat list of comparison records; nothing in it depends on wall-clock time
// or the environment, so repeated runs serialise to identical bytes.

#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <json.hpp>

#include "tdcoupling/bath.hpp"
#include "tdcoupling/coupling.hpp"
#include "tdcoupling/error.hpp"
#include "tdcoupling/numerics.hpp"
#include "tdcoupling/oracle.hpp"
#include "tdcoupling/oracle_models.hpp"
#include "tdcoupling/oscillator.hpp"
#include "tdcoupling/quadrature.hpp"
#include "tdcoupling/twobath.hpp"
#include "tdcoupling/twolevel.hpp"

namespace tdc::verify {

using oracle::ComparisonRecord;

enum class Suite { standard, fast };

inline Suite parse_suite(const std::string& name) {
    if (name == "default") return Suite::standard;
    if (name == "fast") return Suite::fast;
    throw ConfigError("unknown verification suite '" + name + "' (expected default or fast)");
}

inline std::string suite_name(Suite s) { return s == Suite::standard ? "default" : "fast"; }

// Sizes and parameters of the truncated models. Times are tau = gamma t.
struct Settings {
    double gamma = 0.2;

    Index pair_ncut = 30;
    double pair_nbar_a = 0.8;
    double pair_nbar_b = 0.3;
    Complex alpha0{2.0, 0.0};
    std::vector<double> pair_taus{0.25, 0.5, 1.0, 2.0, 4.0};
    int heat_kmax = 40;

    Index three_ncut = 8;
    double three_nbar_a = 0.15;
    double three_beta_omega_1 = 2.0;
    double three_beta_omega_2 = 3.0;
    std::vector<double> three_taus{0.5, 1.0, 2.0};

    std::vector<double> qubit_taus{0.5, 1.0, 2.0};

    Index dephasing_ncut = 40;
    std::vector<double> dephasing_taus{0.5, 1.0, 3.0};

    static Settings for_suite(Suite suite) {
        Settings s;
        if (suite == Suite::fast) {
            s.pair_ncut = 14;
            s.pair_nbar_a = 0.2;
            s.pair_nbar_b = 0.1;
            s.alpha0 = {1.0, 0.5};
            s.pair_taus = {0.5, 2.0};
            s.three_ncut = 6;
            s.three_nbar_a = 0.05;
            s.three_beta_omega_1 = 3.5;
            s.three_beta_omega_2 = 4.0;
            s.three_taus = {0.5, 2.0};
            s.qubit_taus = {0.5, 2.0};
            s.dephasing_ncut = 30;
            s.dephasing_taus = {0.5, 3.0};
        }
        return s;
    }
};

inline constexpr double kFockTol = 1e-6;
inline constexpr double kQubitTol = 1e-8;
inline constexpr double kQuadratureTol = 1e-10;

struct Report {
    std::string suite;
    std::vector<ComparisonRecord> records;

    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& r : records) n += r.passed() ? 0 : 1;
        return n;
    }
    bool passed() const { return failures() == 0; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["suite"] = suite;
        j["passed"] = passed();
        j["count"] = records.size();
        j["failures"] = failures();
        auto& list = j["records"] = nlohmann::ordered_json::array();
        for (const auto& r : records) list.push_back(r.to_json());
        return j;
    }
};

namespace detail {

class Recorder {
public:
    Recorder(std::vector<ComparisonRecord>& out, std::string scenario) : out_(out), scenario_(std::move(scenario)) {}

    void add(const std::string& quantity, double tau, double analytic, double oracle, double tol) {
        out_.push_back(ComparisonRecord::make(scenario_, quantity, tau, analytic, oracle, tol));
    }
    void add(const std::string& quantity, double tau, Complex analytic, Complex oracle, double tol) {
        add(quantity + ".re", tau, analytic.real(), oracle.real(), tol);
        add(quantity + ".im", tau, analytic.imag(), oracle.imag(), tol);
    }

private:
    std::vector<ComparisonRecord>& out_;
    std::string scenario_;
};

inline std::vector<double> physical_times(const std::vector<double>& taus, double gamma) {
    std::vector<double> t;
    for (double tau : taus) t.push_back(tau / gamma);
    return t;
}

// Stepped propagators at the requested times with the default step count
// rounded up until every time lies on the grid.
inline std::vector<oracle::BlockPropagator> propagators(const oracle::HamiltonianBuilder& h,
                                                        const CouplingProfile& profile,
                                                        const std::vector<double>& times, double max_rate, Index dim) {
    const double t_final = times.back();
    const std::size_t steps =
        oracle::grid_aligned_step_count(times, t_final, oracle::default_step_count(t_final, max_rate));
    return oracle::stepped_propagators(h, &profile, t_final, steps, times, dim);
}

inline std::vector<double> diagonal(const DensityMatrix& rho) {
    std::vector<double> p(static_cast<std::size_t>(rho.dim()));
    for (Index i = 0; i < rho.dim(); ++i) p[static_cast<std::size_t>(i)] = rho(i, i).real();
    return p;
}

// Coherent-state amplitudes <k|alpha> for k < n, without renormalisation:
// exact for overlaps with states supported below the cutoff.
inline ComplexVector coherent_amplitudes(Index n, Complex alpha) {
    ComplexVector v(n);
    Complex amp = std::exp(-0.5 * std::norm(alpha));
    for (Index k = 0; k < n; ++k) {
        v(k) = amp;
        amp *= alpha / std::sqrt(static_cast<double>(k + 1));
    }
    return v;
}

inline std::string short_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

inline double mean_number(const DensityMatrix& rho) {
    double m = 0.0;
    for (Index k = 0; k < rho.dim(); ++k) m += static_cast<double>(k) * rho(k, k).real();
    return m;
}

inline Complex mean_annihilation(const DensityMatrix& rho) {
    Complex m{0.0, 0.0};
    for (Index k = 1; k < rho.dim(); ++k) m += std::sqrt(static_cast<double>(k)) * rho(k, k - 1);
    return m;
}

} // namespace detail

// Oscillator exchanging quanta with one bath oscillator: f, h, populations,
// mean occupation, Husimi function, position, energy and heat statistics.
inline void oscillator_checks(const Settings& cfg, std::vector<ComparisonRecord>& out) {
    const double omega0 = 1.0;
    const CouplingProfile profile = thermalized_exponential(cfg.gamma);
    const FockSpace space(cfg.pair_ncut);
    const Index n = space.ncut();
    const oracle::models::OscillatorPair pair(space);
    const auto dims = pair.dims();

    const auto times = detail::physical_times(cfg.pair_taus, cfg.gamma);
    const auto props =
        detail::propagators(pair.hamiltonian(omega0), profile, times, std::max(omega0, profile.rate_scale()), pair.dim());

    const BathSpec bath = BathSpec::from_nbar(cfg.pair_nbar_b);
    const oscillator::Scenario thermal{omega0, profile, bath, oscillator::ThermalInitial{BathSpec::from_nbar(cfg.pair_nbar_a)}};
    const oscillator::Scenario coherent{omega0, profile, bath, oscillator::CoherentInitial{cfg.alpha0}};

    const DensityMatrix rho_a = thermal_state(space, cfg.pair_nbar_a).state;
    const DensityMatrix rho_b = thermal_state(space, cfg.pair_nbar_b).state;
    const ComplexMatrix thermal0 = kron(rho_a.matrix(), rho_b.matrix());
    const ComplexVector psi = coherent_state(space, cfg.alpha0).state;
    const ComplexMatrix coherent0 = kron(ComplexMatrix(psi * psi.adjoint()), rho_b.matrix());
    const auto pa = detail::diagonal(rho_a);
    const auto pb = detail::diagonal(rho_b);

    detail::Recorder coeff(out, "oscillator.coefficients");
    detail::Recorder therm(out, "oscillator.thermal");
    detail::Recorder coh(out, "oscillator.coherent");
    detail::Recorder heat(out, "oscillator.heat");

    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i], tau = cfg.pair_taus[i];
        const auto& u = props[i];

        // a(t) = f a + h b read off the one-quantum sector: f = <1,0|U|1,0>, h = <1,0|U|0,1>.
        const auto fh = oscillator::mixing_coefficients(thermal, t);
        coeff.add("f", tau, fh.f, u.element(n, n), kFockTol);
        coeff.add("h", tau, fh.h, u.element(n, 1), kFockTol);

        const DensityMatrix red = partial_trace(DensityMatrix(u.apply(thermal0)), dims, 0);
        for (int k = 0; k <= 10; ++k)
            therm.add("population[" + std::to_string(k) + "]", tau, oscillator::population(thermal, k, t),
                      red(k, k).real(), kFockTol);
        therm.add("mean_occupation", tau, oscillator::mean_occupation(thermal, t), detail::mean_number(red),
                  kFockTol);

        const DensityMatrix cred = partial_trace(DensityMatrix(u.apply(coherent0)), dims, 0);
        const Complex peak = oscillator::husimi_peak(coherent, t);
        const Complex mean_a = detail::mean_annihilation(cred);
        coh.add("husimi_peak", tau, peak, mean_a, kFockTol);
        for (const Complex probe : {peak, peak + Complex{0.5, -0.3}}) {
            const ComplexVector v = detail::coherent_amplitudes(n, probe);
            const double q = (v.adjoint() * cred.matrix() * v)(0, 0).real() / kPi;
            coh.add("husimi", tau, oscillator::husimi(coherent, probe, t), q, kFockTol);
        }
        coh.add("position", tau, oscillator::position(coherent, t),
                std::sqrt(1.0 / (2.0 * coherent.mass * omega0)) * 2.0 * mean_a.real(), kFockTol);
        coh.add("energy", tau, oscillator::energy(coherent, t), omega0 * (detail::mean_number(cred) + 0.5),
                kFockTol);

        // Two-point measurement on the system: P(k) = sum_n p_n P(n -> n + k).
        std::vector<double> pk(static_cast<std::size_t>(2 * n - 1), 0.0);
        for (Index na = 0; na < n; ++na)
            for (Index nb = 0; nb < n; ++nb) {
                const double w = pa[na] * pb[nb];
                if (w == 0.0) continue;
                for (Index m = 0; m < n; ++m)
                    for (Index l = 0; l < n; ++l)
                        pk[static_cast<std::size_t>(m - na + n - 1)] += w * std::norm(u.element(m * n + l, na * n + nb));
            }
        const auto dist = oscillator::heat_distribution(thermal, t, cfg.heat_kmax);
        for (int k = -4; k <= 4; ++k)
            heat.add("heat_distribution[" + std::to_string(k) + "]", tau, dist.probability(k),
                     pk[static_cast<std::size_t>(k + n - 1)], kFockTol);
        double oracle_mean = 0.0;
        for (std::size_t j = 0; j < pk.size(); ++j) oracle_mean += (static_cast<double>(j) - (n - 1)) * omega0 * pk[j];
        heat.add("heat_mean", tau, dist.mean(), oracle_mean, kFockTol);
        for (const double mu : {0.7, 2.1}) {
            Complex g{0.0, 0.0};
            for (std::size_t j = 0; j < pk.size(); ++j)
                g += pk[j] * std::polar(1.0, mu * omega0 * (static_cast<double>(j) - (n - 1)));
            heat.add("heat_characteristic(mu=" + detail::short_number(mu) + ")", tau,
                     oscillator::heat_characteristic(thermal, mu, t), g, kFockTol);
        }
    }
}

// Lindblad-matched coupling against the RK4 thermal damping master equation.
inline void lindblad_oscillator_checks(const Settings& cfg, std::vector<ComparisonRecord>& out) {
    const double omega0 = 1.0;
    const FockSpace space(cfg.pair_ncut);
    const LadderOperators ops = fock_operators(space);
    const auto times = detail::physical_times(cfg.pair_taus, cfg.gamma);
    const std::size_t steps = oracle::grid_aligned_step_count(times, times.back(), 4000);
    const oracle::LindbladPlan plan{omega0 * ops.number,
                                    oracle::models::thermal_damping(ops, cfg.gamma, cfg.pair_nbar_b), times.back(),
                                    steps, thermal_state(space, cfg.pair_nbar_a).state};
    const auto states = oracle::evolve_lindblad_at(plan, times);
    const oscillator::Scenario s{omega0, CouplingProfile::lindblad_matched(cfg.gamma),
                                 BathSpec::from_nbar(cfg.pair_nbar_b),
                                 oscillator::ThermalInitial{BathSpec::from_nbar(cfg.pair_nbar_a)}};
    detail::Recorder rec(out, "oscillator.lindblad");
    for (std::size_t i = 0; i < times.size(); ++i) {
        rec.add("mean_occupation", cfg.pair_taus[i], oscillator::mean_occupation(s, times[i]),
                detail::mean_number(states[i]), kFockTol);
        for (int k = 0; k <= 5; ++k)
            rec.add("population[" + std::to_string(k) + "]", cfg.pair_taus[i], oscillator::population(s, k, times[i]),
                    states[i](k, k).real(), kFockTol);
    }
}

// Oscillator between two baths: mode coefficients, occupation, energy and the
// thermalised energy.
inline void two_bath_checks(const Settings& cfg, std::vector<ComparisonRecord>& out) {
    const double omega = 1.0;
    const FockSpace space(cfg.three_ncut, 1e-6);
    const oracle::models::ThreeModes modes(space);
    const auto dims = modes.dims();

    const DensityMatrix ra = thermal_state(space, cfg.three_nbar_a).state;
    const DensityMatrix rb = thermal_state(space, BathSpec::from_beta_omega(cfg.three_beta_omega_1).nbar()).state;
    const DensityMatrix rc = thermal_state(space, BathSpec::from_beta_omega(cfg.three_beta_omega_2).nbar()).state;
    const ComplexMatrix rho0 = kron({ra.matrix(), rb.matrix(), rc.matrix()});

    // The closed forms are evaluated at the occupations the truncated states actually carry.
    const auto scenario_for = [&](const CouplingProfile& p) {
        return twobath::Scenario{omega, p, BathSpec::from_nbar(detail::mean_number(rb)),
                                 BathSpec::from_nbar(detail::mean_number(rc)), detail::mean_number(ra)};
    };

    const Index one_a = modes.index(1, 0, 0), one_b = modes.index(0, 1, 0), one_c = modes.index(0, 0, 1);
    detail::Recorder rec(out, "twobath");

    const CouplingProfile profile = thermalized_exponential(cfg.gamma, BathCount::two_bath);
    const twobath::Scenario s = scenario_for(profile);
    const auto times = detail::physical_times(cfg.three_taus, cfg.gamma);
    const auto props =
        detail::propagators(modes.hamiltonian(omega), profile, times, std::max(omega, profile.rate_scale()), modes.dim());
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i], tau = cfg.three_taus[i];
        const auto& u = props[i];
        const auto c = twobath::mode_coefficients(s, t);
        const Complex ca = u.element(one_a, one_a);
        rec.add("c_a", tau, c.a, ca, kFockTol);
        rec.add("c_b", tau, c.b, u.element(one_a, one_b), kFockTol);
        rec.add("c_c", tau, c.c, u.element(one_a, one_c), kFockTol);

        const double n_t = detail::mean_number(partial_trace(DensityMatrix(u.apply(rho0)), dims, 0));
        rec.add("occupation", tau, twobath::occupation(s, t), n_t, kFockTol);
        // The printed energy is the symmetrised one less (w/2)|c_a|^2.
        rec.add("energy", tau, twobath::energy(s, t), omega * (n_t + 0.5) - 0.5 * omega * std::norm(ca), kFockTol);
    }

    // Constant coupling reaches sqrt2 G = pi/2 at a finite time, where the
    // main oscillator holds exactly the thermalised state.
    const double g0 = cfg.gamma;
    const double t_star = kPi / (2.0 * std::sqrt(2.0) * g0);
    const CouplingProfile constant = CouplingProfile::constant(g0);
    const std::vector<double> at{t_star};
    const auto u = detail::propagators(modes.hamiltonian(omega), constant, at, omega, modes.dim()).front();
    const double n_star = detail::mean_number(partial_trace(DensityMatrix(u.apply(rho0)), dims, 0));
    const double ca2 = std::norm(u.element(one_a, one_a));
    rec.add("steady_state_energy", cfg.gamma * t_star, twobath::steady_state_energy(scenario_for(constant)),
            omega * (n_star + 0.5) - 0.5 * omega * ca2, kFockTol);
}

// Twin-qubit amplitude damping, spontaneous emission and trace distances.
inline void two_level_checks(const Settings& cfg, std::vector<ComparisonRecord>& out) {
    using twolevel::TwoLevelState;
    const double omega0 = 1.0;
    const TwoLevelState r1 = TwoLevelState::make(0.7, {0.3, 0.0});
    const TwoLevelState r2 = TwoLevelState::make(0.2, {-0.1, 0.25});
    const twolevel::QubitBathSpec bath = twolevel::QubitBathSpec::make(0.2);
    const ComplexMatrix bath_m = (ComplexMatrix(2, 2) << bath.p_e, 0.0, 0.0, bath.p_g).finished();
    const std::vector<Index> dims{2, 2};
    const auto times = detail::physical_times(cfg.qubit_taus, cfg.gamma);

    detail::Recorder td(out, "twolevel.trace_distance");
    td.add("trace_distance", 0.0, twolevel::trace_distance(r1, r2), trace_distance(r1.matrix(), r2.matrix()),
           kQubitTol);

    const std::vector<std::pair<std::string, CouplingProfile>> profiles{
        {"exponential", thermalized_exponential(cfg.gamma)}, {"lindblad_matched", CouplingProfile::lindblad_matched(cfg.gamma)}};
    for (const auto& [name, profile] : profiles) {
        detail::Recorder rec(out, "twolevel." + name);
        const auto props = detail::propagators(oracle::models::twin_qubit_hamiltonian(omega0), profile, times,
                                               std::max(omega0, profile.rate_scale()), 4);
        for (std::size_t i = 0; i < times.size(); ++i) {
            const double t = times[i], tau = cfg.qubit_taus[i];
            const auto& u = props[i];
            const ComplexMatrix w = twolevel::evolution_matrix(omega0, profile, t);
            for (const auto [r, c] : {std::pair{0, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 3}})
                rec.add("W(" + std::to_string(r) + "," + std::to_string(c) + ")", tau, w(r, c), u.element(r, c),
                        kQubitTol);

            const auto evolve = [&](const TwoLevelState& s) {
                const ComplexMatrix m = u.apply(ComplexMatrix(kron(s.matrix(), bath_m)));
                return partial_trace_matrix(m, dims, 0);
            };
            const ComplexMatrix e1 = evolve(r1), e2 = evolve(r2);
            const TwoLevelState red = twolevel::reduced_qubit(r1, bath, omega0, profile, t);
            rec.add("excited", tau, red.excited, e1(0, 0).real(), kQubitTol);
            rec.add("coherence", tau, red.coherence, e1(1, 0), kQubitTol);
            rec.add("evolved_trace_distance", tau, twolevel::evolved_trace_distance(r1, r2, bath, omega0, profile, t),
                    trace_distance(e1, e2), kQubitTol);

            // Analytic rate against a central difference of the distance.
            const double delta = 1e-6 / cfg.gamma;
            const double fd = (twolevel::evolved_trace_distance(r1, r2, bath, omega0, profile, t + delta) -
                               twolevel::evolved_trace_distance(r1, r2, bath, omega0, profile, t - delta)) /
                              (2.0 * delta);
            rec.add("markov_rate", tau, twolevel::markov_rate(r1, r2, bath, omega0, profile, t), fd,
                    1e-5 * std::abs(fd) + 1e-9);
        }
    }

    // Spontaneous emission: ground-state twin qubit versus sigma_- decay at rate gamma.
    const CouplingProfile matched = CouplingProfile::lindblad_matched(cfg.gamma);
    const TwoLevelState start = TwoLevelState::make(0.5, {0.5, 0.0});
    const std::size_t steps = oracle::grid_aligned_step_count(times, times.back(), 4000);
    const oracle::LindbladPlan plan{0.5 * omega0 * oracle::models::Pauli::z(),
                                    {{oracle::models::Pauli::lowering(), cfg.gamma}},
                                    times.back(),
                                    steps,
                                    DensityMatrix(start.matrix())};
    const auto states = oracle::evolve_lindblad_at(plan, times);
    detail::Recorder se(out, "twolevel.spontaneous_emission");
    for (std::size_t i = 0; i < times.size(); ++i) {
        const TwoLevelState r =
            twolevel::reduced_qubit(start, twolevel::QubitBathSpec::ground_state(), omega0, matched, times[i]);
        se.add("excited", cfg.qubit_taus[i], r.excited, states[i](0, 0).real(), kFockTol);
        se.add("coherence", cfg.qubit_taus[i], r.coherence, states[i](1, 0), kFockTol);
    }
}

// Pure dephasing by one bosonic mode, plus xi against direct quadrature.
inline void dephasing_checks(const Settings& cfg, std::vector<ComparisonRecord>& out) {
    using twolevel::TwoLevelState;
    const double omega0 = 1.0, omega = 1.0;
    const CouplingProfile profile = CouplingProfile::exponential(omega, cfg.gamma);
    const FockSpace space(cfg.dephasing_ncut);
    const oracle::models::QubitMode model(space);
    const TwoLevelState start = TwoLevelState::make(0.5, {0.5, 0.0});
    const auto times = detail::physical_times(cfg.dephasing_taus, cfg.gamma);
    const auto props = detail::propagators(model.hamiltonian(omega0, omega), profile, times,
                                           std::max({omega0, omega, profile.rate_scale()}), model.dim());

    for (const double beta_omega : {HUGE_VAL, 2.0}) {
        const BathSpec bath = std::isinf(beta_omega) ? BathSpec::zero_temperature() : BathSpec::from_beta_omega(beta_omega);
        const twolevel::DephasingScenario s{omega0, omega, profile, bath};
        const ComplexMatrix rho0 = kron(start.matrix(), thermal_state(space, bath.nbar()).state.matrix());
        detail::Recorder rec(out, std::isinf(beta_omega) ? "dephasing.beta_inf" : "dephasing.beta_omega_2");
        for (std::size_t i = 0; i < times.size(); ++i) {
            const double t = times[i], tau = cfg.dephasing_taus[i];
            const ComplexMatrix red = partial_trace_matrix(props[i].apply(rho0), model.dims(), 0);
            const TwoLevelState r = twolevel::dephasing_reduced(start, s, t);
            rec.add("excited", tau, r.excited, red(0, 0).real(), kFockTol);
            rec.add("coherence", tau, r.coherence, red(1, 0), kFockTol);
            const double ratio = std::abs(red(1, 0)) / std::abs(start.coherence);
            rec.add("dephasing_factor", tau, twolevel::dephasing_factor(s, t), ratio, kFockTol);
            rec.add("coherence_ratio_squared", tau, twolevel::coherence_ratio_squared(s, t), ratio * ratio, kFockTol);
        }
    }

    // xi(t) = -i int_0^t g e^{-i w t'} dt' by tanh-sinh quadrature, which never
    // evaluates the endpoints and so tolerates the t^(-1/2) singularity of the
    // Lindblad-matched rate.
    boost::math::quadrature::tanh_sinh<double> ts;
    const std::vector<std::pair<std::string, CouplingProfile>> profiles{
        {"exponential", profile}, {"lindblad_matched", CouplingProfile::lindblad_matched(cfg.gamma)}};
    for (const auto& [name, p] : profiles) {
        detail::Recorder rec(out, "dephasing.xi." + name);
        const twolevel::DephasingScenario s{omega0, omega, p, BathSpec::zero_temperature()};
        for (const double tau : cfg.dephasing_taus) {
            const double t = tau / cfg.gamma;
            const int panels = 1 + static_cast<int>(std::ceil(omega * t / kPi));
            Complex direct{0.0, 0.0};
            for (int k = 0; k < panels; ++k) {
                const double lo = t * k / panels, hi = t * (k + 1) / panels;
                const double re = ts.integrate([&](double u) { return p.strength(u) * std::cos(omega * u); }, lo, hi);
                const double im = ts.integrate([&](double u) { return -p.strength(u) * std::sin(omega * u); }, lo, hi);
                direct += Complex{re, im};
            }
            rec.add("xi", tau, twolevel::dephasing_xi(s, t), -kI * direct, kQuadratureTol);
        }
    }
}

inline Report run(Suite suite) {
    const Settings cfg = Settings::for_suite(suite);
    Report report{suite_name(suite), {}};
    oscillator_checks(cfg, report.records);
    lindblad_oscillator_checks(cfg, report.records);
    two_bath_checks(cfg, report.records);
    two_level_checks(cfg, report.records);
    dephasing_checks(cfg, report.records);
    return report;
}

} // namespace tdc::verify
