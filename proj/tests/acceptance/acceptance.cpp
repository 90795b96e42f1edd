// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "tdcoupling/runner.hpp"

using namespace tdc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Tracks the worst |error| seen against one bound.
class Bound {
public:
    Bound(std::string name, double tol) : name_(std::move(name)), tol_(tol) {}

    void observe(double err) {
        if (!std::isfinite(err)) finite_ = false;
        worst_ = std::max(worst_, std::abs(err));
        ++count_;
    }
    bool ok() const { return finite_ && count_ > 0 && worst_ <= tol_; }
    std::string summary() const {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: worst %.3g <= %.0e over %zu", name_.c_str(), worst_, tol_, count_);
        return buf;
    }

private:
    std::string name_;
    double tol_;
    double worst_ = 0.0;
    std::size_t count_ = 0;
    bool finite_ = true;
};

Outcome combine(std::initializer_list<const Bound*> bounds) {
    Outcome o;
    for (const Bound* b : bounds) {
        o.pass = o.pass && b->ok();
        if (!o.detail.empty()) o.detail += "; ";
        o.detail += b->summary();
    }
    return o;
}

std::vector<double> taus(int count, double step, double first = 0.0) {
    std::vector<double> out;
    for (int i = 0; i < count; ++i) out.push_back(first + step * i);
    return out;
}

// Records of one verify group whose scenario and quantity start with the given prefixes.
std::vector<oracle::ComparisonRecord> select(const std::vector<oracle::ComparisonRecord>& all,
                                             const std::string& scenario, const std::string& quantity) {
    std::vector<oracle::ComparisonRecord> out;
    for (const auto& r : all)
        if (r.scenario.rfind(scenario, 0) == 0 && r.quantity.rfind(quantity, 0) == 0) out.push_back(r);
    return out;
}

void observe_records(Bound& b, const std::vector<oracle::ComparisonRecord>& records) {
    for (const auto& r : records) b.observe(r.abs_err);
}

constexpr double kGamma = 0.2;

Outcome criterion1() {
    Bound b("|f|^2+|h|^2-1", 1e-12);
    const std::vector<CouplingProfile> profiles{CouplingProfile::exponential(1.3, kGamma),
                                                CouplingProfile::lindblad_matched(kGamma),
                                                CouplingProfile::constant(0.7)};
    for (const auto& p : profiles) {
        const oscillator::Scenario s{1.0, p, BathSpec::zero_temperature(), oscillator::ThermalInitial{BathSpec::from_nbar(0.5)}};
        for (double tau : taus(1000, 0.01)) {
            const auto c = oscillator::mixing_coefficients(s, tau / kGamma);
            b.observe(std::norm(c.f) + std::norm(c.h) - 1.0);
        }
    }
    return combine({&b});
}

Outcome criterion2() {
    const auto cfg = verify::Settings::for_suite(verify::Suite::standard);
    std::vector<oracle::ComparisonRecord> records;
    verify::oscillator_checks(cfg, records);
    Bound b("populations n<=10 vs oracle (ncut 30)", 1e-6);
    observe_records(b, select(records, "oscillator.thermal", "population["));
    return combine({&b});
}

Outcome criterion3() {
    const double na = 0.8, nb = 0.3;
    const oscillator::Scenario s{1.0, CouplingProfile::lindblad_matched(kGamma), BathSpec::from_nbar(nb),
                                 oscillator::ThermalInitial{BathSpec::from_nbar(na)}};
    Bound analytic("<n> vs Lindblad formula", 1e-12);
    for (double tau : taus(1000, 0.01)) {
        const double e = std::exp(-tau);
        analytic.observe(oscillator::mean_occupation(s, tau / kGamma) - (na * e + nb * (1.0 - e)));
    }
    const auto cfg = verify::Settings::for_suite(verify::Suite::standard);
    std::vector<oracle::ComparisonRecord> records;
    verify::lindblad_oscillator_checks(cfg, records);
    Bound rk4("<n> vs RK4 Lindblad", 1e-6);
    observe_records(rk4, select(records, "oscillator.lindblad", "mean_occupation"));
    return combine({&analytic, &rk4});
}

Outcome criterion4() {
    Bound b("P_n - delta_n0 at t = 50/gamma", 1e-10);
    for (const auto& p : {thermalized_exponential(kGamma), CouplingProfile::lindblad_matched(kGamma)})
        for (double na : {0.0, 0.8, 3.0}) {
            const oscillator::Scenario s{1.0, p, BathSpec::zero_temperature(),
                                         oscillator::ThermalInitial{BathSpec::from_nbar(na)}};
            for (int n = 0; n <= 30; ++n) b.observe(oscillator::population(s, n, 50.0 / kGamma) - (n == 0 ? 1.0 : 0.0));
        }
    return combine({&b});
}

Outcome criterion5() {
    const Complex alpha0{2.0, 0.0};
    const CouplingProfile p = thermalized_exponential(kGamma);
    const oscillator::Scenario cold{1.0, p, BathSpec::zero_temperature(), oscillator::CoherentInitial{alpha0}};
    const oscillator::Scenario warm{1.0, p, BathSpec::from_nbar(0.3), oscillator::CoherentInitial{alpha0}};

    Bound peak("Q(f alpha0) - 1/pi", 1e-12), path("peak path", 1e-12), norm("grid normalisation", 1e-3);
    for (double tau : taus(1000, 0.005)) {
        const double t = tau / kGamma;
        const Complex fa = oscillator::mixing_coefficients(cold, t).f * alpha0;
        peak.observe(oscillator::husimi(cold, fa, t) - 1.0 / kPi);
        path.observe(std::abs(oscillator::husimi_peak(cold, t) - alpha0 * std::polar(1.0, -t) * std::cos(p.integral(t))));
    }
    for (const auto* s : {&cold, &warm})
        for (double tau : {0.0, 0.7, 2.5}) {
            const double t = tau / kGamma;
            const Complex c = oscillator::husimi_peak(*s, t);
            const double h = 0.02, half = 8.0;
            double total = 0.0;
            for (double x = -half; x <= half; x += h)
                for (double y = -half; y <= half; y += h) total += oscillator::husimi(*s, c + Complex{x, y}, t);
            norm.observe(total * h * h - 1.0);
        }
    return combine({&peak, &path, &norm});
}

Outcome criterion6() {
    Bound initial("E(0) - 4.5 w0", 1e-9), late("E(inf) - (w0/2)coth", 1e-9);
    for (const auto& p : {thermalized_exponential(kGamma), CouplingProfile::lindblad_matched(kGamma)})
        for (double bw : {HUGE_VAL, 1.5, 0.4}) {
            const BathSpec bath = std::isinf(bw) ? BathSpec::zero_temperature() : BathSpec::from_beta_omega(bw);
            const oscillator::Scenario s{1.0, p, bath, oscillator::CoherentInitial{{2.0, 0.0}}};
            initial.observe(oscillator::energy(s, 0.0) - 4.5);
            const double expected = std::isinf(bw) ? 0.5 : 0.5 / std::tanh(0.5 * bw);
            late.observe(oscillator::energy(s, 50.0 / kGamma) - expected);
        }
    return combine({&initial, &late});
}

Outcome criterion7() {
    Bound at_mu0("G(0,t)-1", 1e-12), at_t0("G(mu,0)-1", 1e-12), negative("min P below -1e-10", 0.0),
        total("sum P - 1", 1e-9), moment("<Q> vs dG/dmu", 1e-6);
    for (const auto& [na, nb] : {std::pair{0.8, 0.3}, {0.0, 1.2}, {2.0, 0.0}}) {
        const oscillator::Scenario s{1.0, thermalized_exponential(kGamma), BathSpec::from_nbar(nb),
                                     oscillator::ThermalInitial{BathSpec::from_nbar(na)}};
        for (double mu : {-2.0, 0.3, 1.1, 3.0}) at_t0.observe(std::abs(oscillator::heat_characteristic(s, mu, 0.0) - 1.0));
        for (double tau : {0.25, 0.5, 1.0, 2.0, 4.0}) {
            const double t = tau / kGamma;
            at_mu0.observe(std::abs(oscillator::heat_characteristic(s, 0.0, t) - 1.0));
            const auto dist = oscillator::heat_distribution(s, t, 200);
            negative.observe(std::max(0.0, -1e-10 - dist.raw_min));
            total.observe(dist.raw_total - 1.0);
            const double h = 1e-4;
            const Complex d = (oscillator::heat_characteristic(s, h, t) - oscillator::heat_characteristic(s, -h, t)) / (2.0 * h);
            moment.observe(dist.mean() - d.imag());
        }
    }
    return combine({&at_mu0, &at_t0, &negative, &total, &moment});
}

Outcome criterion8() {
    Bound steady("steady-state energy", 1e-9), late("energy at t = 50/gamma", 1e-9), classical("classical (T1+T2)/2 rel", 1e-3);
    const auto coth_half = [](double bw) { return 1.0 / std::tanh(0.5 * bw); };
    for (const auto& [b1, b2] : {std::pair{0.7, 2.5}, {1.0, 1.0}, {0.1, 5.0}}) {
        const twobath::Scenario s{1.0, thermalized_exponential(kGamma, BathCount::two_bath), BathSpec::from_beta_omega(b1),
                                  BathSpec::from_beta_omega(b2), 2.0};
        const double expected = 0.25 * (coth_half(b1) + coth_half(b2));
        steady.observe(twobath::steady_state_energy(s) - expected);
        late.observe(twobath::energy(s, 50.0 / kGamma) - expected);
    }
    for (const auto& [b1, b2] : {std::pair{1e-4, 1e-4}, {1e-4, 2e-4}}) {
        const twobath::Scenario s{1.0, thermalized_exponential(kGamma, BathCount::two_bath), BathSpec::from_beta_omega(b1),
                                  BathSpec::from_beta_omega(b2), 0.0};
        const double mean_t = 0.5 * (1.0 / b1 + 1.0 / b2);
        classical.observe(twobath::energy(s, 50.0 / kGamma) / mean_t - 1.0);
    }
    return combine({&steady, &late, &classical});
}

Outcome criterion9() {
    Bound unitary("W W^+ - 1", 1e-12), decay("rho_ee - exp(-gamma t)", 1e-12), lindblad("vs sigma_- Lindblad", 1e-6);
    const std::vector<CouplingProfile> profiles{thermalized_exponential(kGamma), CouplingProfile::lindblad_matched(kGamma),
                                                CouplingProfile::constant(0.4)};
    for (const auto& p : profiles)
        for (double tau : taus(1000, 0.01)) {
            const ComplexMatrix w = twolevel::evolution_matrix(1.0, p, tau / kGamma);
            unitary.observe(max_abs_entry(w * w.adjoint() - ComplexMatrix::Identity(4, 4)));
        }
    const auto excited = twolevel::TwoLevelState::make(1.0, {0.0, 0.0});
    for (double tau : taus(1000, 0.01)) {
        const auto r = twolevel::reduced_qubit(excited, twolevel::QubitBathSpec::ground_state(), 1.0,
                                               CouplingProfile::lindblad_matched(kGamma), tau / kGamma);
        decay.observe(r.excited - std::exp(-tau));
    }
    auto cfg = verify::Settings::for_suite(verify::Suite::standard);
    std::vector<oracle::ComparisonRecord> records;
    verify::two_level_checks(cfg, records);
    observe_records(lindblad, select(records, "twolevel.spontaneous_emission", ""));
    return combine({&unitary, &decay, &lindblad});
}

Outcome criterion10() {
    const auto cfg = verify::Settings::for_suite(verify::Suite::standard);
    std::vector<oracle::ComparisonRecord> records;
    verify::dephasing_checks(cfg, records);
    Bound oracle_match("closed form vs qubit(x)Fock oracle", 1e-6);
    observe_records(oracle_match, select(records, "dephasing.beta_", ""));

    // Plateau at beta = inf, g0 = w, gamma = 0.2 w. xi is integrated
    // directly from g(t) e^{-i w t} with tanh-sinh panels.
    const double omega = 1.0, g0 = 1.0, t = 50.0 / kGamma;
    const CouplingProfile p = CouplingProfile::exponential(g0, kGamma);
    const twolevel::DephasingScenario s{1.0, omega, p, BathSpec::zero_temperature()};
    boost::math::quadrature::tanh_sinh<double> ts;
    const int panels = 1 + static_cast<int>(std::ceil(omega * t / kPi));
    Complex integral{0.0, 0.0};
    for (int k = 0; k < panels; ++k) {
        const double lo = t * k / panels, hi = t * (k + 1) / panels;
        integral += Complex{ts.integrate([&](double u) { return p.strength(u) * std::cos(omega * u); }, lo, hi),
                            ts.integrate([&](double u) { return -p.strength(u) * std::sin(omega * u); }, lo, hi)};
    }
    const double quadrature_plateau = std::exp(-4.0 * std::norm(integral));
    const double target = std::exp(-4.0 / 1.04);
    Bound plateau("plateau vs exp(-4/1.04)", 1e-9);
    plateau.observe(quadrature_plateau - target);
    plateau.observe(twolevel::coherence_ratio_squared(s, t) - quadrature_plateau);
    return combine({&oracle_match, &plateau});
}

Outcome criterion11() {
    const auto pairs = cli::random_state_pairs(100, 12345);
    const auto bath = twolevel::QubitBathSpec::make(0.15);
    Bound sign("max sigma (must be <= 0)", 0.0), fd("sigma vs central difference (rel)", 1e-5);
    for (const auto& p : {thermalized_exponential(kGamma), CouplingProfile::lindblad_matched(kGamma)})
        for (const auto& [r1, r2] : pairs)
            for (double tau : taus(200, 0.05, 0.05)) {
                const double t = tau / kGamma;
                const double rate = twolevel::markov_rate(r1, r2, bath, 1.0, p, t);
                sign.observe(std::max(rate, 0.0));
                const double delta = 1e-4 / kGamma;
                const double diff = (twolevel::evolved_trace_distance(r1, r2, bath, 1.0, p, t + delta) -
                                     twolevel::evolved_trace_distance(r1, r2, bath, 1.0, p, t - delta)) /
                                    (2.0 * delta);
                if (diff != 0.0) fd.observe((rate - diff) / diff);
            }
    return combine({&sign, &fd});
}

Outcome criterion12() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("tdc_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::vector<std::string> texts;
    for (int run = 0; run < 2; ++run) {
        const fs::path out = dir / ("report" + std::to_string(run) + ".json");
        const auto cfg = cli::parse_config(R"({"model": "verify", "parameters": {"suite": "fast"}, "output": {"path": ")" +
                                           out.string() + R"("}})");
        std::ostringstream log;
        cli::execute(cfg, log);
        texts.push_back(series::read_file(out));
    }
    fs::remove_all(dir);
    Outcome o;
    o.pass = !texts[0].empty() && texts[0] == texts[1];
    o.detail = "two fast-suite reports, " + std::to_string(texts[0].size()) + " bytes, " +
               (o.pass ? "byte-identical" : "differ");
    return o;
}

} // namespace

// With arguments, runs only the listed criterion numbers.
int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"coefficient normalization", criterion1},   {"population oracle equivalence", criterion2},
        {"Lindblad consistency", criterion3},        {"zero-temperature cooling", criterion4},
        {"Husimi function", criterion5},             {"energy limits", criterion6},
        {"heat statistics", criterion7},             {"two-bath steady state", criterion8},
        {"two-level amplitude damping", criterion9}, {"pure dephasing", criterion10},
        {"Markovianity", criterion11},               {"determinism", criterion12},
    };
    std::vector<bool> wanted(criteria.size(), argc == 1);
    for (int a = 1; a < argc; ++a) {
        const int n = std::atoi(argv[a]);
        if (n < 1 || n > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "unknown criterion '%s'\n", argv[a]);
            return 2;
        }
        wanted[static_cast<std::size_t>(n - 1)] = true;
    }
    int failed = 0, ran = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (!wanted[i]) continue;
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2zu %s: %s [%s] (%.2f s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    std::printf("%d of %d criteria failed\n", failed, ran);
    return failed == 0 ? 0 : 1;
}
