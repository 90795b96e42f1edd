// runner.hpp: scenario configuration files, model runs and figure tables
//
// A configuration is one JSON object:
//
//   { "model": "oscillator", "parameters": { ... }, "output": { "path": "...", "format": "csv" } }
//
// Times are given as tau = gamma t and frequencies in units of the system
// frequency. Unknown keys anywhere in the file are rejected.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "tdcoupling/bath.hpp"
#include "tdcoupling/coupling.hpp"
#include "tdcoupling/error.hpp"
#include "tdcoupling/oscillator.hpp"
#include "tdcoupling/series.hpp"
#include "tdcoupling/twobath.hpp"
#include "tdcoupling/twolevel.hpp"
#include "tdcoupling/verify.hpp"

namespace tdc::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kConfigError = 2, kNumericalError = 3 };

// Typed access to one JSON object. Every key read is remembered so that
// finish() can reject the ones nobody asked for.
class Params {
public:
    Params(const Json& object, std::string where) : object_(object), where_(std::move(where)) {
        if (!object_.is_object()) throw ConfigError(where_ + ": expected a JSON object");
    }

    bool has(const std::string& key) const { return object_.contains(key); }

    double number(const std::string& key, std::optional<double> fallback = std::nullopt) {
        used_.insert(key);
        if (!object_.contains(key)) {
            if (!fallback) throw ConfigError(where_ + ": missing required key '" + key + "'");
            return *fallback;
        }
        const Json& v = object_.at(key);
        if (!v.is_number()) throw ConfigError(where_ + "." + key + ": expected a number");
        const double x = v.get<double>();
        if (!std::isfinite(x)) throw ConfigError(where_ + "." + key + ": must be finite");
        return x;
    }

    double positive(const std::string& key, std::optional<double> fallback = std::nullopt) {
        const double x = number(key, fallback);
        if (!(x > 0.0)) throw ConfigError(where_ + "." + key + ": must be positive");
        return x;
    }

    double nonnegative(const std::string& key, std::optional<double> fallback = std::nullopt) {
        const double x = number(key, fallback);
        if (!(x >= 0.0)) throw ConfigError(where_ + "." + key + ": must be nonnegative");
        return x;
    }

    double probability(const std::string& key, double fallback) {
        const double x = number(key, fallback);
        if (!(x >= 0.0 && x <= 1.0)) throw ConfigError(where_ + "." + key + ": must lie in [0, 1]");
        return x;
    }

    int count(const std::string& key, int fallback, int lo, int hi) {
        const double x = number(key, fallback);
        if (x != std::floor(x) || x < lo || x > hi)
            throw ConfigError(where_ + "." + key + ": must be an integer in [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]");
        return static_cast<int>(x);
    }

    std::string string(const std::string& key, std::optional<std::string> fallback = std::nullopt) {
        used_.insert(key);
        if (!object_.contains(key)) {
            if (!fallback) throw ConfigError(where_ + ": missing required key '" + key + "'");
            return *fallback;
        }
        const Json& v = object_.at(key);
        if (!v.is_string()) throw ConfigError(where_ + "." + key + ": expected a string");
        return v.get<std::string>();
    }

    // beta * omega; absent or "inf" means zero temperature.
    double beta_omega(const std::string& key) {
        used_.insert(key);
        if (!object_.contains(key)) return std::numeric_limits<double>::infinity();
        const Json& v = object_.at(key);
        if (v.is_string() && v.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
        const double x = number(key);
        if (!(x > 0.0)) throw ConfigError(where_ + "." + key + ": must be positive or \"inf\"");
        return x;
    }

    // A thermal mode given either as `<prefix>nbar` or `beta_omega<suffix>`.
    BathSpec bath(const std::string& nbar_key, const std::string& beta_key) {
        if (has(nbar_key) && has(beta_key))
            throw ConfigError(where_ + ": give at most one of '" + nbar_key + "' and '" + beta_key + "'");
        if (has(nbar_key)) return BathSpec::from_nbar(nonnegative(nbar_key));
        const double bw = beta_omega(beta_key);
        return std::isinf(bw) ? BathSpec::zero_temperature() : BathSpec::from_beta_omega(bw);
    }

    void finish() const {
        for (const auto& item : object_.items())
            if (!used_.count(item.key())) throw ConfigError(where_ + ": unknown key '" + item.key() + "'");
    }

private:
    const Json& object_;
    std::string where_;
    std::set<std::string> used_;
};

struct ScenarioConfig {
    std::string model;
    Json parameters = Json::object();
    std::filesystem::path output_path;
    std::string format = "csv";
};

inline const std::vector<std::string>& model_names() {
    static const std::vector<std::string> names{"oscillator", "twobath",      "twolevel",
                                                "dephasing",  "markovianity", "verify"};
    return names;
}

inline ScenarioConfig parse_config(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    Params top(root, "config");
    ScenarioConfig cfg;
    cfg.model = top.string("model");
    if (std::find(model_names().begin(), model_names().end(), cfg.model) == model_names().end())
        throw ConfigError("config.model: unknown model '" + cfg.model + "'");
    const Json empty = Json::object();
    const Json& parameters = root.contains("parameters") ? root.at("parameters") : empty;
    if (!parameters.is_object()) throw ConfigError("config.parameters: expected a JSON object");
    cfg.parameters = parameters;
    Params output(root.contains("output") ? root.at("output") : empty, "config.output");
    cfg.output_path = output.string("path");
    cfg.format = output.string("format", cfg.model == "verify" ? "json" : "csv");
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("config.output.format: expected \"csv\" or \"json\"");
    if (cfg.model == "verify" && cfg.format != "json")
        throw ConfigError("config.output.format: verify writes a JSON report");
    output.finish();
    for (const auto& item : root.items())
        if (item.key() != "model" && item.key() != "parameters" && item.key() != "output")
            throw ConfigError("config: unknown key '" + item.key() + "'");
    return cfg;
}

inline ScenarioConfig load_config(const std::filesystem::path& path) { return parse_config(series::read_file(path)); }

namespace detail {

struct TimeGrid {
    double gamma;
    std::vector<double> tau;
};

inline TimeGrid time_grid(Params& p, double gamma_default = 0.2) {
    const double gamma = p.positive("gamma", gamma_default);
    const double tau_max = p.nonnegative("tau_max", 5.0);
    const double tau_step = p.positive("tau_step", 0.01);
    if (tau_max / tau_step > 1e7) throw ConfigError("parameters: tau grid has too many points");
    return {gamma, series::tau_grid(tau_max, tau_step)};
}

// Profile kinds: thermalized_exponential (default), exponential, lindblad_matched,
// constant, tabulated. g0 is in units of the system frequency.
inline CouplingProfile profile(Params& p, double gamma, BathCount count,
                               const std::string& default_kind = "thermalized_exponential",
                               std::optional<double> default_g0 = std::nullopt) {
    const std::string kind = p.string("profile", default_kind);
    if (kind == "thermalized_exponential") return thermalized_exponential(gamma, count);
    if (kind == "exponential") return CouplingProfile::exponential(p.nonnegative("g0", default_g0), gamma);
    if (kind == "lindblad_matched") return CouplingProfile::lindblad_matched(gamma);
    if (kind == "constant") return CouplingProfile::constant(p.nonnegative("g0"));
    if (kind == "tabulated") return load_tabulated_profile(p.string("table"));
    throw ConfigError("parameters.profile: unknown kind '" + kind + "'");
}

inline std::vector<double> column(const std::vector<double>& tau, const std::function<double(double)>& f) {
    std::vector<double> out;
    out.reserve(tau.size());
    for (double x : tau) out.push_back(f(x));
    return out;
}

} // namespace detail

// Oscillator and bath oscillator. Coherent initial state by default
// (alpha0_re, alpha0_im); "initial": "thermal" switches to nbar_a or beta_omega_a.
inline series::Table run_oscillator(const Json& parameters) {
    Params p(parameters, "parameters");
    const auto grid = detail::time_grid(p);
    const double omega0 = 1.0;  // frequencies are in units of omega0
    const double gamma = grid.gamma * omega0;
    oscillator::Scenario s{omega0, detail::profile(p, gamma, BathCount::single), p.bath("nbar_b", "beta_omega_b"),
                           oscillator::CoherentInitial{}, p.positive("mass", 1.0)};
    const std::string initial = p.string("initial", "coherent");
    series::Table table{grid.tau, {}, {}};
    const auto t_of = [&](double tau) { return tau / gamma; };
    const auto add = [&](const std::string& label, const std::function<double(double)>& f) {
        table.add(label, detail::column(grid.tau, [&](double tau) { return f(t_of(tau)); }));
    };
    add("abs_f2", [&](double t) { return std::norm(oscillator::mixing_coefficients(s, t).f); });
    add("abs_h2", [&](double t) { return std::norm(oscillator::mixing_coefficients(s, t).h); });
    if (initial == "coherent") {
        s.initial = oscillator::CoherentInitial{{p.number("alpha0_re", 2.0), p.number("alpha0_im", 0.0)}};
        const double x0 = std::sqrt(2.0 / (s.mass * omega0));
        add("alpha_re", [&](double t) { return oscillator::husimi_peak(s, t).real(); });
        add("alpha_im", [&](double t) { return oscillator::husimi_peak(s, t).imag(); });
        add("husimi_peak_value", [&](double t) { return oscillator::husimi(s, oscillator::husimi_peak(s, t), t); });
        add("x_over_x0", [&](double t) { return oscillator::position(s, t) / x0; });
        add("energy", [&](double t) { return oscillator::energy(s, t) / omega0; });
    } else if (initial == "thermal") {
        s.initial = oscillator::ThermalInitial{p.bath("nbar_a", "beta_omega_a")};
        const int levels = p.count("levels", 5, 1, 1000);
        const int heat_kmax = p.count("heat_kmax", 200, 1, 100000);
        add("mean_occupation", [&](double t) { return oscillator::mean_occupation(s, t); });
        for (int n = 0; n < levels; ++n)
            add("P" + std::to_string(n), [&, n](double t) { return oscillator::population(s, n, t); });
        add("heat_mean", [&](double t) { return oscillator::heat_distribution(s, t, heat_kmax).mean(); });
    } else {
        throw ConfigError("parameters.initial: expected \"coherent\" or \"thermal\"");
    }
    p.finish();
    return table;
}

inline series::Table run_twobath(const Json& parameters) {
    Params p(parameters, "parameters");
    const auto grid = detail::time_grid(p);
    const double omega = 1.0;
    const double gamma = grid.gamma * omega;
    const twobath::Scenario s{omega, detail::profile(p, gamma, BathCount::two_bath), p.bath("nbar_1", "beta_omega_1"),
                              p.bath("nbar_2", "beta_omega_2"), p.nonnegative("initial_occupation", 0.0)};
    p.finish();
    series::Table table{grid.tau, {}, {}};
    const auto add = [&](const std::string& label, const std::function<double(double)>& f) {
        table.add(label, detail::column(grid.tau, [&](double tau) { return f(tau / gamma); }));
    };
    add("abs_c_a2", [&](double t) { return std::norm(twobath::mode_coefficients(s, t).a); });
    add("abs_c_b2", [&](double t) { return std::norm(twobath::mode_coefficients(s, t).b); });
    add("occupation", [&](double t) { return twobath::occupation(s, t); });
    add("energy", [&](double t) { return twobath::energy(s, t) / omega; });
    add("steady_state_energy", [&](double) { return twobath::steady_state_energy(s) / omega; });
    return table;
}

inline series::Table run_twolevel(const Json& parameters) {
    Params p(parameters, "parameters");
    const auto grid = detail::time_grid(p);
    const double omega0 = 1.0;
    const double gamma = grid.gamma * omega0;
    const CouplingProfile profile = detail::profile(p, gamma, BathCount::single);
    const auto bath = twolevel::QubitBathSpec::make(p.probability("p_e", 0.0));
    twolevel::TwoLevelState initial;
    try {
        initial = twolevel::TwoLevelState::make(p.probability("excited", 1.0),
                                                {p.number("coherence_re", 0.0), p.number("coherence_im", 0.0)});
    } catch (const DomainError& e) {
        throw ConfigError(std::string("parameters: ") + e.what());
    }
    p.finish();
    series::Table table{grid.tau, {}, {}};
    std::vector<twolevel::TwoLevelState> states;
    for (double tau : grid.tau) states.push_back(twolevel::reduced_qubit(initial, bath, omega0, profile, tau / gamma));
    const auto add = [&](const std::string& label, const std::function<double(const twolevel::TwoLevelState&)>& f) {
        std::vector<double> v;
        for (const auto& st : states) v.push_back(f(st));
        table.add(label, std::move(v));
    };
    add("excited", [](const auto& st) { return st.excited; });
    add("ground", [](const auto& st) { return st.ground; });
    add("coherence_re", [](const auto& st) { return st.coherence.real(); });
    add("coherence_im", [](const auto& st) { return st.coherence.imag(); });
    return table;
}

// Frequencies here are in units of the mode frequency omega.
inline series::Table run_dephasing(const Json& parameters) {
    Params p(parameters, "parameters");
    const auto grid = detail::time_grid(p);
    const double omega = 1.0;
    const double gamma = grid.gamma * omega;
    const CouplingProfile profile = detail::profile(p, gamma, BathCount::single, "exponential", 1.0);
    const double bw = p.beta_omega("beta_omega");
    const twolevel::DephasingScenario s{p.positive("omega0", 1.0), omega, profile,
                                        std::isinf(bw) ? BathSpec::zero_temperature() : BathSpec::from_beta_omega(bw)};
    p.finish();
    series::Table table{grid.tau, {}, {}};
    std::vector<Complex> xi;
    for (double tau : grid.tau) xi.push_back(twolevel::dephasing_xi(s, tau / gamma));
    std::vector<double> re, im, factor, ratio2;
    for (const Complex& x : xi) {
        re.push_back(x.real());
        im.push_back(x.imag());
        const double f = std::exp(-2.0 * std::norm(x) * s.bath.coth_half());
        factor.push_back(f);
        ratio2.push_back(f * f);
    }
    table.add("xi_re", std::move(re));
    table.add("xi_im", std::move(im));
    table.add("dephasing_factor", std::move(factor));
    table.add("coherence_ratio_squared", std::move(ratio2));
    return table;
}

// Valid qubit states drawn uniformly in excited population, then in
// coherence magnitude up to the positivity bound, then in phase.
inline std::vector<std::pair<twolevel::TwoLevelState, twolevel::TwoLevelState>> random_state_pairs(int count,
                                                                                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto draw = [&] {
        const double a = unit(rng);
        const double radius = std::sqrt(a * (1.0 - a)) * unit(rng);
        return twolevel::TwoLevelState::make(a, std::polar(radius, 2.0 * kPi * unit(rng)));
    };
    std::vector<std::pair<twolevel::TwoLevelState, twolevel::TwoLevelState>> out;
    for (int i = 0; i < count; ++i) {
        auto first = draw();
        out.emplace_back(first, draw());
    }
    return out;
}

// Random pairs of initial qubit states; per time the largest markov_rate over
// all pairs (never positive for a Markovian process) and the mean distance.
inline series::Table run_markovianity(const Json& parameters) {
    Params p(parameters, "parameters");
    const auto grid = detail::time_grid(p);
    const double omega0 = 1.0;
    const double gamma = grid.gamma * omega0;
    const CouplingProfile profile = detail::profile(p, gamma, BathCount::single);
    const auto bath = twolevel::QubitBathSpec::make(p.probability("p_e", 0.0));
    const int pairs = p.count("pairs", 100, 1, 1000000);
    const auto seed = static_cast<std::uint64_t>(p.count("seed", 12345, 0, std::numeric_limits<int>::max()));
    p.finish();

    const auto sample = random_state_pairs(pairs, seed);

    std::vector<double> max_rate, mean_distance;
    for (double tau : grid.tau) {
        const double t = tau / gamma;
        double worst = -std::numeric_limits<double>::infinity(), total = 0.0;
        for (const auto& [r1, r2] : sample) {
            worst = std::max(worst, twolevel::markov_rate(r1, r2, bath, omega0, profile, t));
            total += twolevel::evolved_trace_distance(r1, r2, bath, omega0, profile, t);
        }
        max_rate.push_back(worst);
        mean_distance.push_back(total / pairs);
    }
    series::Table table{grid.tau, {}, {}};
    table.add("max_markov_rate", std::move(max_rate));
    table.add("mean_trace_distance", std::move(mean_distance));
    return table;
}

inline verify::Suite verify_suite(const Json& parameters) {
    Params p(parameters, "parameters");
    const auto suite = verify::parse_suite(p.string("suite", "default"));
    p.finish();
    return suite;
}

inline series::Table run_series_model(const ScenarioConfig& cfg) {
    if (cfg.model == "oscillator") return run_oscillator(cfg.parameters);
    if (cfg.model == "twobath") return run_twobath(cfg.parameters);
    if (cfg.model == "twolevel") return run_twolevel(cfg.parameters);
    if (cfg.model == "dephasing") return run_dephasing(cfg.parameters);
    if (cfg.model == "markovianity") return run_markovianity(cfg.parameters);
    throw ConfigError("model '" + cfg.model + "' does not produce a time series");
}

inline Json table_to_json(const std::string& model, const series::Table& table) {
    Json j;
    j["model"] = model;
    j["tau"] = table.tau;
    Json cols = Json::object();
    for (std::size_t i = 0; i < table.labels.size(); ++i) cols[table.labels[i]] = table.columns[i];
    j["columns"] = std::move(cols);
    return j;
}

inline std::string report_text(const verify::Report& report) { return report.to_json().dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Figures

inline const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids{"fig2", "fig3", "fig4", "fig5", "fig8"};
    return ids;
}

// Figure data on tau in [0, 5], step 0.01, with the published parameters:
// gamma = 0.2 w0, alpha0 = 2, nbar_b = 0 for the oscillator figures and
// g0 = w, gamma = 0.2 w, beta = inf for the dephasing figure.
inline series::Table figure_table(const std::string& id) {
    Json params = Json::object();
    if (id == "fig2") {
        const double gamma = 0.2;
        const CouplingProfile p = thermalized_exponential(gamma);
        series::Table table{series::tau_grid(5.0, 0.01), {}, {}};
        table.add("g_over_g0", detail::column(table.tau, [&](double tau) { return p.strength(tau / gamma) / p.strength(0.0); }));
        table.add("cos2_G", detail::column(table.tau, [&](double tau) {
                      const double c = std::cos(p.integral(tau / gamma));
                      return c * c;
                  }));
        return table;
    }
    if (id == "fig3" || id == "fig4" || id == "fig5") {
        const series::Table full = run_oscillator(Json::object());
        const std::vector<std::string> wanted = id == "fig3"   ? std::vector<std::string>{"alpha_re", "alpha_im"}
                                                : id == "fig4" ? std::vector<std::string>{"x_over_x0"}
                                                               : std::vector<std::string>{"energy"};
        series::Table table{full.tau, {}, {}};
        for (const auto& label : wanted) {
            const auto it = std::find(full.labels.begin(), full.labels.end(), label);
            table.add(label, full.columns[static_cast<std::size_t>(it - full.labels.begin())]);
        }
        if (id == "fig5") {
            // Fig. 5 carries both profile choices.
            const series::Table matched = run_oscillator(Json{{"profile", "lindblad_matched"}});
            table.add("energy_lindblad_matched", matched.columns.back());
        }
        return table;
    }
    if (id == "fig8") {
        const series::Table full = run_dephasing(Json::object());
        series::Table table{full.tau, {}, {}};
        table.add("coherence_ratio_squared", full.columns.back());
        return table;
    }
    throw ConfigError("unknown figure id '" + id + "' (expected fig2, fig3, fig4, fig5 or fig8)");
}

// ---------------------------------------------------------------------------
// Error mapping

// Runs `body`, printing any library error to `err` and mapping it to an exit code.
inline int guarded(const std::function<int()>& body, std::ostream& err) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const DomainError& e) {
        err << "invalid parameters: " << e.what() << "\n";
        return kConfigError;
    } catch (const TruncationError& e) {
        err << "truncation error: " << e.what() << "\n";
        return kNumericalError;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << "\n";
        return kNumericalError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kNumericalError;
    }
}

// Executes a configuration and writes its output file.
inline int execute(const ScenarioConfig& cfg, std::ostream& log) {
    if (cfg.model == "verify") {
        const verify::Report report = verify::run(verify_suite(cfg.parameters));
        series::write_atomic(cfg.output_path, report_text(report));
        log << "verify: " << report.records.size() << " comparisons, " << report.failures() << " failed -> "
            << cfg.output_path.string() << "\n";
        return report.passed() ? kSuccess : kVerificationFailed;
    }
    const series::Table table = run_series_model(cfg);
    if (cfg.format == "csv")
        series::write_csv(cfg.output_path, table);
    else
        series::write_atomic(cfg.output_path, table_to_json(cfg.model, table).dump(2) + "\n");
    log << cfg.model << ": " << table.tau.size() << " rows -> " << cfg.output_path.string() << "\n";
    return kSuccess;
}

} // namespace tdc::cli
