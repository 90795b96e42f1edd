// coupling.hpp: time-dependent coupling g(t) and its running integral G(t)
//
// Profiles are defined by G(t); g(t) is always its derivative. Every closed
// form downstream consumes G(t) only, so the integrable divergence of the
// Lindblad-matched rate at t = 0 never enters a computation.

#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <math.h>  // pchip calls isnan unqualified

#include <boost/math/interpolators/pchip.hpp>

#include "tdcoupling/error.hpp"
#include "tdcoupling/numerics.hpp"

namespace tdc {

// g(t) = g0 exp(-gamma t), G(t) = (g0/gamma)(1 - exp(-gamma t)).
struct ExponentialCoupling {
    double g0;
    double gamma;
};

// cos^2 G(t) = exp(-gamma t): populations then follow the Lindblad damped oscillator.
struct LindbladMatchedCoupling {
    double gamma;
};

struct ConstantCoupling {
    double g0;
};

// G(t) sampled on a strictly increasing grid starting at t = 0, interpolated
// with a monotone piecewise-cubic Hermite spline.
class TabulatedCoupling {
public:
    TabulatedCoupling(std::vector<double> t, std::vector<double> integral)
        : t_last_(t.empty() ? 0.0 : t.back()), spline_(make_spline(std::move(t), std::move(integral))) {}

    double integral(double t) const {
        check_range(t);
        return spline_(t);
    }
    double strength(double t) const {
        check_range(t);
        return spline_.prime(t);
    }
    double t_last() const { return t_last_; }

private:
    using Spline = boost::math::interpolators::pchip<std::vector<double>>;

    static Spline make_spline(std::vector<double> t, std::vector<double> integral) {
        if (t.size() != integral.size()) throw DomainError("tabulated coupling: column lengths differ");
        if (t.size() < 4) throw DomainError("tabulated coupling: at least four samples are required");
        if (t.front() != 0.0 || integral.front() != 0.0)
            throw DomainError("tabulated coupling: first sample must be (t=0, G=0)");
        for (std::size_t i = 1; i < t.size(); ++i) {
            if (!(t[i] > t[i - 1])) throw DomainError("tabulated coupling: t must be strictly increasing");
            if (integral[i] < integral[i - 1]) throw DomainError("tabulated coupling: G must be nondecreasing");
        }
        return Spline(std::move(t), std::move(integral));
    }

    void check_range(double t) const {
        if (t > t_last_) throw DomainError("tabulated coupling: t beyond the last sample");
    }

    double t_last_;
    Spline spline_;
};

enum class BathCount { single, two_bath };

class CouplingProfile {
public:
    using Kind = std::variant<ExponentialCoupling, LindbladMatchedCoupling, ConstantCoupling, TabulatedCoupling>;

    static CouplingProfile exponential(double g0, double gamma) {
        detail::require(gamma > 0.0 && std::isfinite(gamma), "exponential coupling: gamma must be positive");
        detail::require(g0 >= 0.0 && std::isfinite(g0), "exponential coupling: g0 must be nonnegative");
        return CouplingProfile(ExponentialCoupling{g0, gamma});
    }
    static CouplingProfile lindblad_matched(double gamma) {
        detail::require(gamma > 0.0 && std::isfinite(gamma), "lindblad-matched coupling: gamma must be positive");
        return CouplingProfile(LindbladMatchedCoupling{gamma});
    }
    static CouplingProfile constant(double g0) {
        detail::require(g0 >= 0.0 && std::isfinite(g0), "constant coupling: g0 must be nonnegative");
        return CouplingProfile(ConstantCoupling{g0});
    }
    static CouplingProfile tabulated(std::vector<double> t, std::vector<double> integral) {
        return CouplingProfile(TabulatedCoupling(std::move(t), std::move(integral)));
    }

    const Kind& kind() const { return kind_; }

    // g(t).
    double strength(double t) const {
        check_time(t);
        return std::visit(
            [t](const auto& k) -> double {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, ExponentialCoupling>) {
                    return k.g0 * std::exp(-k.gamma * t);
                } else if constexpr (std::is_same_v<K, LindbladMatchedCoupling>) {
                    if (t == 0.0) throw DomainError("lindblad-matched coupling: g(t) is singular at origin");
                    // d/dt arccos(exp(-gamma t / 2))
                    const double e = std::exp(-k.gamma * t);
                    return 0.5 * k.gamma * std::sqrt(e) / std::sqrt(-std::expm1(-k.gamma * t));
                } else if constexpr (std::is_same_v<K, ConstantCoupling>) {
                    return k.g0;
                } else {
                    return k.strength(t);
                }
            },
            kind_);
    }

    // G(t) = integral of g over [0, t].
    double integral(double t) const {
        check_time(t);
        return std::visit(
            [t](const auto& k) -> double {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, ExponentialCoupling>) {
                    return -(k.g0 / k.gamma) * std::expm1(-k.gamma * t);
                } else if constexpr (std::is_same_v<K, LindbladMatchedCoupling>) {
                    // arccos(sqrt(e)) == arcsin(sqrt(1 - e)); the latter keeps precision near t = 0
                    const double e = std::exp(-k.gamma * t);
                    return e > 0.5 ? std::asin(std::sqrt(-std::expm1(-k.gamma * t))) : std::acos(std::sqrt(e));
                } else if constexpr (std::is_same_v<K, ConstantCoupling>) {
                    return k.g0 * t;
                } else {
                    return k.integral(t);
                }
            },
            kind_);
    }

    // Largest rate scale of the profile, used to size time steps.
    double rate_scale() const {
        return std::visit(
            [](const auto& k) -> double {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, ExponentialCoupling>) {
                    return std::max(k.g0, k.gamma);
                } else if constexpr (std::is_same_v<K, LindbladMatchedCoupling>) {
                    return k.gamma;
                } else if constexpr (std::is_same_v<K, ConstantCoupling>) {
                    return k.g0;
                } else {
                    return 0.0;
                }
            },
            kind_);
    }

private:
    explicit CouplingProfile(Kind kind) : kind_(std::move(kind)) {}

    static void check_time(double t) {
        if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("coupling profile: time must be finite and >= 0");
    }

    Kind kind_;
};

// Exponential profile whose G(infinity) sits on the first zero of the cosine:
// G(inf) = pi/2 for one bath, sqrt(2) G(inf) = pi/2 for two symmetric baths.
inline CouplingProfile thermalized_exponential(double gamma, BathCount count = BathCount::single) {
    detail::require(gamma > 0.0, "thermalized_exponential: gamma must be positive");
    const double ratio = count == BathCount::single ? kPi / 2.0 : kPi / (2.0 * std::sqrt(2.0));
    return CouplingProfile::exponential(ratio * gamma, gamma);
}

// Two-column CSV `t,G` with a header row.
inline CouplingProfile load_tabulated_profile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open coupling table " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("coupling table " + path.string() + " is empty");
    std::vector<double> t, g;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::istringstream row(line);
        std::string a, b, extra;
        if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || std::getline(row, extra, ','))
            throw ConfigError("coupling table line " + std::to_string(lineno) + ": expected two columns");
        try {
            std::size_t pa = 0, pb = 0;
            t.push_back(std::stod(a, &pa));
            g.push_back(std::stod(b, &pb));
            if (a.find_first_not_of(" \t", pa) != std::string::npos ||
                b.find_first_not_of(" \t", pb) != std::string::npos)
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw ConfigError("coupling table line " + std::to_string(lineno) + ": not a number");
        }
    }
    try {
        return CouplingProfile::tabulated(std::move(t), std::move(g));
    } catch (const DomainError& e) {
        throw ConfigError(std::string(e.what()) + " (" + path.string() + ")");
    }
}

} // namespace tdc
