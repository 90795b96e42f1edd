// bath.hpp: thermal occupation of a single bosonic mode

#pragma once

#include <cmath>
#include <limits>

#include "tdcoupling/error.hpp"

namespace tdc {

// A thermal mode described by the product beta*omega (hbar = k_B = 1).
// beta*omega = +inf is the zero-temperature case, nbar = 0.
class BathSpec {
public:
    static BathSpec from_beta_omega(double beta_omega) {
        detail::require(beta_omega > 0.0, "BathSpec: beta*omega must be positive (or +inf)");
        const double nbar = std::isinf(beta_omega) ? 0.0 : 1.0 / std::expm1(beta_omega);
        return BathSpec(beta_omega, nbar);
    }
    static BathSpec from_beta(double beta, double omega) {
        detail::require(omega > 0.0, "BathSpec: mode frequency must be positive");
        return from_beta_omega(std::isinf(beta) ? beta : beta * omega);
    }
    static BathSpec from_nbar(double nbar) {
        detail::require(nbar >= 0.0 && std::isfinite(nbar), "BathSpec: nbar must be finite and nonnegative");
        const double x = nbar == 0.0 ? std::numeric_limits<double>::infinity() : std::log1p(1.0 / nbar);
        return BathSpec(x, nbar);
    }
    static BathSpec zero_temperature() { return from_nbar(0.0); }

    double beta_omega() const { return beta_omega_; }
    double nbar() const { return nbar_; }
    // coth(beta*omega/2) == 2 nbar + 1, finite at beta = inf.
    double coth_half() const { return 2.0 * nbar_ + 1.0; }
    // exp(-beta*omega) == nbar / (nbar + 1).
    double boltzmann_ratio() const { return nbar_ / (nbar_ + 1.0); }

private:
    BathSpec(double beta_omega, double nbar) : beta_omega_(beta_omega), nbar_(nbar) {}

    double beta_omega_;
    double nbar_;
};

} // namespace tdc
