// Prints how a coherent state relaxes into a zero-temperature bath, next to
// a qubit that exchanges with a ground-state twin.

#include <cstdio>

#include "tdcoupling/oscillator.hpp"
#include "tdcoupling/twolevel.hpp"

int main() {
    const double gamma = 0.2;
    tdc::oscillator::Scenario osc{1.0, tdc::thermalized_exponential(gamma), tdc::BathSpec::zero_temperature(),
                                  tdc::oscillator::CoherentInitial{{2.0, 0.0}}};
    const auto qubit0 = tdc::twolevel::TwoLevelState::make(1.0, {0.0, 0.0});
    const auto bath = tdc::twolevel::QubitBathSpec::ground_state();

    std::printf("%6s %12s %12s %12s %12s\n", "tau", "Re alpha", "Im alpha", "energy", "qubit P_e");
    for (int i = 0; i <= 10; ++i) {
        const double tau = 0.5 * i;
        const double t = tau / gamma;
        const auto alpha = tdc::oscillator::husimi_peak(osc, t);
        const auto q = tdc::twolevel::reduced_qubit(qubit0, bath, 1.0, osc.profile, t);
        std::printf("%6.2f %12.6f %12.6f %12.6f %12.6f\n", tau, alpha.real(), alpha.imag(),
                    tdc::oscillator::energy(osc, t), q.excited);
    }
}
