#include <gtest/gtest.h>

#include "tdcoupling/oscillator.hpp"

using namespace tdc;
using oscillator::CoherentInitial;
using oscillator::Scenario;
using oscillator::ThermalInitial;

namespace {

Scenario thermal(double na, double nb, CouplingProfile p = thermalized_exponential(0.2)) {
    return Scenario{1.0, std::move(p), BathSpec::from_nbar(nb), ThermalInitial{BathSpec::from_nbar(na)}};
}

} // namespace

TEST(Oscillator, MixingCoefficientsAtOrigin) {
    const auto c = oscillator::mixing_coefficients(thermal(0.5, 0.1), 0.0);
    EXPECT_NEAR(std::abs(c.f - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(c.h), 0.0, 1e-15);
}

TEST(Oscillator, PopulationsFormADistribution) {
    const Scenario s = thermal(1.3, 0.4);
    for (double tau : {0.0, 0.3, 1.0, 5.0}) {
        double sum = 0.0, mean = 0.0;
        for (int n = 0; n < 400; ++n) {
            const double p = oscillator::population(s, n, tau / 0.2);
            EXPECT_GE(p, 0.0);
            sum += p;
            mean += n * p;
        }
        EXPECT_NEAR(sum, 1.0, 1e-12);
        EXPECT_NEAR(mean, oscillator::mean_occupation(s, tau / 0.2), 1e-10);
    }
}

TEST(Oscillator, MeanOccupationInterpolatesBetweenBaths) {
    const Scenario s = thermal(2.0, 0.5);
    EXPECT_NEAR(oscillator::mean_occupation(s, 0.0), 2.0, 1e-15);
    EXPECT_NEAR(oscillator::mean_occupation(s, 60.0 / 0.2), 0.5, 1e-12);
}

TEST(Oscillator, CoherentObservablesAtOrigin) {
    const Scenario s{1.0, thermalized_exponential(0.2), BathSpec::from_nbar(0.2), CoherentInitial{{1.0, 2.0}}};
    EXPECT_NEAR(oscillator::position(s, 0.0), std::sqrt(2.0) * 1.0, 1e-14);
    EXPECT_NEAR(oscillator::energy(s, 0.0), 5.5, 1e-14);
    EXPECT_NEAR(std::abs(oscillator::husimi_peak(s, 0.0) - Complex{1.0, 2.0}), 0.0, 1e-15);
}

TEST(Oscillator, HeatDistributionAtOriginIsDelta) {
    const auto d = oscillator::heat_distribution(thermal(0.8, 0.3), 0.0, 20);
    EXPECT_NEAR(d.probability(0), 1.0, 1e-12);
    EXPECT_NEAR(d.probability(1), 0.0, 1e-12);
    EXPECT_EQ(d.probability(99), 0.0);
}

// First moment of the heat equals the change of the system energy.
TEST(Oscillator, HeatMeanIsEnergyChange) {
    const Scenario s = thermal(0.8, 0.3);
    for (double tau : {0.5, 2.0}) {
        const double t = tau / 0.2;
        const auto d = oscillator::heat_distribution(s, t, 60);
        EXPECT_NEAR(d.mean(), oscillator::mean_occupation(s, t) - 0.8, 1e-10);
        EXPECT_NEAR(d.raw_total, 1.0, 1e-10);
    }
}

TEST(Oscillator, HeatDistributionTruncationIsReported) {
    EXPECT_THROW(oscillator::heat_distribution(thermal(5.0, 4.0), 3.0 / 0.2, 5), TruncationError);
}

TEST(Oscillator, InitialStateKindIsChecked) {
    const Scenario s = thermal(0.5, 0.1);
    EXPECT_THROW(oscillator::husimi_peak(s, 1.0), DomainError);
    const Scenario c{1.0, thermalized_exponential(0.2), BathSpec::zero_temperature(), CoherentInitial{{1.0, 0.0}}};
    EXPECT_THROW(oscillator::heat_characteristic(c, 0.1, 1.0), DomainError);
    EXPECT_THROW(oscillator::mean_occupation(s, -1.0), DomainError);
}
