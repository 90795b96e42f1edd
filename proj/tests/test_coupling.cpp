#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "tdcoupling/coupling.hpp"

using namespace tdc;

namespace {

std::filesystem::path write_table(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path;
}

} // namespace

TEST(Coupling, IntegralStartsAtZero) {
    for (const auto& p : {CouplingProfile::exponential(0.5, 0.2), CouplingProfile::lindblad_matched(0.2),
                          CouplingProfile::constant(0.3)})
        EXPECT_EQ(p.integral(0.0), 0.0);
}

// G(t) against a direct quadrature of g; tanh-sinh never evaluates the
// endpoint where the Lindblad-matched rate diverges.
TEST(Coupling, IntegralMatchesQuadratureOfStrength) {
    boost::math::quadrature::tanh_sinh<double> rule;
    for (const auto& p : {CouplingProfile::exponential(0.5, 0.2), CouplingProfile::lindblad_matched(0.2),
                          CouplingProfile::constant(0.3)})
        for (double t : {0.3, 2.0, 11.0, 40.0}) {
            const double q = rule.integrate([&](double u) { return p.strength(u); }, 0.0, t);
            EXPECT_NEAR(p.integral(t), q, 1e-10) << "t=" << t;
        }
}

TEST(Coupling, LindbladMatchedCosineSquared) {
    const auto p = CouplingProfile::lindblad_matched(0.2);
    for (double t : {1e-9, 1e-4, 0.5, 3.0, 30.0, 200.0}) {
        const double c = std::cos(p.integral(t));
        EXPECT_NEAR(c * c, std::exp(-0.2 * t), 1e-15);
    }
    EXPECT_THROW(p.strength(0.0), DomainError);
}

TEST(Coupling, ThermalizedExponentialLimits) {
    const double gamma = 0.2;
    EXPECT_NEAR(thermalized_exponential(gamma).integral(500.0 / gamma), kPi / 2.0, 1e-14);
    EXPECT_NEAR(std::sqrt(2.0) * thermalized_exponential(gamma, BathCount::two_bath).integral(500.0 / gamma),
                kPi / 2.0, 1e-14);
    EXPECT_NEAR(thermalized_exponential(gamma).strength(0.0), kPi / 2.0 * gamma, 1e-15);
}

TEST(Coupling, RejectsBadParameters) {
    EXPECT_THROW(CouplingProfile::exponential(1.0, 0.0), DomainError);
    EXPECT_THROW(CouplingProfile::exponential(-1.0, 0.2), DomainError);
    EXPECT_THROW(CouplingProfile::lindblad_matched(-0.1), DomainError);
    EXPECT_THROW(CouplingProfile::constant(-0.1), DomainError);
    EXPECT_THROW(CouplingProfile::constant(1.0).integral(-1.0), DomainError);
}

TEST(Coupling, TabulatedFollowsSampledProfile) {
    const auto exact = CouplingProfile::exponential(0.6, 0.2);
    std::string body = "t,G\n";
    for (int i = 0; i <= 400; ++i) {
        const double t = 0.05 * i;
        char line[80];
        std::snprintf(line, sizeof line, "%.17g,%.17g\n", t, exact.integral(t));
        body += line;
    }
    const auto p = load_tabulated_profile(write_table("tdc_table_ok.csv", body));
    for (double t : {0.0, 0.123, 4.4, 19.9}) EXPECT_NEAR(p.integral(t), exact.integral(t), 1e-6);
    // pchip uses one-sided slopes at the ends, so g is only checked inside.
    for (double t : {0.123, 4.4, 15.0}) EXPECT_NEAR(p.strength(t), exact.strength(t), 1e-3);
    EXPECT_THROW(p.integral(20.5), DomainError);
}

TEST(Coupling, TabulatedRejectsMalformedTables) {
    EXPECT_THROW(load_tabulated_profile("/nonexistent/table.csv"), ConfigError);
    EXPECT_THROW(load_tabulated_profile(write_table("tdc_t1.csv", "t,G\n0,0\n1,0.5\n2,0.4\n3,0.6\n")), ConfigError);
    EXPECT_THROW(load_tabulated_profile(write_table("tdc_t2.csv", "t,G\n0,0\n1,x\n2,1\n3,2\n")), ConfigError);
    EXPECT_THROW(load_tabulated_profile(write_table("tdc_t3.csv", "t,G\n0.1,0\n1,1\n2,2\n3,3\n")), ConfigError);
    EXPECT_THROW(load_tabulated_profile(write_table("tdc_t4.csv", "t,G\n0,0\n1,1\n")), ConfigError);
}
