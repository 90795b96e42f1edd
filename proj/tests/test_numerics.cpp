#include <gtest/gtest.h>

#include <random>

#include "tdcoupling/numerics.hpp"

using namespace tdc;

namespace {

ComplexMatrix random_hermitian(Index n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> d;
    ComplexMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) m(i, j) = {d(rng), d(rng)};
    return 0.5 * (m + m.adjoint());
}

} // namespace

TEST(Numerics, KronMatchesDefinition) {
    ComplexMatrix a(2, 2), b(3, 1);
    a << 1.0, 2.0, Complex{0.0, 1.0}, -1.0;
    b << 4.0, 5.0, 6.0;
    const ComplexMatrix k = kron(a, b);
    ASSERT_EQ(k.rows(), 6);
    ASSERT_EQ(k.cols(), 2);
    EXPECT_EQ(k(4, 0), Complex(0.0, 5.0));
    EXPECT_EQ(k(2, 1), Complex(12.0, 0.0));
}

TEST(Numerics, PartialTraceOfProductRecoversFactors) {
    const FockSpace space(6, 1e-3);
    const DensityMatrix ra = thermal_state(space, 0.3).state;
    const ComplexVector psi = coherent_state(FockSpace(12), {0.4, -0.2}).state;
    const ComplexMatrix rb = psi * psi.adjoint();
    const ComplexMatrix joint = kron(ra.matrix(), rb);
    const std::vector<Index> dims{6, 12};
    EXPECT_LT(max_abs_entry(partial_trace_matrix(joint, dims, 0) - ra.matrix()), 1e-14);
    EXPECT_LT(max_abs_entry(partial_trace_matrix(joint, dims, 1) - rb), 1e-14);
}

TEST(Numerics, HermitianAndUnitaryPredicates) {
    const ComplexMatrix h = random_hermitian(5, 1);
    EXPECT_TRUE(is_hermitian(h));
    ComplexMatrix skewed = h;
    skewed(0, 1) += 1e-3;
    EXPECT_FALSE(is_hermitian(skewed));
    EXPECT_TRUE(is_unitary(expm(h, Complex{0.0, -0.7})));
    EXPECT_FALSE(is_unitary(2.0 * ComplexMatrix::Identity(3, 3)));
}

TEST(Numerics, ExpmMatchesTaylorSeries) {
    const ComplexMatrix h = random_hermitian(4, 2);
    const Complex s{0.0, -0.05};
    ComplexMatrix term = ComplexMatrix::Identity(4, 4), sum = term;
    for (int k = 1; k < 30; ++k) {
        term = term * h * s / static_cast<double>(k);
        sum += term;
    }
    EXPECT_LT(max_abs_entry(expm(h, s) - sum), 1e-13);
}

TEST(Numerics, ExpmRejectsNonHermitian) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW(expm(m, 1.0), DomainError);
}

TEST(Numerics, BlockEigenvaluesMatchDirectSolve) {
    // Two decoupled blocks scattered through the index range.
    ComplexMatrix m = ComplexMatrix::Zero(6, 6);
    const ComplexMatrix a = random_hermitian(3, 3), b = random_hermitian(3, 4);
    const std::vector<Index> ia{0, 2, 5}, ib{1, 3, 4};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            m(ia[i], ia[j]) = a(i, j);
            m(ib[i], ib[j]) = b(i, j);
        }
    EXPECT_EQ(sparsity_components(m).size(), 2u);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> direct(m);
    EXPECT_LT((hermitian_eigenvalues(m) - direct.eigenvalues()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Numerics, DensityMatrixValidation) {
    EXPECT_NO_THROW(DensityMatrix(ComplexMatrix::Identity(2, 2) * 0.5));
    EXPECT_THROW(DensityMatrix(ComplexMatrix::Identity(2, 2)), NumericalError);
    ComplexMatrix negative(2, 2);
    negative << 1.2, 0.0, 0.0, -0.2;
    EXPECT_THROW(DensityMatrix{negative}, NumericalError);
    ComplexMatrix skew(2, 2);
    skew << 0.5, 0.1, 0.3, 0.5;
    EXPECT_THROW(DensityMatrix{skew}, NumericalError);
    EXPECT_THROW(DensityMatrix(ComplexMatrix(2, 3)), DomainError);
}

TEST(Numerics, ThermalStateIsGeometric) {
    const double nbar = 0.8;
    const auto th = thermal_state(FockSpace(60), nbar);
    const double q = nbar / (nbar + 1.0);
    for (int k = 0; k < 10; ++k) EXPECT_NEAR(th.state(k, k).real(), (1.0 - q) * std::pow(q, k), 1e-12);
    double mean = 0.0;
    for (int k = 0; k < 60; ++k) mean += k * th.state(k, k).real();
    EXPECT_NEAR(mean, nbar, 1e-9);
    EXPECT_THROW(thermal_state(FockSpace(5), nbar), TruncationError);
}

TEST(Numerics, CoherentStateMoments) {
    const Complex alpha{1.5, -0.5};
    const FockSpace space(40);
    const auto cs = coherent_state(space, alpha);
    EXPECT_NEAR(cs.state.norm(), 1.0, 1e-14);
    const LadderOperators ops = fock_operators(space);
    const Complex mean_a = (cs.state.adjoint() * ops.annihilate * cs.state)(0, 0);
    EXPECT_NEAR(std::abs(mean_a - alpha), 0.0, 1e-10);
    EXPECT_THROW(coherent_state(FockSpace(4), {3.0, 0.0}), TruncationError);
}

TEST(Numerics, TraceDistanceOfOrthogonalStates) {
    ComplexMatrix e = ComplexMatrix::Zero(2, 2), g = ComplexMatrix::Zero(2, 2);
    e(0, 0) = 1.0;
    g(1, 1) = 1.0;
    EXPECT_NEAR(trace_distance(e, g), 1.0, 1e-15);
    EXPECT_NEAR(trace_distance(e, e), 0.0, 1e-15);
}
