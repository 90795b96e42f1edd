// numerics.hpp: small dense complex linear algebra and truncated Fock-space constructors
//
// Everything here is a pure function of its arguments. Matrices are Eigen
// dense complex matrices; the density-matrix wrapper validates on construction.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tdcoupling/error.hpp"

namespace tdc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

// Default probability mass a Fock truncation may discard.
inline constexpr double kDefaultTailThreshold = 1e-10;

// ---------------------------------------------------------------------------
// Predicates

inline double max_abs_entry(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : std::sqrt(m.cwiseAbs2().maxCoeff());
}

inline bool is_square(const ComplexMatrix& m) { return m.rows() == m.cols() && m.rows() > 0; }

// Entrywise |m - m^dagger| <= tol * max(1, max|m_ij|).
inline bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10) {
    if (!is_square(m)) return false;
    // One tiled pass so that m(i, j) and m(j, i) stay cache resident.
    constexpr Index tile = 32;
    const Index n = m.rows();
    double largest = 0.0, worst = 0.0;
    for (Index j0 = 0; j0 < n; j0 += tile)
        for (Index i0 = 0; i0 <= j0; i0 += tile)
            for (Index j = j0; j < std::min(n, j0 + tile); ++j)
                for (Index i = i0; i < std::min(j + 1, i0 + tile); ++i) {
                    largest = std::max({largest, std::norm(m(i, j)), std::norm(m(j, i))});
                    worst = std::max(worst, std::norm(m(i, j) - std::conj(m(j, i))));
                }
    const double bound = tol * std::max(1.0, std::sqrt(largest));
    return worst <= bound * bound;
}

inline bool is_unitary(const ComplexMatrix& m, double tol = 1e-10) {
    if (!is_square(m)) return false;
    const ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
    return max_abs_entry(m * m.adjoint() - id) <= tol;
}

inline Complex trace(const ComplexMatrix& m) { return m.trace(); }

// Connected components of the nonzero pattern of m, each sorted ascending.
// A matrix that only couples indices inside each component is block diagonal
// up to a permutation.
inline std::vector<std::vector<Index>> sparsity_components(const ComplexMatrix& m) {
    const Index n = m.rows();
    std::vector<Index> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), Index{0});
    const auto find = [&](Index x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i)
            if (i != j && m(i, j) != Complex{0.0, 0.0}) {
                const Index ri = find(i), rj = find(j);
                if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
            }
    std::vector<std::vector<Index>> out;
    std::vector<Index> slot(static_cast<std::size_t>(n), -1);
    for (Index i = 0; i < n; ++i) {
        const Index r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<Index>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot[r])].push_back(i);
    }
    return out;
}

// Eigenvalues of the Hermitian part, ascending. Eigen's self-adjoint solver
// (Householder tridiagonalisation + implicit QL) is deterministic. Exactly
// block-diagonal inputs are diagonalised block by block.
inline RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
    detail::require(is_square(m), "hermitian_eigenvalues: matrix must be square");
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    const auto solve = [](const ComplexMatrix& h) -> RealVector {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) throw NumericalError("hermitian_eigenvalues: solver failed");
        return solver.eigenvalues();
    };
    const auto blocks = sparsity_components(sym);
    if (blocks.size() == 1) return solve(sym);
    RealVector out(sym.rows());
    Index pos = 0;
    for (const auto& idx : blocks) {
        const Index k = static_cast<Index>(idx.size());
        out.segment(pos, k) = k == 1 ? RealVector::Constant(1, sym(idx[0], idx[0]).real()) : solve(sym(idx, idx));
        pos += k;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_positive_semidefinite(const ComplexMatrix& m, double tol = 1e-9) {
    return hermitian_eigenvalues(m).minCoeff() >= -tol;
}

// ---------------------------------------------------------------------------
// Density matrices

class DensityMatrix {
public:
    static constexpr double kTraceTol = 1e-10;
    static constexpr double kHermitianTol = 1e-10;
    static constexpr double kEigenTol = 1e-9;

    explicit DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
        if (!is_square(mat_)) throw DomainError("DensityMatrix: matrix must be square and non-empty");
        if (!mat_.allFinite()) throw NumericalError("DensityMatrix: non-finite entries");
        if (std::abs(mat_.trace() - Complex{1.0, 0.0}) > kTraceTol)
            throw NumericalError("DensityMatrix: trace deviates from 1 by " +
                                 detail::show(std::abs(mat_.trace() - 1.0)));
        if (!is_hermitian(mat_, kHermitianTol)) throw NumericalError("DensityMatrix: matrix is not Hermitian");
        const double lowest = hermitian_eigenvalues(mat_).minCoeff();
        if (lowest < -kEigenTol)
            throw NumericalError("DensityMatrix: negative eigenvalue " + detail::show(lowest));
    }

    static DensityMatrix pure(const ComplexVector& psi) {
        const double norm = psi.norm();
        if (!(norm > 0.0)) throw DomainError("DensityMatrix::pure: zero vector");
        const ComplexVector u = psi / norm;
        return DensityMatrix(u * u.adjoint());
    }

    const ComplexMatrix& matrix() const { return mat_; }
    Index dim() const { return mat_.rows(); }
    Complex operator()(Index i, Index j) const { return mat_(i, j); }

    Complex expectation(const ComplexMatrix& op) const {
        detail::require(op.rows() == dim() && op.cols() == dim(), "expectation: dimension mismatch");
        return (op * mat_).trace();
    }

private:
    ComplexMatrix mat_;
};

// ---------------------------------------------------------------------------
// Tensor products and partial traces

// General (not necessarily square) Kronecker product.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors) {
    detail::require(factors.size() > 0, "kron: empty factor list");
    auto it = factors.begin();
    ComplexMatrix out = *it++;
    for (; it != factors.end(); ++it) out = kron(out, *it);
    return out;
}

inline ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.size() * b.size());
    for (Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

// Reduced matrix on factor `keep` of a row-major tensor product with the given
// factor dimensions. Works on any square operator, not only states.
inline ComplexMatrix partial_trace_matrix(const ComplexMatrix& m, std::span<const Index> dims, std::size_t keep) {
    detail::require(!dims.empty() && keep < dims.size(), "partial_trace: keep index out of range");
    Index total = 1;
    for (Index d : dims) {
        detail::require(d > 0, "partial_trace: dimensions must be positive");
        total *= d;
    }
    detail::require(m.rows() == total && m.cols() == total, "partial_trace: product of dims does not match matrix");

    const Index dk = dims[keep];
    Index inner = 1;  // stride of the kept factor
    for (std::size_t i = keep + 1; i < dims.size(); ++i) inner *= dims[i];
    const Index outer = total / (dk * inner);

    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    for (Index o = 0; o < outer; ++o)
        for (Index in = 0; in < inner; ++in) {
            const Index base = o * dk * inner + in;
            for (Index a = 0; a < dk; ++a)
                for (Index b = 0; b < dk; ++b) out(a, b) += m(base + a * inner, base + b * inner);
        }
    return out;
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const Index> dims, std::size_t keep) {
    return DensityMatrix(partial_trace_matrix(rho.matrix(), dims, keep));
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<Index> dims, std::size_t keep) {
    const std::vector<Index> d(dims);
    return partial_trace(rho, std::span<const Index>(d), keep);
}

// ---------------------------------------------------------------------------
// Matrix exponential of a Hermitian matrix

struct HermitianEigen {
    RealVector values;
    ComplexMatrix vectors;
};

inline HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) throw NumericalError("hermitian_eigen: solver failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

// exp(scale * h) for Hermitian h, through h = V diag(lambda) V^dagger.
inline ComplexMatrix expm(const ComplexMatrix& h, Complex scale) {
    if (!is_hermitian(h, 1e-10)) throw DomainError("expm: input matrix is not Hermitian");
    const ComplexMatrix sym = 0.5 * (h + h.adjoint());
    const HermitianEigen eig = hermitian_eigen(sym);
    ComplexVector phases(eig.values.size());
    for (Index i = 0; i < phases.size(); ++i) phases(i) = std::exp(scale * eig.values(i));
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

// ---------------------------------------------------------------------------
// Truncated bosonic mode

class FockSpace {
public:
    explicit FockSpace(Index ncut, double tail_threshold = kDefaultTailThreshold)
        : ncut_(ncut), tail_threshold_(tail_threshold) {
        detail::require(ncut >= 2, "FockSpace: ncut must be at least 2");
        detail::require(tail_threshold >= 0.0, "FockSpace: tail threshold must be nonnegative");
    }

    Index ncut() const { return ncut_; }
    double tail_threshold() const { return tail_threshold_; }

private:
    Index ncut_;
    double tail_threshold_;
};

struct LadderOperators {
    ComplexMatrix annihilate;
    ComplexMatrix create;
    ComplexMatrix number;
};

inline LadderOperators fock_operators(const FockSpace& space) {
    const Index n = space.ncut();
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    for (Index k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    ComplexMatrix ad = a.adjoint();
    ComplexMatrix num = ad * a;
    return {std::move(a), std::move(ad), std::move(num)};
}

// A truncated state together with the probability mass the cutoff dropped.
template <class State>
struct Truncated {
    State state;
    double tail_mass;
};

inline Truncated<DensityMatrix> thermal_state(const FockSpace& space, double nbar) {
    detail::require(nbar >= 0.0 && std::isfinite(nbar), "thermal_state: nbar must be finite and nonnegative");
    const Index n = space.ncut();
    const double ratio = nbar / (nbar + 1.0);
    const double tail = std::pow(ratio, static_cast<double>(n));
    if (tail > space.tail_threshold())
        throw TruncationError("thermal_state: tail mass " + detail::show(tail) + " exceeds threshold at ncut=" +
                              std::to_string(n));
    RealVector p(n);
    double w = 1.0;
    for (Index k = 0; k < n; ++k, w *= ratio) p(k) = w;
    p /= p.sum();
    return {DensityMatrix(p.cast<Complex>().asDiagonal().toDenseMatrix()), tail};
}

inline Truncated<ComplexVector> coherent_state(const FockSpace& space, Complex alpha) {
    detail::require(std::isfinite(alpha.real()) && std::isfinite(alpha.imag()), "coherent_state: non-finite alpha");
    const Index n = space.ncut();
    const double mean = std::norm(alpha);
    ComplexVector psi(n);
    Complex amp = std::exp(-0.5 * mean);
    for (Index k = 0; k < n; ++k) {
        psi(k) = amp;
        amp *= alpha / std::sqrt(static_cast<double>(k + 1));
    }
    // Poisson weights beyond the cutoff, summed until they stop contributing.
    double tail = 0.0;
    double term = std::norm(amp);
    for (Index k = n; term > 0.0; ++k) {
        tail += term;
        if (static_cast<double>(k) > mean && term < 1e-18 * std::max(tail, 1e-300)) break;
        term *= mean / static_cast<double>(k + 1);
        if (k > n + 100000) break;
    }
    if (tail > space.tail_threshold())
        throw TruncationError("coherent_state: tail mass " + detail::show(tail) + " exceeds threshold at ncut=" +
                              std::to_string(n));
    psi /= psi.norm();
    return {std::move(psi), tail};
}

// Half the trace norm of the difference; eigenvalue definition.
inline double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    return 0.5 * hermitian_eigenvalues(a - b).cwiseAbs().sum();
}

} // namespace tdc
