// oracle.hpp: brute-force reference backends used to cross-check the closed forms
//
// * stepped time-ordered unitary evolution on a truncated product space
// * fixed-step RK4 integration of a Lindblad master equation
// * deterministic comparison reports
//
// Nothing in this header knows about the closed-form modules.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Sparse>
#include <json.hpp>

#include "tdcoupling/coupling.hpp"
#include "tdcoupling/error.hpp"
#include "tdcoupling/numerics.hpp"

namespace tdc::oracle {

// ---------------------------------------------------------------------------
// Block-diagonal propagator

using SparseHamiltonian = Eigen::SparseMatrix<Complex>;

using tdc::is_hermitian;

// Entrywise |h - h^dagger| <= tol * max(1, max|h_ij|) over the stored entries.
inline bool is_hermitian(const SparseHamiltonian& h, double tol = 1e-10) {
    if (h.rows() != h.cols() || h.rows() == 0) return false;
    const SparseHamiltonian diff = h - SparseHamiltonian(h.adjoint());
    double largest = 0.0, worst = 0.0;
    for (Index k = 0; k < h.outerSize(); ++k) {
        for (SparseHamiltonian::InnerIterator it(h, k); it; ++it) largest = std::max(largest, std::norm(it.value()));
        for (SparseHamiltonian::InnerIterator it(diff, k); it; ++it) worst = std::max(worst, std::norm(it.value()));
    }
    const double bound = tol * std::max(1.0, std::sqrt(largest));
    return worst <= bound * bound;
}

// Accumulates U <- exp(-i H dt) U. Index sets never connected by any
// Hamiltonian seen so far stay in separate blocks, so number-conserving
// models cost the cube of the largest sector instead of the full dimension.
class BlockPropagator {
public:
    explicit BlockPropagator(Index dim)
        : dim_(dim), block_of_(static_cast<std::size_t>(dim)), slot_(static_cast<std::size_t>(dim), 0) {
        tdc::detail::require(dim > 0, "BlockPropagator: dimension must be positive");
        members_.reserve(static_cast<std::size_t>(dim));
        for (Index i = 0; i < dim; ++i) {
            block_of_[static_cast<std::size_t>(i)] = static_cast<int>(i);
            members_.push_back({i});
            blocks_.push_back(ComplexMatrix::Identity(1, 1));
        }
    }

    Index dim() const { return dim_; }
    std::size_t block_count() const { return blocks_.size(); }

    void step(const ComplexMatrix& h, double dt) { step(SparseHamiltonian(h.sparseView(1.0, 0.0)), dt); }

    void step(const SparseHamiltonian& h, double dt) {
        tdc::detail::require(h.rows() == dim_ && h.cols() == dim_, "BlockPropagator::step: dimension mismatch");
        merge_blocks_coupled_by(h);
        std::vector<ComplexMatrix> subs;
        subs.reserve(blocks_.size());
        for (const auto& idx : members_) {
            const Index n = static_cast<Index>(idx.size());
            subs.push_back(ComplexMatrix::Zero(n, n));
        }
        for (Index col = 0; col < dim_; ++col) {
            const int k = block_of_[static_cast<std::size_t>(col)];
            ComplexMatrix& sub = subs[static_cast<std::size_t>(k)];
            const Index c = slot_[static_cast<std::size_t>(col)];
            for (SparseHamiltonian::InnerIterator it(h, col); it; ++it)
                sub(slot_[static_cast<std::size_t>(it.row())], c) = it.value();
        }
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            const ComplexMatrix& sub = subs[k];
            if (sub.rows() == 1) {
                blocks_[k] *= std::exp(-kI * sub(0, 0).real() * dt);
                continue;
            }
            if (sub.imag().isZero(0.0)) {
                // Real symmetric blocks are common and diagonalise several times faster.
                const Eigen::MatrixXd re = 0.5 * (sub.real() + sub.real().transpose());
                const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(re);
                if (eig.info() != Eigen::Success) throw NumericalError("BlockPropagator: eigensolver failed");
                ComplexVector phases(eig.eigenvalues().size());
                for (Index i = 0; i < phases.size(); ++i) phases(i) = std::exp(-kI * eig.eigenvalues()(i) * dt);
                const ComplexMatrix v = eig.eigenvectors().cast<Complex>();
                blocks_[k] = (v * phases.asDiagonal() * v.transpose()) * blocks_[k];
                continue;
            }
            const HermitianEigen eig = hermitian_eigen(0.5 * (sub + sub.adjoint()));
            ComplexVector phases(eig.values.size());
            for (Index i = 0; i < phases.size(); ++i) phases(i) = std::exp(-kI * eig.values(i) * dt);
            blocks_[k] = (eig.vectors * phases.asDiagonal() * eig.vectors.adjoint()) * blocks_[k];
        }
    }

    ComplexMatrix matrix() const {
        ComplexMatrix u = ComplexMatrix::Zero(dim_, dim_);
        for (std::size_t k = 0; k < blocks_.size(); ++k) u(members_[k], members_[k]) = blocks_[k];
        return u;
    }

    Complex element(Index row, Index col) const {
        const int k = block_of_[static_cast<std::size_t>(row)];
        if (k != block_of_[static_cast<std::size_t>(col)]) return {0.0, 0.0};
        return blocks_[static_cast<std::size_t>(k)](slot_[static_cast<std::size_t>(row)],
                                                    slot_[static_cast<std::size_t>(col)]);
    }

    ComplexVector apply(const ComplexVector& psi) const {
        tdc::detail::require(psi.size() == dim_, "BlockPropagator::apply: dimension mismatch");
        ComplexVector out(dim_);
        for (std::size_t k = 0; k < blocks_.size(); ++k) out(members_[k]) = blocks_[k] * psi(members_[k]);
        return out;
    }

    // U rho U^dagger, block by block.
    ComplexMatrix apply(const ComplexMatrix& rho) const {
        tdc::detail::require(rho.rows() == dim_ && rho.cols() == dim_, "BlockPropagator::apply: dimension mismatch");
        using Eigen::all;
        ComplexMatrix left(dim_, dim_);
        for (std::size_t k = 0; k < blocks_.size(); ++k) left(members_[k], all) = blocks_[k] * rho(members_[k], all);
        ComplexMatrix out(dim_, dim_);
        for (std::size_t k = 0; k < blocks_.size(); ++k)
            out(all, members_[k]) = left(all, members_[k]) * blocks_[k].adjoint();
        return out;
    }

private:
    void merge_blocks_coupled_by(const SparseHamiltonian& h) {
        std::vector<int> parent(blocks_.size());
        std::iota(parent.begin(), parent.end(), 0);
        const auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool merged = false;
        for (Index col = 0; col < dim_; ++col) {
            const int bc = block_of_[static_cast<std::size_t>(col)];
            for (SparseHamiltonian::InnerIterator it(h, col); it; ++it) {
                const int br = block_of_[static_cast<std::size_t>(it.row())];
                if (br == bc || it.value() == Complex{0.0, 0.0}) continue;
                const int ra = find(br), rb = find(bc);
                if (ra != rb) {
                    parent[std::max(ra, rb)] = std::min(ra, rb);
                    merged = true;
                }
            }
        }
        if (!merged) return;

        std::vector<int> new_id(blocks_.size(), -1);
        std::vector<std::vector<int>> groups;
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            const int r = find(static_cast<int>(k));
            if (new_id[r] < 0) {
                new_id[r] = static_cast<int>(groups.size());
                groups.emplace_back();
            }
            groups[new_id[r]].push_back(static_cast<int>(k));
        }

        std::vector<std::vector<Index>> members;
        std::vector<ComplexMatrix> blocks;
        for (const auto& group : groups) {
            std::vector<Index> idx;
            for (int k : group) idx.insert(idx.end(), members_[k].begin(), members_[k].end());
            std::sort(idx.begin(), idx.end());
            ComplexMatrix u = ComplexMatrix::Zero(static_cast<Index>(idx.size()), static_cast<Index>(idx.size()));
            for (int k : group) {
                std::vector<Index> pos;
                for (Index i : members_[k]) pos.push_back(std::lower_bound(idx.begin(), idx.end(), i) - idx.begin());
                u(pos, pos) = blocks_[k];
            }
            members.push_back(std::move(idx));
            blocks.push_back(std::move(u));
        }
        members_ = std::move(members);
        blocks_ = std::move(blocks);
        for (std::size_t k = 0; k < members_.size(); ++k)
            for (std::size_t p = 0; p < members_[k].size(); ++p) {
                const auto i = static_cast<std::size_t>(members_[k][p]);
                block_of_[i] = static_cast<int>(k);
                slot_[i] = static_cast<Index>(p);
            }
    }

    Index dim_;
    std::vector<int> block_of_;
    std::vector<Index> slot_;  // position of each index inside its block
    std::vector<std::vector<Index>> members_;  // sorted
    std::vector<ComplexMatrix> blocks_;
};

// ---------------------------------------------------------------------------
// Stepped unitary evolution

struct StepContext {
    double t_begin;
    double t_end;
    double coupling_increment;  // G(t_end) - G(t_begin); 0 without a profile

    double dt() const { return t_end - t_begin; }
    double midpoint() const { return 0.5 * (t_begin + t_end); }
    // Average coupling over the step, the midpoint-rule stand-in for g(t).
    double coupling_rate() const { return coupling_increment / dt(); }
};

using HamiltonianBuilder = std::function<SparseHamiltonian(const StepContext&)>;

struct SteppedEvolutionPlan {
    HamiltonianBuilder hamiltonian;
    double t_final;
    std::size_t steps;
    DensityMatrix initial;
    std::optional<CouplingProfile> profile;
};

inline constexpr std::size_t kMinSteps = 10;
inline constexpr std::size_t kDefaultMinSteps = 2000;

// ceil(2000 t max_rate / 2 pi), at least 2000.
inline std::size_t default_step_count(double t_final, double max_rate) {
    const double n = std::ceil(2000.0 * t_final * max_rate / (2.0 * kPi));
    return std::max(kDefaultMinSteps, static_cast<std::size_t>(std::max(n, 0.0)));
}

// Smallest step count >= min_steps that puts every checkpoint on the step grid.
inline std::size_t grid_aligned_step_count(std::span<const double> checkpoints, double t_final,
                                           std::size_t min_steps) {
    tdc::detail::require(t_final > 0.0, "grid_aligned_step_count: t_final must be positive");
    for (std::size_t steps = std::max(min_steps, kMinSteps); steps < 64 * std::max(min_steps, kMinSteps); ++steps) {
        const double dt = t_final / static_cast<double>(steps);
        const bool aligned = std::all_of(checkpoints.begin(), checkpoints.end(), [&](double t) {
            return std::abs(std::round(t / dt) * dt - t) <= 1e-9 * std::max(1.0, t);
        });
        if (aligned) return steps;
    }
    throw DomainError("grid_aligned_step_count: checkpoints share no common step grid");
}

namespace detail {

inline std::vector<std::size_t> checkpoint_indices(std::span<const double> times, double t_final, std::size_t steps) {
    std::vector<std::size_t> out;
    const double dt = t_final / static_cast<double>(steps);
    for (double t : times) {
        tdc::detail::require(t >= 0.0 && t <= t_final * (1.0 + 1e-12), "checkpoint outside [0, t_final]");
        const double k = std::round(t / dt);
        if (std::abs(k * dt - t) > 1e-9 * std::max(1.0, t))
            throw DomainError("checkpoint " + tdc::detail::show(t) + " does not fall on the step grid");
        out.push_back(static_cast<std::size_t>(k));
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        tdc::detail::require(out[i] >= out[i - 1], "checkpoints must be nondecreasing");
    return out;
}

} // namespace detail

// Propagators T prod_k exp(-i H_k dt) at each checkpoint time.
inline std::vector<BlockPropagator> stepped_propagators(const HamiltonianBuilder& hamiltonian,
                                                        const CouplingProfile* profile, double t_final,
                                                        std::size_t steps, std::span<const double> checkpoints,
                                                        Index dim) {
    tdc::detail::require(t_final > 0.0 && std::isfinite(t_final), "stepped evolution: t_final must be positive");
    tdc::detail::require(steps >= kMinSteps, "stepped evolution: at least 10 steps are required");
    const auto marks = detail::checkpoint_indices(checkpoints, t_final, steps);

    std::vector<BlockPropagator> out;
    BlockPropagator u(dim);
    std::size_t next = 0;
    const auto emit = [&](std::size_t k) {
        while (next < marks.size() && marks[next] == k) {
            out.push_back(u);
            ++next;
        }
    };
    emit(0);
    double t0 = 0.0;
    double g0 = profile ? profile->integral(0.0) : 0.0;
    for (std::size_t k = 1; k <= steps; ++k) {
        const double t1 = t_final * static_cast<double>(k) / static_cast<double>(steps);
        const double g1 = profile ? profile->integral(t1) : 0.0;
        const SparseHamiltonian h = hamiltonian(StepContext{t0, t1, g1 - g0});
        if (!is_hermitian(h, 1e-10)) throw DomainError("stepped evolution: Hamiltonian builder output is not Hermitian");
        u.step(h, t1 - t0);
        emit(k);
        t0 = t1;
        g0 = g1;
    }
    return out;
}

inline std::vector<DensityMatrix> evolve_stepped_at(const SteppedEvolutionPlan& plan, std::span<const double> times) {
    const CouplingProfile* profile = plan.profile ? &*plan.profile : nullptr;
    const auto props = stepped_propagators(plan.hamiltonian, profile, plan.t_final, plan.steps, times,
                                           plan.initial.dim());
    std::vector<DensityMatrix> out;
    out.reserve(props.size());
    for (const auto& u : props) {
        ComplexMatrix rho = u.apply(plan.initial.matrix());
        const double drift = std::abs(rho.trace() - Complex{1.0, 0.0});
        if (drift > 1e-10) throw NumericalError("stepped evolution: trace drift " + tdc::detail::show(drift));
        out.emplace_back(0.5 * (rho + rho.adjoint()));
    }
    return out;
}

inline DensityMatrix evolve_stepped(const SteppedEvolutionPlan& plan) {
    const double t = plan.t_final;
    return evolve_stepped_at(plan, std::span<const double>(&t, 1)).front();
}

// ---------------------------------------------------------------------------
// Lindblad master equation

struct CollapseChannel {
    ComplexMatrix op;
    double rate;
};

struct LindbladPlan {
    ComplexMatrix h0;
    std::vector<CollapseChannel> collapse;
    double t_final;
    std::size_t steps;
    DensityMatrix initial;
};

// d rho/dt = -i[H, rho] + sum_k rate_k (L rho L^+ - {L^+ L, rho}/2)
class LindbladGenerator {
public:
    LindbladGenerator(ComplexMatrix h0, std::vector<CollapseChannel> collapse)
        : h0_(std::move(h0)), collapse_(std::move(collapse)) {
        tdc::detail::require(is_hermitian(h0_, 1e-10), "Lindblad: H0 must be Hermitian");
        decay_ = ComplexMatrix::Zero(h0_.rows(), h0_.cols());
        for (const auto& c : collapse_) {
            tdc::detail::require(c.rate >= 0.0, "Lindblad: rates must be nonnegative");
            tdc::detail::require(c.op.rows() == h0_.rows() && c.op.cols() == h0_.cols(),
                            "Lindblad: collapse operator dimension mismatch");
            decay_ += c.rate * (c.op.adjoint() * c.op);
        }
        // rho' = -i (H_eff rho - rho H_eff^+) + jumps, H_eff = H0 - (i/2) decay
        effective_ = h0_ - 0.5 * kI * decay_;
    }

    ComplexMatrix operator()(const ComplexMatrix& rho) const {
        const ComplexMatrix hr = effective_ * rho;
        ComplexMatrix out = -kI * hr + kI * hr.adjoint();
        for (const auto& c : collapse_)
            if (c.rate > 0.0) out += c.rate * (c.op * rho * c.op.adjoint());
        return out;
    }

private:
    ComplexMatrix h0_;
    std::vector<CollapseChannel> collapse_;
    ComplexMatrix decay_;
    ComplexMatrix effective_;
};

inline std::vector<DensityMatrix> evolve_lindblad_at(const LindbladPlan& plan, std::span<const double> times) {
    tdc::detail::require(plan.t_final > 0.0 && std::isfinite(plan.t_final), "Lindblad: t_final must be positive");
    tdc::detail::require(plan.steps >= 1, "Lindblad: at least one step is required");
    const LindbladGenerator rhs(plan.h0, plan.collapse);
    const auto marks = detail::checkpoint_indices(times, plan.t_final, plan.steps);
    const double dt = plan.t_final / static_cast<double>(plan.steps);

    std::vector<DensityMatrix> out;
    ComplexMatrix rho = plan.initial.matrix();
    std::size_t next = 0;
    const auto emit = [&](std::size_t k) {
        while (next < marks.size() && marks[next] == k) {
            const double drift = std::abs(rho.trace() - Complex{1.0, 0.0});
            if (drift > 1e-9) throw NumericalError("Lindblad: trace drift " + tdc::detail::show(drift) + "; step too large");
            const ComplexMatrix sym = 0.5 * (rho + rho.adjoint());
            const double lowest = hermitian_eigenvalues(sym).minCoeff();
            if (lowest < -1e-8)
                throw NumericalError("Lindblad: positivity lost (" + tdc::detail::show(lowest) + "); step too large");
            out.emplace_back(sym / sym.trace());
            ++next;
        }
    };
    emit(0);
    for (std::size_t k = 1; k <= plan.steps; ++k) {
        const ComplexMatrix k1 = rhs(rho);
        const ComplexMatrix k2 = rhs(rho + 0.5 * dt * k1);
        const ComplexMatrix k3 = rhs(rho + 0.5 * dt * k2);
        const ComplexMatrix k4 = rhs(rho + dt * k3);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!rho.allFinite()) throw NumericalError("Lindblad: non-finite state; step too large");
        emit(k);
    }
    return out;
}

inline DensityMatrix evolve_lindblad(const LindbladPlan& plan) {
    const double t = plan.t_final;
    return evolve_lindblad_at(plan, std::span<const double>(&t, 1)).front();
}

// ---------------------------------------------------------------------------
// Comparison reports

struct ComparisonReport {
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;
    std::size_t abs_index = 0;
    std::size_t rel_index = 0;

    nlohmann::ordered_json to_json() const {
        return {{"max_abs_err", max_abs_err},
                {"max_rel_err", max_rel_err},
                {"abs_index", abs_index},
                {"rel_index", rel_index}};
    }
};

// Relative error is |a - o| / max(|a|, |o|), and 0 where both vanish.
inline ComparisonReport compare(std::span<const double> analytic, std::span<const double> oracle) {
    if (analytic.size() != oracle.size()) throw DomainError("compare: series lengths differ");
    ComparisonReport r;
    for (std::size_t i = 0; i < analytic.size(); ++i) {
        const double abs_err = std::abs(analytic[i] - oracle[i]);
        const double scale = std::max(std::abs(analytic[i]), std::abs(oracle[i]));
        const double rel_err = scale > 0.0 ? abs_err / scale : 0.0;
        if (abs_err > r.max_abs_err) {
            r.max_abs_err = abs_err;
            r.abs_index = i;
        }
        if (rel_err > r.max_rel_err) {
            r.max_rel_err = rel_err;
            r.rel_index = i;
        }
    }
    return r;
}

// One line of a verification report.
struct ComparisonRecord {
    std::string scenario;
    std::string quantity;
    double t;
    double analytic;
    double oracle;
    double abs_err;
    double tol;

    static ComparisonRecord make(std::string scenario, std::string quantity, double t, double analytic,
                                 double oracle, double tol) {
        return {std::move(scenario), std::move(quantity), t, analytic, oracle, std::abs(analytic - oracle), tol};
    }

    bool passed() const { return std::isfinite(abs_err) && abs_err <= tol; }

    nlohmann::ordered_json to_json() const {
        return {{"scenario", scenario}, {"quantity", quantity}, {"t", t},           {"analytic", analytic},
                {"oracle", oracle},     {"abs_err", abs_err},   {"tol", tol}};
    }
};

} // namespace tdc::oracle
