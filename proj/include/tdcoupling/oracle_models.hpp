// oracle_models.hpp: truncated-space Hamiltonians for the brute-force oracle
//
// Each model builds its operators once and hands out a HamiltonianBuilder
// that adds the per-step coupling rate G-increment / dt to the free part.

#pragma once

#include <array>
#include <memory>
#include <vector>

#include "tdcoupling/numerics.hpp"
#include "tdcoupling/oracle.hpp"

namespace tdc::oracle::models {

// op acting on factor `position` of a product space with the given factor dimensions.
inline ComplexMatrix embed(const ComplexMatrix& op, std::size_t position, std::span<const Index> dims) {
    tdc::detail::require(position < dims.size(), "embed: position out of range");
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (std::size_t i = 0; i < dims.size(); ++i)
        out = kron(out, i == position ? op : ComplexMatrix::Identity(dims[i], dims[i]));
    return out;
}

namespace detail {

struct FreePlusExchange {
    SparseHamiltonian free;      // time-independent part
    SparseHamiltonian exchange;  // multiplied by g(t)
};

inline SparseHamiltonian sparse(const ComplexMatrix& m) { return m.sparseView(1.0, 0.0); }

inline HamiltonianBuilder make_builder(std::shared_ptr<const FreePlusExchange> parts) {
    return [parts = std::move(parts)](const StepContext& step) -> SparseHamiltonian {
        return SparseHamiltonian(parts->free + step.coupling_rate() * parts->exchange);
    };
}

} // namespace detail

// Main oscillator a (first factor) exchanging quanta with bath oscillator b.
class OscillatorPair {
public:
    explicit OscillatorPair(FockSpace space) : space_(space) {
        const LadderOperators ops = fock_operators(space_);
        const Index n = space_.ncut();
        const std::vector<Index> dims{n, n};
        a_ = embed(ops.annihilate, 0, dims);
        b_ = embed(ops.annihilate, 1, dims);
        number_a_ = embed(ops.number, 0, dims);
        number_b_ = embed(ops.number, 1, dims);
        exchange_ = kron(ops.annihilate, ops.create) + kron(ops.create, ops.annihilate);
    }

    const FockSpace& space() const { return space_; }
    Index dim() const { return space_.ncut() * space_.ncut(); }
    std::vector<Index> dims() const { return {space_.ncut(), space_.ncut()}; }
    const ComplexMatrix& a() const { return a_; }
    const ComplexMatrix& b() const { return b_; }
    const ComplexMatrix& number_a() const { return number_a_; }

    // w0 (a^+a + b^+b) + g (a b^+ + a^+ b)
    HamiltonianBuilder hamiltonian(double omega0) const {
        auto parts = std::make_shared<detail::FreePlusExchange>();
        parts->free = detail::sparse(omega0 * (number_a_ + number_b_));
        parts->exchange = detail::sparse(exchange_);
        return detail::make_builder(std::move(parts));
    }

private:
    FockSpace space_;
    ComplexMatrix a_, b_, number_a_, number_b_, exchange_;
};

// Oscillator a coupled to two bath oscillators b and c.
class ThreeModes {
public:
    explicit ThreeModes(FockSpace space) : space_(space) {
        const LadderOperators ops = fock_operators(space_);
        const Index n = space_.ncut();
        const std::vector<Index> d{n, n, n};
        for (std::size_t i = 0; i < 3; ++i) {
            modes_[i] = embed(ops.annihilate, i, d);
            numbers_[i] = embed(ops.number, i, d);
        }
        const ComplexMatrix id = ComplexMatrix::Identity(n, n);
        exchange_ = kron({ops.annihilate, ops.create, id}) + kron({ops.create, ops.annihilate, id}) +
                    kron({ops.annihilate, id, ops.create}) + kron({ops.create, id, ops.annihilate});
    }

    const FockSpace& space() const { return space_; }
    Index dim() const { return space_.ncut() * space_.ncut() * space_.ncut(); }
    std::vector<Index> dims() const { return {space_.ncut(), space_.ncut(), space_.ncut()}; }
    const ComplexMatrix& mode(std::size_t i) const { return modes_.at(i); }
    const ComplexMatrix& number(std::size_t i) const { return numbers_.at(i); }

    // Basis index of the state with occupations (na, nb, nc).
    Index index(Index na, Index nb, Index nc) const {
        const Index n = space_.ncut();
        return (na * n + nb) * n + nc;
    }

    // w (a^+a + b^+b + c^+c) + g (a b^+ + a^+ b + a c^+ + a^+ c)
    HamiltonianBuilder hamiltonian(double omega) const {
        auto parts = std::make_shared<detail::FreePlusExchange>();
        parts->free = detail::sparse(omega * (numbers_[0] + numbers_[1] + numbers_[2]));
        parts->exchange = detail::sparse(exchange_);
        return detail::make_builder(std::move(parts));
    }

private:
    FockSpace space_;
    std::array<ComplexMatrix, 3> modes_, numbers_;
    ComplexMatrix exchange_;
};

// Single-qubit operators in the (excited, ground) basis.
struct Pauli {
    static ComplexMatrix z() { return (ComplexMatrix(2, 2) << 1.0, 0.0, 0.0, -1.0).finished(); }
    static ComplexMatrix x() { return (ComplexMatrix(2, 2) << 0.0, 1.0, 1.0, 0.0).finished(); }
    static ComplexMatrix raising() { return (ComplexMatrix(2, 2) << 0.0, 1.0, 0.0, 0.0).finished(); }
    static ComplexMatrix lowering() { return (ComplexMatrix(2, 2) << 0.0, 0.0, 1.0, 0.0).finished(); }
};

// System qubit (first factor) and twin bath qubit.
// (w0/2)(sz1 + sz2) + g (s-1 s+2 + s+1 s-2)
inline HamiltonianBuilder twin_qubit_hamiltonian(double omega0) {
    auto parts = std::make_shared<detail::FreePlusExchange>();
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    parts->free = detail::sparse(0.5 * omega0 * (kron(Pauli::z(), id) + kron(id, Pauli::z())));
    parts->exchange = detail::sparse(kron(Pauli::lowering(), Pauli::raising()) + kron(Pauli::raising(), Pauli::lowering()));
    return detail::make_builder(std::move(parts));
}

// Qubit (first factor) dephased by a bosonic mode.
// (w0/2) sz + w b^+b + g sz (b + b^+)
class QubitMode {
public:
    explicit QubitMode(FockSpace space) : space_(space) {}

    const FockSpace& space() const { return space_; }
    Index dim() const { return 2 * space_.ncut(); }
    std::vector<Index> dims() const { return {2, space_.ncut()}; }

    HamiltonianBuilder hamiltonian(double omega0, double omega) const {
        const LadderOperators ops = fock_operators(space_);
        const ComplexMatrix id_q = ComplexMatrix::Identity(2, 2);
        const ComplexMatrix id_m = ComplexMatrix::Identity(space_.ncut(), space_.ncut());
        auto parts = std::make_shared<detail::FreePlusExchange>();
        parts->free = detail::sparse(0.5 * omega0 * kron(Pauli::z(), id_m) + omega * kron(id_q, ops.number));
        parts->exchange = detail::sparse(kron(Pauli::z(), ComplexMatrix(ops.annihilate + ops.create)));
        return detail::make_builder(std::move(parts));
    }

private:
    FockSpace space_;
};

// Thermal damping channels of one mode: a at rate gamma (nbar + 1), a^+ at gamma nbar.
inline std::vector<CollapseChannel> thermal_damping(const LadderOperators& ops, double gamma, double nbar) {
    std::vector<CollapseChannel> out{{ops.annihilate, gamma * (nbar + 1.0)}};
    if (nbar > 0.0) out.push_back({ops.create, gamma * nbar});
    return out;
}

} // namespace tdc::oracle::models
