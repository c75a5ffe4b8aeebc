#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "relq/state_vector.hpp"

namespace relq {

// The three gate kinds are each their own inverse: HadamardAll and Diffusion
// are involutions, and a FunctionOracle XORs into its output register. A
// circuit is therefore undone by replaying its gates in reverse order.

struct HadamardAll {
    std::string reg;
};

struct Diffusion {
    std::string reg;
};

struct FunctionOracle {
    std::vector<std::string> inputs;
    std::string output;
    std::shared_ptr<const FunctionTable> table;
};

using Gate = std::variant<HadamardAll, FunctionOracle, Diffusion>;

struct Circuit {
    std::vector<Gate> gates;

    Circuit &append(Gate gate) {
        gates.push_back(std::move(gate));
        return *this;
    }

    int oracle_gate_count() const {
        int count = 0;
        for (const auto &g : gates)
            if (std::holds_alternative<FunctionOracle>(g)) ++count;
        return count;
    }
};

inline StateVector apply_gate(const StateVector &state, const Gate &gate) {
    return std::visit(
        [&](const auto &g) -> StateVector {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, HadamardAll>) {
                return apply_hadamard_all(state, g.reg);
            } else if constexpr (std::is_same_v<T, Diffusion>) {
                return apply_diffusion(state, g.reg);
            } else {
                return apply_function_oracle(state, g.inputs, g.output, *g.table);
            }
        },
        gate);
}

struct CircuitRun {
    StateVector state;
    int oracle_queries = 0;
};

/// Forward evolution. `oracle_queries` counts every FunctionOracle applied.
inline CircuitRun run_circuit(const StateVector &input, const Circuit &circuit) {
    StateVector state = input;
    int queries = 0;
    for (const auto &g : circuit.gates) {
        state = apply_gate(state, g);
        if (std::holds_alternative<FunctionOracle>(g)) ++queries;
    }
    return CircuitRun{std::move(state), queries};
}

/// Snapshots of a state as a circuit is traversed. Checkpoint times run from
/// 0 (before the first gate) to gates.size() (after the last); consecutive
/// checkpoints differ by exactly one gate. For a backward record the entries
/// are stored in the order they were produced, from final time down to 0.
struct TrajectoryRecord {
    enum class Direction { forward, backward };

    Direction direction = Direction::forward;
    std::vector<std::pair<int, StateVector>> checkpoints;

    const StateVector &at_time(int t) const {
        for (const auto &[time, state] : checkpoints)
            if (time == t) return state;
        throw InvalidValue("no checkpoint at time " + std::to_string(t));
    }

    const StateVector &initial() const { return at_time(0); }
    const StateVector &final() const { return at_time(static_cast<int>(checkpoints.size()) - 1); }
};

inline TrajectoryRecord run_recorded(const StateVector &input, const Circuit &circuit) {
    TrajectoryRecord record;
    record.direction = TrajectoryRecord::Direction::forward;
    record.checkpoints.emplace_back(0, input);
    StateVector state = input;
    for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
        state = apply_gate(state, circuit.gates[g]);
        record.checkpoints.emplace_back(static_cast<int>(g) + 1, state);
    }
    return record;
}

/// Backward evolution from a (possibly collapsed) final state: applies the
/// inverse gates in reverse order, recording a checkpoint after each. The
/// checkpoint at time 0 is the backdated initial state.
inline TrajectoryRecord backdate(const StateVector &final, const Circuit &circuit) {
    TrajectoryRecord record;
    record.direction = TrajectoryRecord::Direction::backward;
    record.checkpoints.emplace_back(static_cast<int>(circuit.gates.size()), final);
    StateVector state = final;
    for (std::size_t g = circuit.gates.size(); g > 0; --g) {
        state = apply_gate(state, circuit.gates[g - 1]); // every gate is self-inverse
        record.checkpoints.emplace_back(static_cast<int>(g) - 1, state);
    }
    return record;
}

} // namespace relq
