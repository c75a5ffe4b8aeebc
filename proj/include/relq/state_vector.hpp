#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relq/bits.hpp"
#include "relq/errors.hpp"
#include "relq/function_table.hpp"
#include "relq/layout.hpp"
#include "relq/rng.hpp"

namespace relq {

using cdouble = std::complex<double>;

constexpr double kNormTolerance = 1e-9;      // probability sums
constexpr double kIdentityTolerance = 1e-12; // algebraic self-inverse identities

/// Dense complex amplitudes over the computational basis of a register layout.
/// Operations on states are free functions that take the input by const
/// reference and return a fresh value; a state is never mutated through a
/// const reference, so values can be shared freely across threads.
class StateVector {
  public:
    StateVector(RegisterLayout layout, std::vector<cdouble> amplitudes)
        : layout_(std::move(layout)), amps_(std::move(amplitudes)) {
        if (amps_.size() != layout_.dimension())
            throw InvalidValue("amplitude count does not match the layout dimension");
    }

    /// Basis state with the given register values (bit strings, MSB first).
    static StateVector basis(const RegisterLayout &layout,
                             const std::map<std::string, std::string> &values) {
        std::uint64_t index = 0;
        for (const auto &reg : layout.registers()) {
            auto it = values.find(reg.name);
            if (it == values.end())
                throw InvalidValue("no value given for register '" + reg.name + "'");
            index |= parse_bits(it->second, reg.width) << layout.shift(reg.name);
        }
        if (values.size() != layout.registers().size())
            throw InvalidValue("values name a register that is not in the layout");
        std::vector<cdouble> amps(layout.dimension(), cdouble{0.0, 0.0});
        amps[index] = cdouble{1.0, 0.0};
        return StateVector(layout, std::move(amps));
    }

    const RegisterLayout &layout() const { return layout_; }
    const std::vector<cdouble> &amplitudes() const { return amps_; }
    std::uint64_t dimension() const { return layout_.dimension(); }

    cdouble amplitude(std::uint64_t basis) const { return amps_[basis]; }

    double norm_squared() const {
        double s = 0.0;
        for (const cdouble &a : amps_) s += std::norm(a);
        return s;
    }

  private:
    RegisterLayout layout_;
    std::vector<cdouble> amps_;

    friend StateVector apply_hadamard_all(const StateVector &, const std::string &);
    friend StateVector apply_function_oracle(const StateVector &,
                                             const std::vector<std::string> &,
                                             const std::string &, const FunctionTable &);
    friend StateVector apply_diffusion(const StateVector &, const std::string &);
    friend StateVector apply_branch_phases(const StateVector &, const std::string &,
                                           const std::vector<double> &);
    friend StateVector collapse(const StateVector &, std::uint64_t, std::uint64_t);
};

/// Result of measuring a register (or one of its bits): the sampled value,
/// its exact pre-sampling Born probability, and the renormalized collapsed
/// state supported on the measured-value subspace.
struct MeasurementOutcome {
    std::string reg;
    int bit = 0; // 0 for whole-register measurements, else the 1-based index
    std::string value;
    double probability = 0.0;
    StateVector collapsed;
};

namespace detail {

inline void hadamard_bit(std::vector<cdouble> &amps, std::uint64_t mask) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::uint64_t dim = amps.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & mask) continue;
        const cdouble a = amps[i];
        const cdouble b = amps[i | mask];
        amps[i] = (a + b) * inv_sqrt2;
        amps[i | mask] = (a - b) * inv_sqrt2;
    }
}

} // namespace detail

inline StateVector apply_hadamard_all(const StateVector &state, const std::string &reg) {
    StateVector out = state;
    const int w = state.layout().width(reg);
    for (int b = 1; b <= w; ++b)
        detail::hadamard_bit(out.amps_, state.layout().bit_mask(reg, b));
    return out;
}

/// |in>|o> -> |in>|o XOR table(in)>, extended linearly; self-inverse.
inline StateVector apply_function_oracle(const StateVector &state,
                                         const std::vector<std::string> &inputs,
                                         const std::string &output, const FunctionTable &table) {
    const RegisterLayout &layout = state.layout();
    if (static_cast<int>(inputs.size()) != static_cast<int>(table.input_widths.size()))
        throw IncompleteOracle("oracle '" + table.id + "' expects " +
                               std::to_string(table.input_widths.size()) + " input registers");
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        if (layout.width(inputs[j]) != table.input_widths[j])
            throw IncompleteOracle("register '" + inputs[j] + "' does not match input width " +
                                   std::to_string(table.input_widths[j]) + " of '" + table.id +
                                   "'");
    }
    if (layout.width(output) != table.output_width)
        throw IncompleteOracle("register '" + output + "' does not match the output width of '" +
                               table.id + "'");
    table.validate();

    const int out_shift = layout.shift(output);
    const std::uint64_t dim = layout.dimension();
    std::vector<cdouble> out(dim);
    for (std::uint64_t i = 0; i < dim; ++i) {
        std::uint64_t joint = 0;
        for (std::size_t j = 0; j < inputs.size(); ++j) {
            joint = (joint << table.input_widths[j]) | layout.extract(inputs[j], i);
        }
        out[i ^ (table(joint) << out_shift)] = state.amplitudes()[i];
    }
    return StateVector(layout, std::move(out));
}

/// Inversion about the mean, 2|u><u| - I, on one register.
inline StateVector apply_diffusion(const StateVector &state, const std::string &reg) {
    const RegisterLayout &layout = state.layout();
    const std::uint64_t reg_mask = layout.mask(reg);
    const int shift = layout.shift(reg);
    const std::uint64_t reg_dim = std::uint64_t{1} << layout.width(reg);
    const std::uint64_t dim = layout.dimension();

    StateVector out = state;
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & reg_mask) continue;
        cdouble mean{0.0, 0.0};
        for (std::uint64_t v = 0; v < reg_dim; ++v) mean += out.amps_[base | (v << shift)];
        mean *= 2.0 / static_cast<double>(reg_dim);
        for (std::uint64_t v = 0; v < reg_dim; ++v) {
            cdouble &a = out.amps_[base | (v << shift)];
            a = mean - a;
        }
    }
    return out;
}

/// Renormalized projection onto {i : i & mask == pattern}. Used by the
/// measurement operations and directly by tests that condition on outcomes.
inline StateVector collapse(const StateVector &state, std::uint64_t mask, std::uint64_t pattern) {
    double p = 0.0;
    for (std::uint64_t i = 0; i < state.dimension(); ++i)
        if ((i & mask) == pattern) p += std::norm(state.amplitudes()[i]);
    if (p <= 0.0) throw InvalidValue("projection onto a zero-probability subspace");
    StateVector out = state;
    const double scale = 1.0 / std::sqrt(p);
    for (std::uint64_t i = 0; i < out.dimension(); ++i) {
        if ((i & mask) == pattern)
            out.amps_[i] *= scale;
        else
            out.amps_[i] = cdouble{0.0, 0.0};
    }
    return out;
}

/// Probability that the register (or one bit of it) holds `value`.
inline double outcome_probability(const StateVector &state, const std::string &reg,
                                  std::uint64_t value) {
    const std::uint64_t mask = state.layout().mask(reg);
    const std::uint64_t pattern = value << state.layout().shift(reg);
    double p = 0.0;
    for (std::uint64_t i = 0; i < state.dimension(); ++i)
        if ((i & mask) == pattern) p += std::norm(state.amplitudes()[i]);
    return p;
}

inline MeasurementOutcome measure_register(const StateVector &state, const std::string &reg,
                                           RandomStream &rng) {
    const RegisterLayout &layout = state.layout();
    const int w = layout.width(reg);
    const int shift = layout.shift(reg);
    const std::uint64_t reg_dim = std::uint64_t{1} << w;

    std::vector<double> probs(reg_dim, 0.0);
    for (std::uint64_t i = 0; i < state.dimension(); ++i)
        probs[(i >> shift) & (reg_dim - 1)] += std::norm(state.amplitudes()[i]);

    const double r = rng.uniform01();
    double acc = 0.0;
    std::uint64_t picked = reg_dim - 1;
    for (std::uint64_t v = 0; v < reg_dim; ++v) {
        acc += probs[v];
        if (r < acc) {
            picked = v;
            break;
        }
    }
    // Guard against accumulated rounding pushing acc just below r at the tail.
    while (probs[picked] <= 0.0) --picked;

    return MeasurementOutcome{reg, 0, bits_to_string(picked, w), probs[picked],
                              collapse(state, layout.mask(reg), picked << shift)};
    }

inline MeasurementOutcome measure_bit(const StateVector &state, const std::string &reg, int bit,
                                      RandomStream &rng) {
    const std::uint64_t mask = state.layout().bit_mask(reg, bit);
    double p1 = 0.0;
    for (std::uint64_t i = 0; i < state.dimension(); ++i)
        if (i & mask) p1 += std::norm(state.amplitudes()[i]);
    const int outcome = rng.uniform01() < p1 ? 1 : 0;
    const double p = outcome ? p1 : 1.0 - p1;
    return MeasurementOutcome{reg, bit, outcome ? "1" : "0", p,
                              collapse(state, mask, outcome ? mask : 0)};
}

/// Exact Born marginal over the joint values of the listed registers.
/// Keys are the registers' bit strings joined with "," (a single bit string
/// when one register is listed); every joint value appears, including those
/// of probability zero.
inline std::map<std::string, double> distribution(const StateVector &state,
                                                  const std::vector<std::string> &regs) {
    const RegisterLayout &layout = state.layout();
    std::vector<int> widths;
    std::vector<int> shifts;
    int joint_width = 0;
    for (const auto &r : regs) {
        widths.push_back(layout.width(r));
        shifts.push_back(layout.shift(r));
        joint_width += layout.width(r);
    }

    std::vector<double> probs(std::uint64_t{1} << joint_width, 0.0);
    for (std::uint64_t i = 0; i < state.dimension(); ++i) {
        std::uint64_t key = 0;
        for (std::size_t j = 0; j < regs.size(); ++j) {
            key = (key << widths[j]) |
                  ((i >> shifts[j]) & ((std::uint64_t{1} << widths[j]) - 1));
        }
        probs[key] += std::norm(state.amplitudes()[i]);
    }

    std::map<std::string, double> result;
    for (std::uint64_t key = 0; key < probs.size(); ++key) {
        std::string label;
        int consumed = 0;
        for (std::size_t j = 0; j < regs.size(); ++j) {
            consumed += widths[j];
            if (j) label += ',';
            label += bits_to_string((key >> (joint_width - consumed)) &
                                        ((std::uint64_t{1} << widths[j]) - 1),
                                    widths[j]);
        }
        result[label] = probs[key];
    }
    return result;
}

/// Diagonal of one qubit's reduced density operator: (p0, p1).
inline std::pair<double, double> populations(const StateVector &state, const std::string &reg,
                                             int bit) {
    const std::uint64_t mask = state.layout().bit_mask(reg, bit);
    double p0 = 0.0, p1 = 0.0;
    for (std::uint64_t i = 0; i < state.dimension(); ++i) {
        if (i & mask)
            p1 += std::norm(state.amplitudes()[i]);
        else
            p0 += std::norm(state.amplitudes()[i]);
    }
    return {p0, p1};
}

/// Fidelity <phi|rho_reg|phi> of the register's reduced state with a pure
/// state given by its 2^width amplitudes.
inline double register_fidelity(const StateVector &state, const std::string &reg,
                                const std::vector<cdouble> &pure) {
    const RegisterLayout &layout = state.layout();
    const int w = layout.width(reg);
    const int shift = layout.shift(reg);
    const std::uint64_t reg_dim = std::uint64_t{1} << w;
    const std::uint64_t reg_mask = layout.mask(reg);
    if (pure.size() != reg_dim)
        throw InvalidValue("pure-state amplitude count does not match register '" + reg + "'");

    double fidelity = 0.0;
    for (std::uint64_t base = 0; base < state.dimension(); ++base) {
        if (base & reg_mask) continue;
        cdouble inner{0.0, 0.0};
        for (std::uint64_t v = 0; v < reg_dim; ++v)
            inner += std::conj(pure[v]) * state.amplitudes()[base | (v << shift)];
        fidelity += std::norm(inner);
    }
    return fidelity;
}

/// Multiply every basis branch by a phase that depends only on the given
/// register's value. Models an incoherent (randomly phased) preparation.
inline StateVector apply_branch_phases(const StateVector &state, const std::string &reg,
                                       const std::vector<double> &phases) {
    const RegisterLayout &layout = state.layout();
    const int shift = layout.shift(reg);
    const std::uint64_t reg_dim = std::uint64_t{1} << layout.width(reg);
    if (phases.size() != reg_dim)
        throw InvalidValue("need one phase per value of register '" + reg + "'");
    StateVector out = state;
    for (std::uint64_t i = 0; i < out.dimension(); ++i) {
        const double phi = phases[(i >> shift) & (reg_dim - 1)];
        out.amps_[i] *= cdouble{std::cos(phi), std::sin(phi)};
    }
    return out;
}

/// Max-norm distance after aligning global phase on the largest amplitude.
inline double distance_up_to_global_phase(const StateVector &a, const StateVector &b) {
    if (!(a.layout() == b.layout())) throw InvalidValue("states live on different layouts");
    std::uint64_t anchor = 0;
    double best = -1.0;
    for (std::uint64_t i = 0; i < a.dimension(); ++i) {
        if (std::norm(a.amplitudes()[i]) > best) {
            best = std::norm(a.amplitudes()[i]);
            anchor = i;
        }
    }
    cdouble phase{1.0, 0.0};
    if (std::abs(b.amplitudes()[anchor]) > 0.0 && std::abs(a.amplitudes()[anchor]) > 0.0) {
        phase = (a.amplitudes()[anchor] / b.amplitudes()[anchor]);
        phase /= std::abs(phase);
    }
    double dist = 0.0;
    for (std::uint64_t i = 0; i < a.dimension(); ++i)
        dist = std::max(dist, std::abs(a.amplitudes()[i] - phase * b.amplitudes()[i]));
    return dist;
}

} // namespace relq
