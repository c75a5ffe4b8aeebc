#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relq/bits.hpp"
#include "relq/errors.hpp"

namespace relq {

struct Register {
    std::string name;
    int width = 0;
};

/// Ordered qubit registers of a multi-register system.
///
/// Basis-state indexing: registers occupy blocks from most significant to
/// least significant in declaration order, and within a register bit 1 is the
/// most significant qubit. A layout {K:2, X:2, V:1} therefore indexes basis
/// state |k1 k2, x1 x2, v> as (k << 3) | (x << 1) | v.
class RegisterLayout {
  public:
    static constexpr int kMaxQubits = 24;

    explicit RegisterLayout(std::vector<Register> registers) : registers_(std::move(registers)) {
        for (const auto &r : registers_) {
            if (r.width < 1)
                throw InvalidValue("register '" + r.name + "' must have width >= 1");
            for (const auto &other : registers_) {
                if (&other != &r && other.name == r.name)
                    throw InvalidValue("duplicate register name '" + r.name + "'");
            }
            total_ += r.width;
        }
        if (total_ > kMaxQubits)
            throw InvalidValue("layout exceeds the " + std::to_string(kMaxQubits) + "-qubit cap");
        int below = total_;
        for (const auto &r : registers_) {
            below -= r.width;
            shifts_.push_back(below);
        }
    }

    int total_qubits() const { return total_; }
    std::uint64_t dimension() const { return std::uint64_t{1} << total_; }
    const std::vector<Register> &registers() const { return registers_; }

    bool has(const std::string &name) const {
        for (const auto &r : registers_)
            if (r.name == name) return true;
        return false;
    }

    int index_of(const std::string &name) const {
        for (std::size_t i = 0; i < registers_.size(); ++i)
            if (registers_[i].name == name) return static_cast<int>(i);
        throw UnknownRegister("no register named '" + name + "'");
    }

    int width(const std::string &name) const {
        return registers_[static_cast<std::size_t>(index_of(name))].width;
    }

    /// Number of qubits to the right of (less significant than) the register.
    int shift(const std::string &name) const {
        return shifts_[static_cast<std::size_t>(index_of(name))];
    }

    std::uint64_t mask(const std::string &name) const {
        int i = index_of(name);
        std::uint64_t m = (std::uint64_t{1} << registers_[static_cast<std::size_t>(i)].width) - 1;
        return m << shifts_[static_cast<std::size_t>(i)];
    }

    /// Value held by a register within a global basis index.
    std::uint64_t extract(const std::string &name, std::uint64_t basis) const {
        int i = index_of(name);
        std::uint64_t m = (std::uint64_t{1} << registers_[static_cast<std::size_t>(i)].width) - 1;
        return (basis >> shifts_[static_cast<std::size_t>(i)]) & m;
    }

    /// Global mask of one qubit (1-based bit index, bit 1 most significant).
    std::uint64_t bit_mask(const std::string &name, int bit) const {
        int i = index_of(name);
        int w = registers_[static_cast<std::size_t>(i)].width;
        if (bit < 1 || bit > w)
            throw InvalidBit("bit " + std::to_string(bit) + " outside register '" + name +
                             "' of width " + std::to_string(w));
        return std::uint64_t{1} << (shifts_[static_cast<std::size_t>(i)] + w - bit);
    }

    bool operator==(const RegisterLayout &other) const {
        if (registers_.size() != other.registers_.size()) return false;
        for (std::size_t i = 0; i < registers_.size(); ++i)
            if (registers_[i].name != other.registers_[i].name ||
                registers_[i].width != other.registers_[i].width)
                return false;
        return true;
    }

  private:
    std::vector<Register> registers_;
    std::vector<int> shifts_;
    int total_ = 0;
};

} // namespace relq
