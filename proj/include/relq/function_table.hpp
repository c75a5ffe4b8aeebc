#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "relq/errors.hpp"

namespace relq {

/// Explicit truth table of a black-box function f : {0,1}^w1 x ... -> {0,1}^m.
/// Inputs are concatenated with the first input most significant, matching
/// register order, so entry (k, x) lives at index (k << width(x)) | x.
struct FunctionTable {
    std::string id;
    std::vector<int> input_widths;
    int output_width = 0;
    std::vector<std::uint64_t> values;

    int total_input_width() const {
        return std::accumulate(input_widths.begin(), input_widths.end(), 0);
    }

    std::uint64_t domain_size() const { return std::uint64_t{1} << total_input_width(); }

    std::uint64_t operator()(std::uint64_t joint_input) const { return values[joint_input]; }

    /// Every joint input covered, every output within the output width.
    void validate() const {
        if (output_width < 1) throw IncompleteOracle("table '" + id + "' has no output bits");
        if (values.size() != domain_size())
            throw IncompleteOracle("table '" + id + "' covers " + std::to_string(values.size()) +
                                   " of " + std::to_string(domain_size()) + " inputs");
        const std::uint64_t bound = std::uint64_t{1} << output_width;
        for (std::uint64_t v : values) {
            if (v >= bound)
                throw IncompleteOracle("table '" + id + "' output " + std::to_string(v) +
                                       " exceeds " + std::to_string(output_width) + " bits");
        }
    }
};

} // namespace relq
