#pragma once

#include <string>

namespace relq {

/// Outcome of one algorithm run against a known instance.
struct RunResult {
    std::string answer;      // bit string or verdict
    long oracle_queries = 0; // FunctionOracle applications in the executed circuit
    long iterations = 0;
    bool success = false; // decided against the known instance
};

} // namespace relq
