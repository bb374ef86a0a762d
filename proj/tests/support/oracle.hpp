#pragma once

#include <optional>
#include <vector>

#include "absorbnet/flow_network.hpp"
#include "absorbnet/stress.hpp"

namespace absorbnet::testing {

struct OracleResult {
    std::vector<double> lambda_baseline;   // per region, positive part
    std::vector<double> lambda_networked;  // per region residual
    double mean_baseline = 0.0;
    double mean_networked = 0.0;
    std::optional<double> r;
};

/// Naive per-edge bookkeeping re-derivation of the redistribution model.
/// Deliberately shares no code with the engine: inflows are re-summed from
/// scratch for every (sender, receiver) pair and the absorbed-share branches
/// are spelled out literally.
OracleResult oracle_absorptivity(const FlowNetwork& net, const StressProfile& profile,
                                 std::size_t t, bool clamp);

}  // namespace absorbnet::testing
