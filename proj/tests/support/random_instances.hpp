#pragma once

#include <cstdint>
#include <vector>

#include "absorbnet/flow_network.hpp"
#include "absorbnet/rng.hpp"
#include "absorbnet/stress.hpp"

namespace absorbnet::testing {

/// Sorted synthetic node list: zip3s 100.., state NY.
std::vector<RegionId> make_nodes(std::size_t n);

/// Random sparse weighted network. Off-diagonal cells carry weight in
/// (0, max_weight] with probability edge_prob; diagonals likewise; incoming
/// totals are positive so sigma is always defined.
FlowNetwork random_network(Rng& rng, std::size_t n, double edge_prob, double max_weight = 50.0);

/// Random stress profile over the given nodes with residuals of mixed sign.
StressProfile random_profile(Rng& rng, const std::vector<RegionId>& nodes, std::size_t months);

}  // namespace absorbnet::testing
