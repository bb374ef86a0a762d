#pragma once

#include <vector>

#include "absorbnet/domain.hpp"
#include "absorbnet/flow_network.hpp"

namespace absorbnet::testing {

/// Exhaustive transit enumeration over every (patient, src, dst, offset)
/// tuple, straight from the raw records. Used to pin down the production
/// builder on small corpora.
FlowNetwork brute_force_flow_network(const std::vector<VisitRecord>& records,
                                     const CohortFilter& filter, const MonthIndex& t, int v_max);

}  // namespace absorbnet::testing
