#pragma once

#include <map>
#include <string>
#include <vector>

#include "absorbnet/domain.hpp"
#include "absorbnet/flow_network.hpp"

namespace absorbnet {

/// Sparse patient-x-region visit counts for one month. Only positive counts
/// are stored.
struct VisitMatrix {
    MonthIndex month;
    std::map<std::string, std::map<RegionId, int>> visits;  // patient -> region -> m_kj

    int count(const std::string& patient, const RegionId& region) const;
};

/// Counts filtered records into per-month visit matrices. Months with no
/// surviving records are absent from the result.
std::map<MonthIndex, VisitMatrix> build_visit_matrices(const std::vector<VisitRecord>& records,
                                                       const CohortFilter& filter = {});

/// Applies the transit rule for month t: a patient active in region i during t
/// and in region j during any of t+1 .. t+v_max contributes exactly one unit
/// to w_ij(t), regardless of how many later months qualify. The rule covers
/// i == j (revisit within the window), stored on the diagonal. Incoming
/// totals are the raw visit counts landing in each region during t.
///
/// The node list is the sorted union of regions over all matrices, so every
/// monthly network built from one corpus shares it.
FlowNetwork build_flow_network(const std::map<MonthIndex, VisitMatrix>& matrices,
                               const MonthIndex& t, int v_max = 3);

enum class AggregationScheme { seasonal, yearly };

/// Element-wise sums of weight matrices and incoming totals per calendar
/// bucket. Input networks must be monthly (period label "YYYY-MM") and share
/// one node list. Seasonal buckets are DJF/MAM/JJA/SON with December assigned
/// to the following winter; yearly buckets follow the calendar year. Output
/// is in chronological bucket order, labeled "YYYY" or "YYYY-DJF".
std::vector<FlowNetwork> aggregate_flows(const std::vector<FlowNetwork>& series,
                                         AggregationScheme scheme);

}  // namespace absorbnet
