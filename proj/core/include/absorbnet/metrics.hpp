#pragma once

#include <map>
#include <optional>
#include <vector>

#include "absorbnet/domain.hpp"
#include "absorbnet/flow_network.hpp"

namespace absorbnet {

struct NetworkMetrics {
    double sigma = 0.0;          // cross-region flow ratio
    double phi = 0.0;            // total cross-region flow mass
    double density = 0.0;        // E / (N * (N-1))
    double heterogeneity = 0.0;  // sigma_in * sigma_out / <s>
    std::optional<double> avg_distance_km;
    std::size_t edge_count = 0;
    std::size_t node_count = 0;
};

struct CrossRegionRatio {
    double sigma;
    double phi;
};

/// sigma = off-diagonal mass over total incoming patients. Throws
/// UndefinedMetricError when the incoming totals sum to zero.
CrossRegionRatio cross_region_ratio(const FlowNetwork& net);

/// Directed edge density over N(N-1) ordered pairs, self-loops excluded.
/// Requires N >= 2.
double density(const FlowNetwork& net);

/// Unweighted off-diagonal in/out degrees per node (edges with weight > 0).
struct DegreeStats {
    std::vector<int> in_degree;
    std::vector<int> out_degree;
    double in_variance = 0.0;   // population variance
    double out_variance = 0.0;  // population variance
    std::size_t edge_count = 0;
};

DegreeStats degree_stats(const FlowNetwork& net);

/// H = sigma_in * sigma_out / <s> with population standard deviations of the
/// unweighted degree distributions and <s> = E/N. Zero for edgeless networks.
double heterogeneity(const FlowNetwork& net);

enum class DistanceWeighting { flow_weighted, unweighted };

/// Great-circle distance in km (mean Earth radius 6371.0088 km).
double haversine_km(double lat_a, double lon_a, double lat_b, double lon_b);

/// Mean great-circle distance over off-diagonal edges with positive weight,
/// flow-weighted by default. nullopt when there is no cross-region flow.
/// Throws StructuralError listing regions that lack coordinates.
std::optional<double> average_flow_distance(
    const FlowNetwork& net, const std::map<RegionId, RegionInfo>& regions,
    DistanceWeighting weighting = DistanceWeighting::flow_weighted);

/// All structural measures in one pass; distance only when region metadata is
/// supplied.
NetworkMetrics compute_metrics(const FlowNetwork& net,
                               const std::map<RegionId, RegionInfo>* regions = nullptr,
                               DistanceWeighting weighting = DistanceWeighting::flow_weighted);

}  // namespace absorbnet
