#include "absorbnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "absorbnet/errors.hpp"

namespace absorbnet {

CrossRegionRatio cross_region_ratio(const FlowNetwork& net) {
    double total_incoming = 0.0;
    for (double w : net.incoming_totals()) total_incoming += w;
    if (total_incoming <= 0.0) {
        throw UndefinedMetricError("cross-region ratio: total incoming patients is zero");
    }
    const double phi = net.offdiagonal_sum();
    return {phi / total_incoming, phi};
}

double density(const FlowNetwork& net) {
    const std::size_t n = net.size();
    if (n < 2) throw UndefinedMetricError("density: needs at least two nodes");
    return static_cast<double>(net.edge_count()) / (static_cast<double>(n) * (n - 1));
}

DegreeStats degree_stats(const FlowNetwork& net) {
    const std::size_t n = net.size();
    DegreeStats stats;
    stats.in_degree.assign(n, 0);
    stats.out_degree.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && net.weight(i, j) > 0.0) {
                ++stats.out_degree[i];
                ++stats.in_degree[j];
                ++stats.edge_count;
            }
        }
    }
    const auto population_variance = [n](const std::vector<int>& deg) {
        double mean = 0.0;
        for (int d : deg) mean += d;
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (int d : deg) var += (d - mean) * (d - mean);
        return var / static_cast<double>(n);
    };
    stats.in_variance = population_variance(stats.in_degree);
    stats.out_variance = population_variance(stats.out_degree);
    return stats;
}

double heterogeneity(const FlowNetwork& net) {
    const DegreeStats stats = degree_stats(net);
    if (stats.edge_count == 0) return 0.0;
    const double mean_degree =
        static_cast<double>(stats.edge_count) / static_cast<double>(net.size());
    return std::sqrt(stats.in_variance) * std::sqrt(stats.out_variance) / mean_degree;
}

double haversine_km(double lat_a, double lon_a, double lat_b, double lon_b) {
    constexpr double kEarthRadiusKm = 6371.0088;
    constexpr double kDegToRad = std::numbers::pi / 180.0;
    const double dlat = (lat_b - lat_a) * kDegToRad;
    const double dlon = (lon_b - lon_a) * kDegToRad;
    const double sin_lat = std::sin(dlat / 2.0);
    const double sin_lon = std::sin(dlon / 2.0);
    double a = sin_lat * sin_lat +
               std::cos(lat_a * kDegToRad) * std::cos(lat_b * kDegToRad) * sin_lon * sin_lon;
    // guard the sqrt against rounding just past [0, 1]
    a = std::clamp(a, 0.0, 1.0);
    return kEarthRadiusKm * 2.0 * std::atan2(std::sqrt(a), std::sqrt(1.0 - a));
}

std::optional<double> average_flow_distance(const FlowNetwork& net,
                                            const std::map<RegionId, RegionInfo>& regions,
                                            DistanceWeighting weighting) {
    const std::size_t n = net.size();

    std::string missing;
    const auto coords = [&](std::size_t i) -> const RegionInfo* {
        const auto it = regions.find(net.node(i));
        return it == regions.end() ? nullptr : &it->second;
    };
    for (std::size_t i = 0; i < n; ++i) {
        bool active = false;
        for (std::size_t j = 0; j < n && !active; ++j) {
            if (i != j && (net.weight(i, j) > 0.0 || net.weight(j, i) > 0.0)) active = true;
        }
        if (active && coords(i) == nullptr) {
            if (!missing.empty()) missing += ", ";
            missing += net.node(i).zip3();
        }
    }
    if (!missing.empty()) {
        throw StructuralError("average distance: regions without coordinates: " + missing);
    }

    double weighted_sum = 0.0;
    double weight_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double w = i != j ? net.weight(i, j) : 0.0;
            if (w <= 0.0) continue;
            const RegionInfo* a = coords(i);
            const RegionInfo* b = coords(j);
            const double d = haversine_km(a->lat, a->lon, b->lat, b->lon);
            if (weighting == DistanceWeighting::flow_weighted) {
                weighted_sum += w * d;
                weight_sum += w;
            } else {
                weighted_sum += d;
                weight_sum += 1.0;
            }
        }
    }
    if (weight_sum <= 0.0) return std::nullopt;
    return weighted_sum / weight_sum;
}

NetworkMetrics compute_metrics(const FlowNetwork& net,
                               const std::map<RegionId, RegionInfo>* regions,
                               DistanceWeighting weighting) {
    NetworkMetrics m;
    m.node_count = net.size();
    m.edge_count = net.edge_count();
    const CrossRegionRatio ratio = cross_region_ratio(net);
    m.sigma = ratio.sigma;
    m.phi = ratio.phi;
    m.density = density(net);
    m.heterogeneity = heterogeneity(net);
    if (regions != nullptr) {
        m.avg_distance_km = average_flow_distance(net, *regions, weighting);
    }
    return m;
}

}  // namespace absorbnet
