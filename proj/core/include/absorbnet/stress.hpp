#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absorbnet/domain.hpp"

namespace absorbnet {

/// Per-region time series of incoming load and capacity on a shared month
/// axis. The residual lambda_i(t) = load - capacity is always derived, never
/// stored, so the identity holds exactly.
class StressProfile {
public:
    StressProfile(std::vector<RegionId> regions, std::vector<MonthIndex> months,
                  std::vector<double> load, std::vector<double> capacity);

    std::size_t region_count() const { return regions_.size(); }
    std::size_t month_count() const { return months_.size(); }
    const std::vector<RegionId>& regions() const { return regions_; }
    const std::vector<MonthIndex>& months() const { return months_; }

    std::size_t month_index(const MonthIndex& t) const;

    double load(std::size_t region, std::size_t t) const {
        return load_[t * regions_.size() + region];
    }
    double capacity(std::size_t region, std::size_t t) const {
        return capacity_[t * regions_.size() + region];
    }
    double residual(std::size_t region, std::size_t t) const {
        return load(region, t) - capacity(region, t);
    }

private:
    std::vector<RegionId> regions_;
    std::vector<MonthIndex> months_;
    std::vector<double> load_;      // month-major [t][region]
    std::vector<double> capacity_;  // month-major [t][region]
};

/// Physician-to-patient capacity model: C = P / rho.
struct CapacityModel {
    enum class Source { physician_counts, explicit_capacity };

    double rho = 1.0;
    Source source = Source::physician_counts;
};

double capacity_from_physicians(std::int64_t physicians, const CapacityModel& model);

/// Per-timestep and aggregate absorptivity. r(t) is undefined (nullopt) at
/// timesteps with zero baseline stress; those are excluded from the aggregate.
struct AbsorptivityResult {
    std::vector<MonthIndex> months;
    std::vector<double> lambda_baseline;           // mean positive-part stress, no network
    std::vector<double> lambda_networked;          // mean residual stress with the network
    std::vector<std::optional<double>> r_series;   // defined iff lambda_baseline > 0
    double r_total = 0.0;                          // mean of defined r(t)
    std::size_t skipped_timesteps = 0;
};

}  // namespace absorbnet
