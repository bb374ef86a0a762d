#pragma once

#include <optional>
#include <vector>

#include "absorbnet/flow_network.hpp"
#include "absorbnet/stress.hpp"

namespace absorbnet {

/// Per-region positive-part stress and its mean: the no-network baseline.
struct BaselineStress {
    std::vector<double> per_region;  // max(0, lambda_i)
    double mean = 0.0;
};

BaselineStress baseline_stress(const StressProfile& profile, std::size_t t);

/// Share of inflow into a region that its spare capacity absorbs. Zero when
/// the region is itself stressed; min(1, -lambda/m) otherwise. A spare region
/// with zero inflow absorbs "everything" vacuously (the share multiplies a
/// zero flow).
double absorbed_fraction(double lambda_j, double inflow_j);

/// Residual stress once flow-connected neighbors absorb their share. Each
/// node keeps max(0, lambda_i) minus the absorbed portion of its outflows;
/// with `clamp` (the default) per-node residuals never go below zero.
struct NetworkedStress {
    std::vector<double> per_region;
    double mean = 0.0;
};

NetworkedStress networked_stress(const FlowNetwork& net, const StressProfile& profile,
                                 std::size_t t, bool clamp = true);

/// r(t) = 1 - networked/baseline; undefined when the baseline is zero.
std::optional<double> absorptivity_at(double lambda_baseline, double lambda_networked);

/// Mean of r(t) over defined timesteps. Throws UndefinedMetricError when no
/// timestep has positive baseline stress.
double absorptivity_total(const std::vector<std::optional<double>>& r_series,
                          std::size_t* skipped = nullptr);

/// Full evaluation over the profile's month axis (or a contiguous subrange).
AbsorptivityResult compute_absorptivity(const FlowNetwork& net, const StressProfile& profile,
                                        bool clamp = true);

/// Checks that the network's node list equals the profile's region list.
void require_aligned(const FlowNetwork& net, const StressProfile& profile);

}  // namespace absorbnet
