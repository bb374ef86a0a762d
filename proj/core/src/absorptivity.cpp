#include "absorbnet/absorptivity.hpp"

#include <algorithm>

#include "absorbnet/errors.hpp"

namespace absorbnet {

void require_aligned(const FlowNetwork& net, const StressProfile& profile) {
    if (net.nodes() != profile.regions()) {
        throw StructuralError("absorptivity: network nodes and profile regions differ");
    }
}

BaselineStress baseline_stress(const StressProfile& profile, std::size_t t) {
    const std::size_t n = profile.region_count();
    BaselineStress out;
    out.per_region.resize(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out.per_region[i] = std::max(0.0, profile.residual(i, t));
        sum += out.per_region[i];
    }
    out.mean = sum / static_cast<double>(n);
    return out;
}

double absorbed_fraction(double lambda_j, double inflow_j) {
    if (lambda_j >= 0.0) return 0.0;
    if (inflow_j <= 0.0) return 1.0;  // vacuous: nothing flows in
    return std::min(1.0, -lambda_j / inflow_j);
}

NetworkedStress networked_stress(const FlowNetwork& net, const StressProfile& profile,
                                 std::size_t t, bool clamp) {
    require_aligned(net, profile);
    const std::size_t n = net.size();

    const std::vector<double> inflow = net.column_inflows();
    std::vector<double> share(n);
    for (std::size_t j = 0; j < n; ++j) {
        share[j] = absorbed_fraction(profile.residual(j, t), inflow[j]);
    }

    NetworkedStress out;
    out.per_region.resize(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double absorbed = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) absorbed += net.weight(i, j) * share[j];
        }
        double residual = std::max(0.0, profile.residual(i, t)) - absorbed;
        if (clamp) residual = std::max(0.0, residual);
        out.per_region[i] = residual;
        sum += residual;
    }
    out.mean = sum / static_cast<double>(n);
    return out;
}

std::optional<double> absorptivity_at(double lambda_baseline, double lambda_networked) {
    if (lambda_baseline <= 0.0) return std::nullopt;
    return 1.0 - lambda_networked / lambda_baseline;
}

double absorptivity_total(const std::vector<std::optional<double>>& r_series,
                          std::size_t* skipped) {
    double sum = 0.0;
    std::size_t defined = 0;
    for (const auto& r : r_series) {
        if (r) {
            sum += *r;
            ++defined;
        }
    }
    if (skipped != nullptr) *skipped = r_series.size() - defined;
    if (defined == 0) {
        throw UndefinedMetricError("absorptivity: no timestep with positive baseline stress");
    }
    return sum / static_cast<double>(defined);
}

AbsorptivityResult compute_absorptivity(const FlowNetwork& net, const StressProfile& profile,
                                        bool clamp) {
    require_aligned(net, profile);
    AbsorptivityResult result;
    result.months = profile.months();
    const std::size_t steps = profile.month_count();
    result.lambda_baseline.resize(steps);
    result.lambda_networked.resize(steps);
    result.r_series.resize(steps);
    for (std::size_t t = 0; t < steps; ++t) {
        const BaselineStress base = baseline_stress(profile, t);
        const NetworkedStress with_net = networked_stress(net, profile, t, clamp);
        result.lambda_baseline[t] = base.mean;
        result.lambda_networked[t] = with_net.mean;
        result.r_series[t] = absorptivity_at(base.mean, with_net.mean);
    }
    result.r_total = absorptivity_total(result.r_series, &result.skipped_timesteps);
    return result;
}

}  // namespace absorbnet
