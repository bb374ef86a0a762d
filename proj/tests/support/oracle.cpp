#include "oracle.hpp"

#include "absorbnet/errors.hpp"

namespace absorbnet::testing {

OracleResult oracle_absorptivity(const FlowNetwork& net, const StressProfile& profile,
                                 std::size_t t, bool clamp) {
    if (net.nodes() != profile.regions()) {
        throw StructuralError("oracle: network nodes and profile regions differ");
    }
    const std::size_t n = net.size();
    OracleResult result;
    result.lambda_baseline.resize(n);
    result.lambda_networked.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        const double lambda_i = profile.load(i, t) - profile.capacity(i, t);
        result.lambda_baseline[i] = lambda_i > 0.0 ? lambda_i : 0.0;
    }

    for (std::size_t i = 0; i < n; ++i) {
        double absorbed = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double lambda_j = profile.load(j, t) - profile.capacity(j, t);
            // total inflow into j, re-summed from scratch
            double inflow_j = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) inflow_j += net.weight(k, j);
            }
            double share;
            if (lambda_j >= 0.0) {
                share = 0.0;
            } else if (inflow_j > 0.0 && -lambda_j < inflow_j) {
                share = -lambda_j / inflow_j;
            } else {
                share = 1.0;
            }
            absorbed += net.weight(i, j) * share;
        }
        double residual = result.lambda_baseline[i] - absorbed;
        if (clamp && residual < 0.0) residual = 0.0;
        result.lambda_networked[i] = residual;
    }

    double base_sum = 0.0;
    double net_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        base_sum += result.lambda_baseline[i];
        net_sum += result.lambda_networked[i];
    }
    result.mean_baseline = base_sum / static_cast<double>(n);
    result.mean_networked = net_sum / static_cast<double>(n);
    if (result.mean_baseline > 0.0) {
        result.r = 1.0 - result.mean_networked / result.mean_baseline;
    }
    return result;
}

}  // namespace absorbnet::testing
