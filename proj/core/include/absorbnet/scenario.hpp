#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "absorbnet/absorptivity.hpp"
#include "absorbnet/flow_network.hpp"
#include "absorbnet/rng.hpp"

namespace absorbnet {

struct ScenarioConfig {
    enum class Kind { pandemic, identical };

    Kind kind = Kind::identical;
    double stressed_fraction = 0.5;    // share of regions overloaded per repetition
    double overload = 0.10;            // stressed regions run at (1+overload)*C
    double unstressed_headroom = 0.10; // spare regions keep headroom*C free
    int repetitions = 100;
    std::uint64_t seed = 0;
    bool clamp = true;
};

void validate(const ScenarioConfig& cfg);

struct SweepSpec {
    enum class Characteristic { sigma, density, heterogeneity };

    Characteristic characteristic = Characteristic::sigma;
    // Target values, strictly monotone. For heterogeneity the grid holds
    // rewiring step counts (H itself cannot be dialed to an exact value);
    // the realized H is reported per point.
    std::vector<double> grid;
    int repetitions = 100;
    std::uint64_t seed = 0;
};

void validate(const SweepSpec& spec);

/// Both phase networks evaluated against one shared stress profile.
struct PandemicComparison {
    AbsorptivityResult pre;
    AbsorptivityResult during;
};

PandemicComparison run_pandemic_scenario(const FlowNetwork& net_pre,
                                         const FlowNetwork& net_during,
                                         const StressProfile& profile, bool clamp = true);

struct IdenticalStressResult {
    double mean_r = 0.0;
    double stddev_r = 0.0;  // sample standard deviation over repetitions
    std::size_t repetitions = 0;
    std::size_t skipped = 0;  // repetitions with zero baseline stress
};

/// One Monte-Carlo repetition: overload a random stressed_fraction of the
/// regions by overload*C, give the rest unstressed_headroom*C spare, and
/// evaluate r through the engine. The caller owns the RNG stream.
std::optional<double> identical_stress_once(const FlowNetwork& net,
                                            const std::vector<double>& capacities,
                                            const ScenarioConfig& cfg, Rng& rng);

/// Full repetition loop. Repetition k draws from the stream derived from
/// (cfg.seed, k), so results are independent of threading and ordering.
IdenticalStressResult run_identical_stress(const FlowNetwork& net,
                                           const std::vector<double>& capacities,
                                           const ScenarioConfig& cfg, int threads = 1);

/// Scales every off-diagonal weight so the cross-region ratio hits the
/// target exactly; the zero pattern (hence D and unweighted H) is untouched.
FlowNetwork perturb_sigma(const FlowNetwork& net, double target_sigma);

/// Adds edges uniformly at random among absent ordered pairs until the edge
/// count reaches round(target_density * N(N-1)); new edges get the mean
/// existing cross-region weight and all off-diagonal weights are rescaled to
/// restore the original sigma. Density may only grow.
FlowNetwork perturb_density(const FlowNetwork& net, double target_density, std::uint64_t seed);

struct RewireResult {
    FlowNetwork net;
    int accepted = 0;
    bool saturated = false;  // no valid move found within N^2 attempts
    double in_degree_variance_before = 0.0;
    double in_degree_variance_after = 0.0;
};

/// Performs up to `steps` hub-preferential retargeting moves: an existing
/// edge (u,v) becomes (u,h) with h drawn proportionally to current in-degree,
/// skipping self-loops, duplicates and moves that would lower the in-degree
/// variance. Edge count, out-degrees and total off-diagonal weight are all
/// invariant, so D and sigma are preserved without rescaling.
RewireResult perturb_heterogeneity(const FlowNetwork& net, int steps, std::uint64_t seed);

struct SweepPoint {
    double target = 0.0;    // grid value (step count for heterogeneity)
    double realized = 0.0;  // measured characteristic after perturbation
    double mean_r = 0.0;
    double stddev_r = 0.0;
    std::size_t skipped = 0;
};

/// One-characteristic-at-a-time sweep: perturb to each grid point, then run
/// the identical-stress protocol. Streams derive from (seed, point, rep), so
/// the curve is reproducible and schedule-independent.
std::vector<SweepPoint> run_sweep(const FlowNetwork& net, const std::vector<double>& capacities,
                                  const SweepSpec& spec, const ScenarioConfig& cfg,
                                  int threads = 1);

}  // namespace absorbnet
