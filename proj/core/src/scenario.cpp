#include "absorbnet/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <thread>

#include "absorbnet/errors.hpp"
#include "absorbnet/metrics.hpp"

namespace absorbnet {

void validate(const ScenarioConfig& cfg) {
    const auto fraction = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!fraction(cfg.stressed_fraction)) {
        throw ConfigError("scenario: stressed_fraction out of [0,1]");
    }
    if (!fraction(cfg.overload)) throw ConfigError("scenario: overload out of [0,1]");
    if (!fraction(cfg.unstressed_headroom)) {
        throw ConfigError("scenario: unstressed_headroom out of [0,1]");
    }
    if (cfg.repetitions < 1) throw ConfigError("scenario: repetitions must be >= 1");
}

void validate(const SweepSpec& spec) {
    if (spec.grid.empty()) throw ConfigError("sweep: empty grid");
    for (std::size_t i = 1; i < spec.grid.size(); ++i) {
        if (!(spec.grid[i] > spec.grid[i - 1])) {
            throw ConfigError("sweep: grid must be strictly increasing");
        }
    }
    if (spec.repetitions < 1) throw ConfigError("sweep: repetitions must be >= 1");
}

PandemicComparison run_pandemic_scenario(const FlowNetwork& net_pre,
                                         const FlowNetwork& net_during,
                                         const StressProfile& profile, bool clamp) {
    require_aligned(net_pre, profile);
    require_aligned(net_during, profile);
    return {compute_absorptivity(net_pre, profile, clamp),
            compute_absorptivity(net_during, profile, clamp)};
}

namespace {

// round half-up, as in |stressed_fraction * N|
std::size_t half_up(double x) { return static_cast<std::size_t>(std::floor(x + 0.5)); }

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

struct RepetitionStats {
    double mean = 0.0;
    double stddev = 0.0;
    std::size_t defined = 0;
};

RepetitionStats summarize_reps(const std::vector<std::optional<double>>& rs) {
    RepetitionStats stats;
    double sum = 0.0;
    for (const auto& r : rs) {
        if (r) {
            sum += *r;
            ++stats.defined;
        }
    }
    if (stats.defined == 0) return stats;
    stats.mean = sum / static_cast<double>(stats.defined);
    if (stats.defined > 1) {
        double ss = 0.0;
        for (const auto& r : rs) {
            if (r) ss += (*r - stats.mean) * (*r - stats.mean);
        }
        stats.stddev = std::sqrt(ss / static_cast<double>(stats.defined - 1));
    }
    return stats;
}

}  // namespace

std::optional<double> identical_stress_once(const FlowNetwork& net,
                                            const std::vector<double>& capacities,
                                            const ScenarioConfig& cfg, Rng& rng) {
    const std::size_t n = net.size();
    if (capacities.size() != n) {
        throw StructuralError("identical stress: one capacity per network node required");
    }

    const std::size_t stressed_count = half_up(cfg.stressed_fraction * static_cast<double>(n));
    const std::vector<std::size_t> stressed = rng.sample_without_replacement(n, stressed_count);
    std::vector<bool> is_stressed(n, false);
    for (std::size_t i : stressed) is_stressed[i] = true;

    // Stressed regions run overloaded; the rest keep headroom*C spare.
    std::vector<double> load(n);
    for (std::size_t i = 0; i < n; ++i) {
        load[i] = is_stressed[i] ? (1.0 + cfg.overload) * capacities[i]
                                 : (1.0 - cfg.unstressed_headroom) * capacities[i];
    }
    const StressProfile profile(net.nodes(), {MonthIndex(2000, 1)}, std::move(load), capacities);

    const BaselineStress base = baseline_stress(profile, 0);
    const NetworkedStress with_net = networked_stress(net, profile, 0, cfg.clamp);
    return absorptivity_at(base.mean, with_net.mean);
}

IdenticalStressResult run_identical_stress(const FlowNetwork& net,
                                           const std::vector<double>& capacities,
                                           const ScenarioConfig& cfg, int threads) {
    validate(cfg);
    if (std::all_of(capacities.begin(), capacities.end(), [](double c) { return c <= 0.0; })) {
        throw ConfigError("identical stress: every region has zero capacity");
    }

    const std::size_t reps = static_cast<std::size_t>(cfg.repetitions);
    std::vector<std::optional<double>> rs(reps);
    // same stream derivation as a sweep's grid point 0, so a single-point
    // sweep at the current value reproduces this loop exactly
    parallel_for(reps, threads, [&](std::size_t k) {
        Rng rng(derive_seed(cfg.seed, {0, k, 0}));
        rs[k] = identical_stress_once(net, capacities, cfg, rng);
    });

    const RepetitionStats stats = summarize_reps(rs);
    if (stats.defined == 0) {
        throw UndefinedMetricError("identical stress: no repetition produced defined r");
    }
    return {stats.mean, stats.stddev, reps, reps - stats.defined};
}

FlowNetwork perturb_sigma(const FlowNetwork& net, double target_sigma) {
    const CrossRegionRatio current = cross_region_ratio(net);
    if (current.phi <= 0.0) {
        throw PerturbationError("perturb sigma: no cross-region flow to scale");
    }
    if (!(target_sigma > 0.0) || !(target_sigma < 1.0)) {
        throw PerturbationError("perturb sigma: target must lie in (0,1)");
    }
    const double scale = target_sigma / current.sigma;
    const std::size_t n = net.size();
    std::vector<double> weights = net.weights();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) weights[i * n + j] *= scale;
        }
    }
    return net.with_weights(std::move(weights));
}

FlowNetwork perturb_density(const FlowNetwork& net, double target_density, std::uint64_t seed) {
    const std::size_t n = net.size();
    if (n < 2) throw PerturbationError("perturb density: needs at least two nodes");
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
    const std::size_t current_edges = net.edge_count();
    const auto target_edges = static_cast<std::size_t>(std::llround(target_density * pairs));
    if (target_edges > static_cast<std::size_t>(pairs)) {
        throw PerturbationError("perturb density: target above 1");
    }
    if (target_edges < current_edges) {
        throw PerturbationError("perturb density: decreasing density is unsupported");
    }
    if (target_edges == current_edges) return net;

    const double phi = net.offdiagonal_sum();
    if (phi <= 0.0 || current_edges == 0) {
        throw PerturbationError("perturb density: no existing cross-region flow to average");
    }
    const double mean_weight = phi / static_cast<double>(current_edges);

    std::vector<std::size_t> absent;  // flattened (i,j) cells, row-major
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && net.weight(i, j) <= 0.0) absent.push_back(i * n + j);
        }
    }
    const std::size_t add = target_edges - current_edges;

    Rng rng(seed);
    const std::vector<std::size_t> picks = rng.sample_without_replacement(absent.size(), add);

    std::vector<double> weights = net.weights();
    for (std::size_t p : picks) weights[absent[p]] = mean_weight;

    // restore sigma: the totals are untouched, so scaling phi back suffices
    const double scale = phi / (phi + static_cast<double>(add) * mean_weight);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) weights[i * n + j] *= scale;
        }
    }
    return net.with_weights(std::move(weights));
}

RewireResult perturb_heterogeneity(const FlowNetwork& net, int steps, std::uint64_t seed) {
    if (steps < 0) throw ConfigError("perturb heterogeneity: steps must be >= 0");
    const std::size_t n = net.size();
    if (net.edge_count() == 0) {
        throw PerturbationError("perturb heterogeneity: no off-diagonal edge to rewire");
    }

    std::vector<double> weights = net.weights();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<double> in_degree(n, 0.0);
    std::vector<int> out_degree(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && weights[i * n + j] > 0.0) {
                edges.emplace_back(i, j);
                in_degree[j] += 1.0;
                ++out_degree[i];
            }
        }
    }

    const auto population_variance = [n](const std::vector<double>& deg) {
        double mean = 0.0;
        for (double d : deg) mean += d;
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (double d : deg) var += (d - mean) * (d - mean);
        return var / static_cast<double>(n);
    };

    RewireResult result{net, 0, false, population_variance(in_degree), 0.0};
    Rng rng(seed);
    const std::size_t attempt_budget = n * n;

    while (result.accepted < steps) {
        bool moved = false;
        for (std::size_t attempt = 0; attempt < attempt_budget && !moved; ++attempt) {
            const std::size_t e = static_cast<std::size_t>(rng.below(edges.size()));
            const auto [u, v] = edges[e];
            const std::size_t h = rng.weighted_index(in_degree);
            if (h == u || h == v) continue;
            if (weights[u * n + h] > 0.0) continue;
            // mean in-degree is invariant, so the variance change has the
            // sign of (d_h - d_v + 1); reject strict decreases
            if (in_degree[h] < in_degree[v] - 1.0) continue;
            weights[u * n + h] = weights[u * n + v];
            weights[u * n + v] = 0.0;
            edges[e] = {u, h};
            in_degree[v] -= 1.0;
            in_degree[h] += 1.0;
            moved = true;
        }
        if (!moved) {
            result.saturated = true;
            break;
        }
        ++result.accepted;
    }

    result.in_degree_variance_after = population_variance(in_degree);
    result.net = net.with_weights(std::move(weights));
    return result;
}

std::vector<SweepPoint> run_sweep(const FlowNetwork& net, const std::vector<double>& capacities,
                                  const SweepSpec& spec, const ScenarioConfig& cfg, int threads) {
    validate(spec);
    validate(cfg);

    std::vector<SweepPoint> curve(spec.grid.size());
    for (std::size_t g = 0; g < spec.grid.size(); ++g) {
        const double target = spec.grid[g];
        FlowNetwork perturbed = [&] {
            switch (spec.characteristic) {
                case SweepSpec::Characteristic::sigma:
                    return perturb_sigma(net, target);
                case SweepSpec::Characteristic::density:
                    return perturb_density(net, target, derive_seed(spec.seed, {g, 0, 1}));
                case SweepSpec::Characteristic::heterogeneity:
                default: {
                    const auto steps = static_cast<int>(std::llround(target));
                    if (steps < 0 || std::abs(target - steps) > 1e-9) {
                        throw ConfigError("sweep: heterogeneity grid must hold step counts");
                    }
                    return perturb_heterogeneity(net, steps, derive_seed(spec.seed, {g, 0, 1}))
                        .net;
                }
            }
        }();

        SweepPoint& point = curve[g];
        point.target = target;
        switch (spec.characteristic) {
            case SweepSpec::Characteristic::sigma:
                point.realized = cross_region_ratio(perturbed).sigma;
                break;
            case SweepSpec::Characteristic::density:
                point.realized = density(perturbed);
                break;
            case SweepSpec::Characteristic::heterogeneity:
                point.realized = heterogeneity(perturbed);
                break;
        }

        const std::size_t reps = static_cast<std::size_t>(spec.repetitions);
        std::vector<std::optional<double>> rs(reps);
        parallel_for(reps, threads, [&](std::size_t k) {
            Rng rng(derive_seed(spec.seed, {g, k, 0}));
            rs[k] = identical_stress_once(perturbed, capacities, cfg, rng);
        });
        const RepetitionStats stats = summarize_reps(rs);
        if (stats.defined == 0) {
            throw UndefinedMetricError("sweep: no defined repetition at grid point " +
                                       std::to_string(target));
        }
        point.mean_r = stats.mean;
        point.stddev_r = stats.stddev;
        point.skipped = reps - stats.defined;
    }
    return curve;
}

}  // namespace absorbnet
