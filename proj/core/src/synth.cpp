#include "absorbnet/synth.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "absorbnet/errors.hpp"
#include "absorbnet/rng.hpp"

namespace absorbnet {

namespace {

// Real ICD-10 codes from the ranges the classifier knows; the generator's
// intent must survive classify_service.
constexpr const char* kChronicCodes[] = {"G30.9",  "J45.40", "I70.0", "C34.90",
                                         "I63.9",  "K70.30", "J44.9", "E11.9",
                                         "I10",    "I25.10", "N18.9", "I73.9"};
constexpr const char* kAcuteCodes[] = {"U07.1", "J06.9", "J12.82", "J18.9", "J20.9", "J10.1"};
constexpr const char* kOtherCodes[] = {"Z00.00", "M54.5", "H52.4", "K21.9", "R51"};

void check_fraction(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ConfigError(std::string("synth: ") + name + " out of [0,1]");
    }
}

template <std::size_t N>
void check_mixture(const std::array<double, N>& mix, const char* name) {
    double sum = 0.0;
    for (double v : mix) {
        if (!(v >= 0.0)) throw ConfigError(std::string("synth: negative weight in ") + name);
        sum += v;
    }
    if (std::fabs(sum - 1.0) > 1e-9) {
        throw ConfigError(std::string("synth: ") + name + " must sum to 1");
    }
}

}  // namespace

void validate(const SynthParams& params) {
    if (params.n_regions < 1 || params.n_regions > 900) {
        throw ConfigError("synth: n_regions must be in [1, 900]");
    }
    if (params.n_patients < 1) throw ConfigError("synth: n_patients must be >= 1");
    if (params.n_months < 1) throw ConfigError("synth: n_months must be >= 1");
    if (!(params.mean_visits > 0.0)) throw ConfigError("synth: mean_visits must be positive");
    if (params.visit_cap < 1) throw ConfigError("synth: visit_cap must be >= 1");
    check_fraction(params.transit_prob, "transit_prob");
    check_fraction(params.p_chronic, "p_chronic");
    check_fraction(params.p_acute, "p_acute");
    if (!(params.hub_bias >= 0.0)) throw ConfigError("synth: hub_bias must be >= 0");
    if (!(params.physicians_baseline >= 0.0)) {
        throw ConfigError("synth: physicians_baseline must be >= 0");
    }
    check_mixture(params.age_mix, "age_mix");
    check_mixture(params.race_mix, "race_mix");
    if (!is_valid_state_code(params.state)) {
        throw ConfigError("synth: unknown state code '" + params.state + "'");
    }
}

std::vector<double> region_weights(const SynthParams& params) {
    std::vector<double> w(params.n_regions);
    double sum = 0.0;
    for (int i = 0; i < params.n_regions; ++i) {
        w[i] = std::pow(static_cast<double>(i + 1), -params.hub_bias);
        sum += w[i];
    }
    for (double& v : w) v /= sum;
    return w;
}

SynthCorpus generate_corpus(const SynthParams& params) {
    validate(params);
    Rng rng(derive_seed(params.seed, {0x5e3d}));

    SynthCorpus corpus;

    std::vector<RegionId> region_ids;
    region_ids.reserve(params.n_regions);
    for (int i = 0; i < params.n_regions; ++i) {
        char zip[16];
        std::snprintf(zip, sizeof(zip), "%03d", 100 + i);
        region_ids.emplace_back(zip, params.state);
    }

    const std::vector<double> weights = region_weights(params);

    // Regions on a ring; hubs get proportionally more physicians so capacity
    // tracks where patients concentrate.
    corpus.regions.reserve(params.n_regions);
    for (int i = 0; i < params.n_regions; ++i) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(params.n_regions);
        RegionInfo info{region_ids[i], 42.0 + 1.5 * std::sin(angle),
                        -75.0 + 1.5 * std::cos(angle),
                        {}};
        const double scaled_baseline =
            params.physicians_baseline * weights[i] * static_cast<double>(params.n_regions);
        for (int m = 0; m < params.n_months; ++m) {
            const auto count =
                std::llround(scaled_baseline + params.physicians_trend * static_cast<double>(m));
            info.physicians[params.start_month.plus_months(m)] = std::max<std::int64_t>(0, count);
        }
        validate_region_info(info);
        corpus.regions.push_back(std::move(info));
    }

    const int id_width = params.n_patients >= 100000 ? 7 : 6;
    for (int k = 0; k < params.n_patients; ++k) {
        char pid[16];
        std::snprintf(pid, sizeof(pid), "p%0*d", id_width, k + 1);

        const auto age = static_cast<AgeGroup>(rng.weighted_index(
            std::vector<double>(params.age_mix.begin(), params.age_mix.end())));
        const auto race = static_cast<Race>(rng.weighted_index(
            std::vector<double>(params.race_mix.begin(), params.race_mix.end())));

        const std::size_t home = rng.weighted_index(weights);
        std::size_t current = home;

        for (int m = 0; m < params.n_months; ++m) {
            const MonthIndex month = params.start_month.plus_months(m);
            const int visit_count = std::min(rng.poisson(params.mean_visits), params.visit_cap);
            for (int v = 0; v < visit_count; ++v) {
                VisitRecord rec{pid, month, region_ids[current], age, race, {}};
                if (rng.next_unit() < params.p_chronic) {
                    rec.service_codes.push_back(
                        kChronicCodes[rng.below(std::size(kChronicCodes))]);
                }
                if (rng.next_unit() < params.p_acute) {
                    rec.service_codes.push_back(kAcuteCodes[rng.below(std::size(kAcuteCodes))]);
                }
                if (rec.service_codes.empty() && rng.next_unit() < 0.3) {
                    rec.service_codes.push_back(kOtherCodes[rng.below(std::size(kOtherCodes))]);
                }
                corpus.visits.push_back(std::move(rec));
            }
            // next month's location: usually home, sometimes a different region
            if (params.n_regions > 1 && rng.next_unit() < params.transit_prob) {
                std::size_t next = current;
                while (next == current) next = rng.weighted_index(weights);
                current = next;
            } else {
                current = home;
            }
        }
    }

    return corpus;
}

}  // namespace absorbnet
