#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "absorbnet/domain.hpp"

namespace absorbnet {

/// Knobs for the synthetic visit-corpus generator. Mixture orders follow the
/// enum orders (age: child/young/middle/old/unknown; race: asian/black/
/// hispanic/white/other/unknown).
struct SynthParams {
    int n_regions = 10;
    int n_patients = 1000;
    MonthIndex start_month{2020, 1};
    int n_months = 24;

    double mean_visits = 1.5;  // Poisson mean per patient-month
    int visit_cap = 10;        // truncation of the per-month draw
    double transit_prob = 0.05;
    double hub_bias = 1.0;  // power-law exponent over region ranks; 0 = uniform

    std::array<double, 5> age_mix{0.12, 0.25, 0.31, 0.31, 0.01};
    std::array<double, 6> race_mix{0.013, 0.08, 0.08, 0.41, 0.10, 0.317};
    double p_chronic = 0.02;  // per-record chance of carrying a chronic code
    double p_acute = 0.012;   // per-record chance of carrying an acute code

    double physicians_baseline = 120.0;  // per region, before hub scaling
    double physicians_trend = 0.5;       // added per elapsed month

    std::string state = "NY";
    std::uint64_t seed = 0;
};

void validate(const SynthParams& params);

struct SynthCorpus {
    std::vector<VisitRecord> visits;
    std::vector<RegionInfo> regions;
};

/// Deterministic synthetic corpus: hub-biased home regions, truncated-Poisson
/// monthly visit counts, occasional one-month relocations, demographics and
/// real ICD-10 codes drawn from the configured mixtures, and physician
/// headcounts following baseline + trend.
SynthCorpus generate_corpus(const SynthParams& params);

/// Hub-biased region selection weights (rank^(−hub_bias), normalized).
std::vector<double> region_weights(const SynthParams& params);

}  // namespace absorbnet
