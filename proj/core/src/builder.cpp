#include "absorbnet/builder.hpp"

#include <algorithm>
#include <set>

#include "absorbnet/errors.hpp"

namespace absorbnet {

int VisitMatrix::count(const std::string& patient, const RegionId& region) const {
    const auto pit = visits.find(patient);
    if (pit == visits.end()) return 0;
    const auto rit = pit->second.find(region);
    return rit == pit->second.end() ? 0 : rit->second;
}

std::map<MonthIndex, VisitMatrix> build_visit_matrices(const std::vector<VisitRecord>& records,
                                                       const CohortFilter& filter) {
    std::map<MonthIndex, VisitMatrix> out;
    for (const VisitRecord& rec : records) {
        if (!matches(filter, rec)) continue;
        auto [it, inserted] = out.try_emplace(rec.month, VisitMatrix{rec.month, {}});
        it->second.visits[rec.patient_id][rec.region] += 1;
    }
    return out;
}

FlowNetwork build_flow_network(const std::map<MonthIndex, VisitMatrix>& matrices,
                               const MonthIndex& t, int v_max) {
    if (v_max < 1) throw ConfigError("flow builder: v_max must be >= 1");

    std::set<RegionId> region_set;
    for (const auto& [month, matrix] : matrices) {
        for (const auto& [patient, row] : matrix.visits) {
            for (const auto& [region, count] : row) region_set.insert(region);
        }
    }
    std::vector<RegionId> nodes(region_set.begin(), region_set.end());
    const std::size_t n = nodes.size();
    if (n == 0) throw StructuralError("flow builder: no regions in corpus");

    const auto index_of = [&](const RegionId& id) {
        return static_cast<std::size_t>(
            std::lower_bound(nodes.begin(), nodes.end(), id) - nodes.begin());
    };

    std::vector<double> weights(n * n, 0.0);
    std::vector<double> totals(n, 0.0);

    const auto mit = matrices.find(t);
    if (mit != matrices.end()) {
        for (const auto& [patient, row] : mit->second.visits) {
            for (const auto& [region, count] : row) {
                totals[index_of(region)] += static_cast<double>(count);
            }
        }

        for (const auto& [patient, row] : mit->second.visits) {
            // Regions this patient reaches within the window, as a set: the
            // contribution is one per (patient, i, j) no matter how many later
            // months qualify.
            std::set<std::size_t> later;
            for (int v = 1; v <= v_max; ++v) {
                const auto lit = matrices.find(t.plus_months(v));
                if (lit == matrices.end()) continue;
                const auto pit = lit->second.visits.find(patient);
                if (pit == lit->second.visits.end()) continue;
                for (const auto& [region, count] : pit->second) later.insert(index_of(region));
            }
            if (later.empty()) continue;
            for (const auto& [region, count] : row) {
                const std::size_t i = index_of(region);
                for (std::size_t j : later) weights[i * n + j] += 1.0;
            }
        }
    }

    return FlowNetwork(t.str(), std::move(nodes), std::move(weights), std::move(totals));
}

namespace {

struct Bucket {
    std::int64_t order;  // chronological sort key
    std::string label;
};

Bucket bucket_for(const MonthIndex& m, AggregationScheme scheme) {
    if (scheme == AggregationScheme::yearly) {
        return {m.year(), std::to_string(m.year())};
    }
    // December belongs to the following winter: the season year is the year
    // of the bucket's January/February.
    static const char* names[4] = {"DJF", "MAM", "JJA", "SON"};
    const int season_year = m.month() == 12 ? m.year() + 1 : m.year();
    const int season = m.month() == 12 ? 0 : (m.month() % 12) / 3;
    return {static_cast<std::int64_t>(season_year) * 4 + season,
            std::to_string(season_year) + "-" + names[season]};
}

}  // namespace

std::vector<FlowNetwork> aggregate_flows(const std::vector<FlowNetwork>& series,
                                         AggregationScheme scheme) {
    std::vector<FlowNetwork> out;
    if (series.empty()) return out;

    const auto& nodes = series.front().nodes();
    std::map<std::int64_t, std::pair<std::string, std::size_t>> buckets;  // order -> (label, out idx)

    for (const FlowNetwork& net : series) {
        if (net.nodes() != nodes) {
            throw StructuralError("aggregate: networks must share one node list");
        }
        const MonthIndex m = MonthIndex::parse(net.period());
        const Bucket bucket = bucket_for(m, scheme);

        const auto it = buckets.find(bucket.order);
        if (it == buckets.end()) {
            buckets.emplace(bucket.order, std::make_pair(bucket.label, out.size()));
            out.emplace_back(bucket.label, nodes, net.weights(), net.incoming_totals());
        } else {
            FlowNetwork& acc = out[it->second.second];
            std::vector<double> weights = acc.weights();
            std::vector<double> totals = acc.incoming_totals();
            for (std::size_t k = 0; k < weights.size(); ++k) weights[k] += net.weights()[k];
            for (std::size_t k = 0; k < totals.size(); ++k) totals[k] += net.incoming_totals()[k];
            acc = FlowNetwork(bucket.label, nodes, std::move(weights), std::move(totals));
        }
    }

    // out was filled in series order; re-order chronologically by bucket key
    std::vector<FlowNetwork> ordered;
    ordered.reserve(out.size());
    for (const auto& [order, entry] : buckets) ordered.push_back(std::move(out[entry.second]));
    return ordered;
}

// --- ICD-10 service classification -----------------------------------------

namespace {

struct CodeRange {
    const char* lo;  // three-character category, inclusive
    const char* hi;
};

// Chronic: Alzheimer's, asthma, atherosclerosis, cancers, stroke, chronic
// liver disease, COPD, diabetes, hypertension, heart disease, kidney disease,
// other circulatory conditions.
constexpr CodeRange kChronicRanges[] = {
    {"G30", "G30"}, {"J45", "J46"}, {"I70", "I70"}, {"C00", "C97"}, {"I60", "I69"},
    {"K70", "K70"}, {"K73", "K74"}, {"J40", "J47"}, {"E10", "E14"}, {"I10", "I10"},
    {"I12", "I12"}, {"I15", "I15"}, {"I00", "I09"}, {"I11", "I11"}, {"I13", "I13"},
    {"I20", "I51"}, {"N00", "N07"}, {"N17", "N19"}, {"N25", "N27"}, {"I71", "I78"},
    {"I80", "I99"}};

// Acute respiratory: COVID-19 U-codes, acute upper respiratory infections,
// influenza and pneumonia, other acute lower respiratory infections.
constexpr CodeRange kAcuteRanges[] = {{"U07", "U07"}, {"U00", "U00"}, {"U09", "U09"},
                                      {"U49", "U49"}, {"U50", "U50"}, {"U85", "U85"},
                                      {"J00", "J06"}, {"J09", "J18"}, {"J20", "J22"}};

bool in_any_range(const std::string& category, const CodeRange* ranges, std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
        if (category.compare(ranges[k].lo) >= 0 && category.compare(ranges[k].hi) <= 0) {
            return true;
        }
    }
    return false;
}

}  // namespace

ServiceClass classify_service(const std::string& code) {
    const std::string normalized = normalize_icd10(code);
    if (normalized.size() < 3 || normalized[1] == '.' || normalized[2] == '.') {
        throw ParseError("icd10: code too short to classify: '" + code + "'");
    }
    const std::string category = normalized.substr(0, 3);
    // Chronic wins on overlap; the published ranges do not actually overlap
    // across the two classes.
    if (in_any_range(category, kChronicRanges, std::size(kChronicRanges))) {
        return ServiceClass::chronic;
    }
    if (in_any_range(category, kAcuteRanges, std::size(kAcuteRanges))) {
        return ServiceClass::acute_respiratory;
    }
    return ServiceClass::other;
}

}  // namespace absorbnet
