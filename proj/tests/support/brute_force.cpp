#include "brute_force.hpp"

#include <map>
#include <set>
#include <string>

namespace absorbnet::testing {

FlowNetwork brute_force_flow_network(const std::vector<VisitRecord>& records,
                                     const CohortFilter& filter, const MonthIndex& t,
                                     int v_max) {
    std::set<std::string> patients;
    std::set<RegionId> regions;
    std::map<std::string, std::map<std::pair<std::int64_t, RegionId>, int>> counts;
    for (const VisitRecord& rec : records) {
        if (!matches(filter, rec)) continue;
        patients.insert(rec.patient_id);
        regions.insert(rec.region);
        counts[rec.patient_id][{rec.month.ordinal(), rec.region}] += 1;
    }

    const std::vector<RegionId> nodes(regions.begin(), regions.end());
    const std::size_t n = nodes.size();
    std::vector<double> weights(n * n, 0.0);
    std::vector<double> totals(n, 0.0);

    const auto visit_count = [&](const std::string& patient, const MonthIndex& month,
                                 const RegionId& region) {
        const auto pit = counts.find(patient);
        if (pit == counts.end()) return 0;
        const auto cit = pit->second.find({month.ordinal(), region});
        return cit == pit->second.end() ? 0 : cit->second;
    };

    for (const std::string& patient : patients) {
        for (std::size_t i = 0; i < n; ++i) {
            totals[i] += visit_count(patient, t, nodes[i]);
            for (std::size_t j = 0; j < n; ++j) {
                bool transit = false;
                for (int v = 1; v <= v_max && !transit; ++v) {
                    if (visit_count(patient, t, nodes[i]) >= 1 &&
                        visit_count(patient, t.plus_months(v), nodes[j]) >= 1) {
                        transit = true;
                    }
                }
                if (transit) weights[i * n + j] += 1.0;
            }
        }
    }

    return FlowNetwork(t.str(), nodes, std::move(weights), std::move(totals));
}

}  // namespace absorbnet::testing
